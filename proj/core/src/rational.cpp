#include "capcalc/rational.hpp"

#include <cctype>

namespace capcalc {

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(Int(s), 1);
      r.canonicalize();
      return r;
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    Rat r(n, d);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (...) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

// floor((u/v) sqrt(N)) = floor(isqrt(u^2 N) / v) for u, v > 0.
Int floor_mul_sqrt(const Rat& c, const Int& N) {
  if (c < 0) throw std::domain_error("floor_mul_sqrt: negative coefficient");
  if (c == 0 || N == 0) return 0;
  Int u = c.get_num(), v = c.get_den();
  Int t = isqrt(u * u * N);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), v.get_mpz_t());
  return q;
}

Int ceil_mul_sqrt(const Rat& c, const Int& N) {
  Int f = floor_mul_sqrt(c, N);
  // exact when (c sqrt N)^2 = f^2, i.e. c^2 N is the square f^2.
  Rat sq = Rat(N) * c * c;
  if (sq.get_den() == 1 && sq.get_num() == f * f) return f;
  return f + 1;
}

Int round_mul_sqrt(const Rat& c, const Int& N) {
  Int f = floor_mul_sqrt(c, N);
  // compare c sqrt(N) against f + 1/2:  4 c^2 N  vs  (2f+1)^2
  Rat lhs = Rat(4) * c * c * Rat(N);
  Rat rhs = Rat((2 * f + 1) * (2 * f + 1));
  return (lhs < rhs) ? f : f + 1;
}

int cmp_rat_vs_sqrt(const Rat& x, const Rat& c, const Int& N) {
  // sign of x - c sqrt(N)
  if (N < 0) throw std::domain_error("negative radicand");
  if (c == 0 || N == 0) return sgn(x);
  int sx = sgn(x), sc = sgn(c);
  if (sx >= 0 && sc < 0) return 1;
  if (sx <= 0 && sc > 0) return -1;
  if (sx < 0 && sc < 0) return -cmp_rat_vs_sqrt(-x, -c, N);
  // both positive: compare x^2 vs c^2 N
  Rat lhs = x * x, rhs = c * c * Rat(N);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::string decimal_string(const Rat& r, int digits) {
  bool neg = r < 0;
  Rat a = neg ? Rat(-r) : r;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Int num = a.get_num() * scale, den = a.get_den();
  Int q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) q += 1;
  Int ip = q / scale, fp = q % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  std::string out = (neg && (ip != 0 || fp != 0) ? "-" : "") + ip.get_str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace capcalc
