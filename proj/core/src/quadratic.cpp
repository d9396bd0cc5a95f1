#include "capcalc/quadratic.hpp"

#include <vector>

namespace capcalc {

namespace {

const std::vector<unsigned long>& small_primes() {
  static std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 100000;
    std::vector<bool> sieve(limit + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

}  // namespace

std::pair<Int, Int> squarefree_decompose(const Int& n) {
  if (n < 0) throw std::domain_error("negative radicand");
  if (n == 0) return {0, 0};
  Int root;
  if (is_perfect_square(n, &root)) return {root, 1};
  Int s = 1, r = n;
  for (unsigned long p : small_primes()) {
    Int p2 = Int(p) * Int(p);
    if (p2 > r) break;
    if (!mpz_divisible_p(r.get_mpz_t(), p2.get_mpz_t())) continue;
    do {
      r /= p2;
      s *= Int(p);
    } while (mpz_divisible_p(r.get_mpz_t(), p2.get_mpz_t()));
    if (is_perfect_square(r, &root)) {
      s *= root;
      r = 1;
      break;
    }
  }
  // Remaining square factors would need a prime above 1e5, i.e. r > 1e10;
  // the radicands arising here stay below that.
  return {s, r};
}

Quad::Quad(Rat x, Rat y, Int r) : x_(std::move(x)), y_(std::move(y)), r_(std::move(r)) {
  if (r_ < 0) throw std::domain_error("negative radicand");
  if (y_ == 0 || r_ == 0) {
    y_ = 0;
    r_ = 0;
    return;
  }
  auto [s, rf] = squarefree_decompose(r_);
  if (rf <= 1) {  // perfect square: fold into the rational part
    x_ += y_ * Rat(s);
    y_ = 0;
    r_ = 0;
  } else {
    y_ *= Rat(s);
    r_ = rf;
  }
}

Quad Quad::sqrt_of_int(const Int& n) { return Quad(Rat(0), Rat(1), n); }

Quad Quad::sqrt_of_rat(const Rat& a) {
  if (a < 0) throw std::domain_error("sqrt of negative rational");
  return Quad(Rat(0), make_rat(1, a.get_den()), a.get_num() * a.get_den());
}

const Rat& Quad::as_rational() const {
  if (!is_rational()) throw std::domain_error("quadratic number is irrational");
  return x_;
}

int Quad::sign() const {
  if (y_ == 0) return sgn(x_);
  return -cmp_rat_vs_sqrt(-x_, y_, r_);
}

void Quad::require_same_field(const Quad& o) const {
  if (y_ != 0 && o.y_ != 0 && r_ != o.r_)
    throw std::domain_error("quadratic numbers over different radicands");
}

int Quad::cmp(const Quad& o) const {
  require_same_field(o);
  return (*this - o).sign();
}

Quad Quad::operator+(const Quad& o) const {
  require_same_field(o);
  Int r = (y_ != 0) ? r_ : o.r_;
  return Quad(x_ + o.x_, y_ + o.y_, r);
}

Quad Quad::operator-(const Quad& o) const { return *this + (-o); }

Quad Quad::operator-() const { return Quad(-x_, -y_, r_); }

Quad Quad::operator*(const Quad& o) const {
  require_same_field(o);
  Int r = (y_ != 0) ? r_ : o.r_;
  Rat nx = x_ * o.x_ + y_ * o.y_ * Rat(r);
  Rat ny = x_ * o.y_ + y_ * o.x_;
  return Quad(nx, ny, r);
}

Quad Quad::operator*(const Rat& s) const { return Quad(x_ * s, y_ * s, r_); }

std::string Quad::to_string() const {
  if (is_rational()) return rat_to_string(x_);
  Int s = lcm(x_.get_den(), y_.get_den());
  Int p = x_.get_num() * (s / x_.get_den());
  Int q = y_.get_num() * (s / y_.get_den());
  Int aq = abs(q);
  std::string core = "(" + p.get_str() + (q >= 0 ? "+" : "-") + aq.get_str() +
                     "*sqrt(" + r_.get_str() + "))";
  if (s == 1) return core;
  return core + "/" + s.get_str();
}

std::string Quad::decimal(int digits) const {
  if (is_rational()) return decimal_string(x_, digits);
  int guard = 6;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + guard));
  Int sq = isqrt(r_ * scale * scale);
  Rat approx = x_ + y_ * Rat(sq, scale);
  return decimal_string(approx, digits);
}

}  // namespace capcalc
