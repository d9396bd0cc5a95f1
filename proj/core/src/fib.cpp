#include "capcalc/fib.hpp"

#include <mutex>
#include <shared_mutex>

namespace capcalc {
namespace fib {

namespace {

std::vector<Int>& fib_table() {
  static std::vector<Int> t = {0, 1};
  return t;
}
std::shared_mutex fib_mutex;

Int fib_nonneg(long n) {
  {
    std::shared_lock lock(fib_mutex);
    auto& t = fib_table();
    if (static_cast<size_t>(n) < t.size()) return t[static_cast<size_t>(n)];
  }
  std::unique_lock lock(fib_mutex);
  auto& t = fib_table();
  while (t.size() <= static_cast<size_t>(n))
    t.push_back(t[t.size() - 1] + t[t.size() - 2]);
  return t[static_cast<size_t>(n)];
}

Int exact_third(const Int& v, const char* what) {
  if (v % 3 != 0) throw std::logic_error(std::string(what) + " not divisible by 3");
  return v / 3;
}

}  // namespace

Int fib(long n) {
  if (n >= 0) return fib_nonneg(n);
  Int f = fib_nonneg(-n);
  return (-n) % 2 == 0 ? Int(-f) : f;  // f_{-n} = (-1)^{n+1} f_n
}

Int g(long n) { return fib(2 * n - 1); }
Int h(long n) { return fib(2 * n); }
Int lucas(long k) { return fib(k - 1) + fib(k + 1); }
Int bigF(long k) { return exact_third(fib(4 * k), "f_{4k}"); }
Int bigL(long k) { return exact_third(lucas(4 * k + 2), "lucas_{4k+2}"); }
Int bigH(long k) { return exact_third(fib(2 * k) * fib(2 * k + 2), "f_{2k}f_{2k+2}"); }

Rat QuadraticFibIdentity::eval(long s) const {
  Rat acc = 0;
  for (const auto& [ij, coef] : a)
    acc += coef * Rat(fib(s + ij.first) * fib(s + ij.second));
  for (const auto& [j, coef] : b) acc += coef * Rat(fib(2 * s + j));
  acc += (s % 2 == 0 ? c : -c);
  return acc;
}

long QuadraticFibIdentity::min_index() const {
  long m = 0;
  for (const auto& [ij, coef] : a) {
    if (coef == 0) continue;
    m = std::min({m, static_cast<long>(ij.first), static_cast<long>(ij.second)});
  }
  for (const auto& [j, coef] : b) {
    if (coef == 0) continue;
    m = std::min(m, static_cast<long>(j));
  }
  return m;
}

IdentityCheck verify_identity(const QuadraticFibIdentity& id, long s_max) {
  if (s_max < 3) throw std::invalid_argument("verify_identity requires s_max >= 3");
  const long s_min = std::max(0L, -id.min_index());
  IdentityCheck out;
  bool homogeneous_linear = id.a.empty() && id.c == 0;
  std::size_t points_needed = homogeneous_linear ? 2 : 3;

  bool full = true;
  long tested = 0;
  for (long s = s_min; s <= s_max; ++s, ++tested)
    if (id.eval(s) != 0) full = false;
  if (tested < static_cast<long>(points_needed))
    throw std::invalid_argument("not enough valid evaluation points");
  out.holds = full;

  bool cert = true;
  for (std::size_t i = 0; i < points_needed; ++i) {
    long s = s_min + static_cast<long>(i);
    out.certificate.push_back(s);
    if (id.eval(s) != 0) cert = false;
  }
  out.certificate_agrees = (cert == full);
  return out;
}

namespace {

void check(SuiteResult& r, const std::string& name, bool ok) {
  r.items.emplace_back(name, ok);
  if (!ok) r.all_ok = false;
}

}  // namespace

SuiteResult flh_identities() {
  SuiteResult r;
  for (long k = 0; k <= 30; ++k) {
    check(r, "F_{k+1}=L_k+F_k @k=" + std::to_string(k),
          bigF(k + 1) == bigL(k) + bigF(k));
    check(r, "L_{k+1}=5F_{k+1}+L_k @k=" + std::to_string(k),
          bigL(k + 1) == 5 * bigF(k + 1) + bigL(k));
    check(r, "H_{k+1}=H_k+F_{k+1} @k=" + std::to_string(k),
          bigH(k + 1) == bigH(k) + bigF(k + 1));
    check(r, "L_k=5H_k+1 @k=" + std::to_string(k), bigL(k) == 5 * bigH(k) + 1);
    check(r, "F_{k+1}^2-F_kF_{k+2}=1 @k=" + std::to_string(k),
          bigF(k + 1) * bigF(k + 1) - bigF(k) * bigF(k + 2) == 1);
  }
  // H_{k+1} = sum_{i=1}^{k+1} F_i
  Int acc = 0;
  bool sum_ok = true;
  for (long i = 1; i <= 31; ++i) {
    acc += bigF(i);
    if (bigH(i) != acc) sum_ok = false;
  }
  check(r, "H_k = sum F_i", sum_ok);
  return r;
}

}  // namespace fib
}  // namespace capcalc
