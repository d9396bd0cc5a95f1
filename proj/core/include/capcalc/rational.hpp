#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace capcalc {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline Rat rat_of(long n) { return Rat(n); }

// Serialized form is "p/q", or just "n" for integers.
std::string rat_to_string(const Rat& r);
Rat parse_rat(const std::string& s);

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n, Int* root = nullptr);

// Exact floor/ceil/round of c*sqrt(N) for rational c >= 0 and integer N >= 0.
Int floor_mul_sqrt(const Rat& c, const Int& N);
Int ceil_mul_sqrt(const Rat& c, const Int& N);
Int round_mul_sqrt(const Rat& c, const Int& N);

// sign of x - c*sqrt(N); c may be any rational, N >= 0.
int cmp_rat_vs_sqrt(const Rat& x, const Rat& c, const Int& N);

// Decimal rendering with the given number of fractional digits (round half up).
std::string decimal_string(const Rat& r, int digits);

}  // namespace capcalc
