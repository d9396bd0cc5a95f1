#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "capcalc/rational.hpp"

namespace capcalc {
namespace fib {

// Fibonacci numbers; negative index via f_{-n} = (-1)^{n+1} f_n.
Int fib(long n);
Int g(long n);      // odd-index f_{2n-1}; g(0) = 1
Int h(long n);      // even-index f_{2n}
Int lucas(long k);  // f_{k-1} + f_{k+1}
Int bigF(long k);   // f_{4k} / 3
Int bigL(long k);   // lucas(4k+2) / 3
Int bigH(long k);   // f_{2k} f_{2k+2} / 3

// Q(s) = sum a_{ij} f_{s+i} f_{s+j} + sum b_j f_{2s+j} + (-1)^s c
struct QuadraticFibIdentity {
  std::map<std::pair<int, int>, Rat> a;
  std::map<int, Rat> b;
  Rat c;

  Rat eval(long s) const;
  long min_index() const;  // most negative shift appearing in f_{s+i}
};

struct IdentityCheck {
  bool holds = false;                // Q(s) == 0 for every tested s
  std::vector<long> certificate;     // the three (or two) witness points
  bool certificate_agrees = false;   // three-point test gave the same verdict
};

// Full check over s = 0..s_max (skipping s with negative indices), plus the
// three-point certificate (two points when homogeneous linear).
IdentityCheck verify_identity(const QuadraticFibIdentity& id, long s_max);

struct SuiteResult {
  bool all_ok = true;
  std::vector<std::pair<std::string, bool>> items;
};

// The F/L/H identity family checked for k = 0..30.
SuiteResult flh_identities();

}  // namespace fib
}  // namespace capcalc
