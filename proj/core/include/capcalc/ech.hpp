#pragma once

#include <string>
#include <vector>

#include "capcalc/rational.hpp"

namespace capcalc {
namespace ech {

// Triangle {x, y >= 0, x + a y <= A + a B}; the slant edge passes through
// (A, B).  A may be negative (the hidden-class rows anchor at A = -1); only
// the first-quadrant part is ever counted.
struct LatticeTriangle {
  Rat a;
  Int A, B;
};

struct LatticeCount {
  Int total;          // row-by-row count
  Int total_subdiv;   // five-region subdivision count (must agree)
  Int s;              // integral points on the slant edge
  Int A0, B0;         // first slant point (smallest x) in the quadrant
  Int A1, B1;         // last slant point (largest x)
};
LatticeCount lattice_count(const LatticeTriangle& t);

// k_{A,B}(a) = (A + Ba)/d with d minimal such that the count fits under
// (d+1)(d+2)/2; d_onesided uses count - (s-1) per the one-sided limits.
struct KResult {
  Rat k;
  Int d;
  Int d_onesided;
  Int count;
  Int s;
};
KResult k_AB(const Rat& a, const Int& A, const Int& B);

// Scan max of the one-sided values (A + Ba)/d_onesided over the window; a
// lower bound for the lattice capacity function.
struct KBound {
  Rat value;
  Int argA, argB;
  Int d;
};
KBound K_lower_bound(const Rat& a, const Int& A_max, const Int& B_max,
                     int jobs = 1);

// First `count` values m a + n b (m, n >= 0) in nondecreasing order.
std::vector<Rat> ech_sequence(const Rat& a, const Rat& b, int count);

struct TableReport {
  bool ok = true;
  int rows_checked = 0;
  std::vector<std::string> failures;
};
// Recomputes both counts and N(d) = (d+1)(d+2)/2 + s - 1 for every row of
// the contributing and hidden class tables.
TableReport verify_tables();

}  // namespace ech
}  // namespace capcalc
