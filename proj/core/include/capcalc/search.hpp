#pragma once

#include <utility>
#include <vector>

#include "capcalc/classes.hpp"
#include "capcalc/rational.hpp"

namespace capcalc {
namespace search {

// All nonincreasing integer vectors with sum a, square sum b and entries
// <= cap, by the backtracking recursion of the enumeration program
// (the degenerate input a = b = 0 yields the single vector (0)).
std::vector<std::vector<Int>> solutions_dio(const Int& a, const Int& b, const Int& cap);

// All ordered m with (d;m) Diophantine, ell(m) = ell(a), mu(d;m)(a) >= sqrt a,
// within the per-block perturbations of floor((d/sqrt a) w(a)).
std::vector<classes::ExceptionalClass> sol_at(const Rat& a, const Int& d);

// Union of sol_at over d = 1..d_max; empty d entries dropped.
std::vector<std::pair<Int, std::vector<classes::ExceptionalClass>>> sol_less(
    const Rat& a, const Int& d_max, int jobs = 1);

// Candidate classes obstructive somewhere on ]7+1/(k+1), 7+1/k[ other than
// z_k, d <= d_max: the Prelist template plus the tail filters.
std::vector<std::pair<Int, std::vector<classes::ExceptionalClass>>> inter_sol_less(
    int k, const Int& d_max, int jobs = 1);

// (D(z_k), D_k) per-interval d bounds; k in 1..8.
std::pair<Int, Int> default_bounds(int k);

Rat z_point(int k);  // 7 + 2/(2k+1)

}  // namespace search
}  // namespace capcalc
