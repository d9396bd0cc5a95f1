#pragma once

#include <vector>

#include "capcalc/rational.hpp"

namespace capcalc {
namespace cfrac {

// Finite continued fraction [l0; l1, ..., lN].  Canonical form has lN >= 2
// unless N = 0; the relaxed form with lN = 1 is needed for the block
// bookkeeping of the mirror identities, so terms are stored verbatim.
struct ContinuedFraction {
  std::vector<Int> terms;

  bool canonical() const;
  Rat value() const;
  Int term_sum() const;  // = length of the weight expansion for a >= 1
};

ContinuedFraction cf_expand(const Rat& a);  // canonical; requires a > 0

// [.., lN] <-> [.., lN - 1, 1]
ContinuedFraction relaxed(const ContinuedFraction& cf);
ContinuedFraction canonicalize(const ContinuedFraction& cf);

// Terms reversed.  Operates on the term list verbatim; combine with
// relaxed()/canonicalize() to pick a normalization.
ContinuedFraction mirror(const ContinuedFraction& cf);

// Convergents p_k/q_k for k = -1..N; p[0] = p_{-1} = 1, q[0] = q_{-1} = 0.
struct Convergents {
  std::vector<Int> p, q;
};
Convergents convergents(const ContinuedFraction& cf);

// alpha_0 = 1, alpha_1 = -l0, alpha_j = alpha_{j-2} - l_{j-1} alpha_{j-1};
// beta starts (0, 1) with the same recursion.  Sizes are N + 2.
struct AlphaBetaSeq {
  std::vector<Int> alpha, beta;
};
AlphaBetaSeq alpha_beta(const ContinuedFraction& cf);

// Farey expansion rho_0 = 0, rho_1, ..., rho_N = a built by mediants
// (Stern-Brocot descent).  Works for all a > 0 including a < 1.
std::vector<Rat> farey_expansion(const Rat& a);

// Farey weights u_i = lambda_i / lambda_1 from the backward label rule on
// the mediant-intersection graph.
std::vector<Rat> farey_weights(const Rat& a);

}  // namespace cfrac
}  // namespace capcalc
