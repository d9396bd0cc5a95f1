#pragma once

#include <utility>
#include <vector>

#include "capcalc/cfrac.hpp"
#include "capcalc/rational.hpp"

namespace capcalc {
namespace weights {

// Weight expansion of a = p/q >= 1 in block form
// (x_0^{l0}, x_1^{l1}, ..., x_N^{lN}) with x_0 = 1 and multiplicities equal
// to the continued fraction terms of a.
struct WeightExpansion {
  Rat a;
  std::vector<std::pair<Rat, Int>> blocks;  // (x_j, l_j)

  Int length() const;                 // M = sum of multiplicities
  std::vector<Rat> flatten() const;
  std::vector<Int> normalized() const;  // q * w(a), integer entries
};

WeightExpansion weight_expansion(const Rat& a);           // a >= 1
std::vector<Int> normalized_weights(const Rat& a);        // W(a) = q w(a)

// Normalized weights X_0..X_N computed backwards from X_N = 1 for an
// arbitrary (possibly relaxed) term list; X_j has multiplicity terms[j].
std::vector<Int> normalized_block_values(const std::vector<Int>& terms);

// W([a>) . What(<a]) -- equals p if N is even, 0 if N is odd.
Rat mirror_product(const Rat& a);                         // a > 1

enum class Side { Below, Above };

// Linear forms x_j(z) = alpha_j + z beta_j valid on one side of a
// (below if N odd, above if N even), including the (N+1)st form
// +-(p - qz), plus the modified last form that applies across a
// (multiplicity lN reduced by one).
struct WeightLinearForms {
  Rat a;
  Side side;
  std::vector<Int> mult;                       // l_0..l_N
  std::vector<std::pair<Int, Int>> forms;      // (alpha_j, beta_j), j = 0..N+1
  std::pair<Int, Int> crossed_last;            // x~_{N+1} for the other side

  Rat eval(std::size_t j, const Rat& z) const;
};

WeightLinearForms weight_linear_forms(const Rat& a);      // a > 1

}  // namespace weights
}  // namespace capcalc
