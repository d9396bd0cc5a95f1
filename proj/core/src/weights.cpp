#include "capcalc/weights.hpp"

namespace capcalc {
namespace weights {

Int WeightExpansion::length() const {
  Int s = 0;
  for (const auto& b : blocks) s += b.second;
  return s;
}

std::vector<Rat> WeightExpansion::flatten() const {
  std::vector<Rat> out;
  for (const auto& [x, l] : blocks)
    for (Int i = 0; i < l; ++i) out.push_back(x);
  return out;
}

std::vector<Int> WeightExpansion::normalized() const {
  Int q = a.get_den();
  std::vector<Int> out;
  for (const auto& [x, l] : blocks) {
    Rat scaled = x * Rat(q);
    if (scaled.get_den() != 1)
      throw std::logic_error("normalized weight is not integral");
    for (Int i = 0; i < l; ++i) out.push_back(scaled.get_num());
  }
  return out;
}

WeightExpansion weight_expansion(const Rat& a) {
  if (a < 1) throw std::domain_error("weight_expansion requires a >= 1");
  cfrac::ContinuedFraction cf = cfrac::cf_expand(a);
  WeightExpansion w;
  w.a = a;
  Rat prev = a, cur = 1;  // x_{-1} = a, x_0 = 1
  for (size_t j = 0; j < cf.terms.size(); ++j) {
    w.blocks.emplace_back(cur, cf.terms[j]);
    Rat next = prev - Rat(cf.terms[j]) * cur;
    prev = cur;
    cur = next;
  }
  return w;
}

std::vector<Int> normalized_weights(const Rat& a) {
  return weight_expansion(a).normalized();
}

std::vector<Int> normalized_block_values(const std::vector<Int>& terms) {
  const size_t n = terms.size();
  std::vector<Int> X(n);
  if (n == 0) return X;
  // X_N = 1, X_{N+1} = 0, backwards X_{j-1} = X_{j+1} + l_j X_j
  Int next = 0, cur = 1;
  X[n - 1] = 1;
  for (size_t j = n - 1; j-- > 0;) {
    Int prev = next + terms[j + 1] * cur;
    X[j] = prev;
    next = cur;
    cur = prev;
  }
  return X;
}

Rat mirror_product(const Rat& a) {
  if (a <= 1) throw std::domain_error("mirror_product requires a > 1");
  cfrac::ContinuedFraction cf = cfrac::cf_expand(a);
  const size_t n = cf.terms.size();  // N + 1
  std::vector<Int> X = normalized_block_values(cf.terms);
  std::vector<Int> terms_rev(cf.terms.rbegin(), cf.terms.rend());
  std::vector<Int> Y = normalized_block_values(terms_rev);
  // W([a>) . What(<a]) = sum_j l_j X_j (-1)^j Y_{N-j}
  Rat acc = 0;
  int sign = 1;
  for (size_t j = 0; j < n; ++j) {
    Rat term = Rat(cf.terms[j]) * Rat(X[j]) * Rat(Y[n - 1 - j]);
    acc += (sign > 0) ? term : -term;
    sign = -sign;
  }
  return acc;
}

Rat WeightLinearForms::eval(std::size_t j, const Rat& z) const {
  return Rat(forms[j].first) + z * Rat(forms[j].second);
}

WeightLinearForms weight_linear_forms(const Rat& a) {
  if (a <= 1) throw std::domain_error("weight_linear_forms requires a > 1");
  cfrac::ContinuedFraction cf = cfrac::cf_expand(a);
  const size_t n = cf.terms.size();        // N + 1 terms
  cfrac::AlphaBetaSeq ab = cfrac::alpha_beta(cf);
  WeightLinearForms f;
  f.a = a;
  f.mult = cf.terms;
  f.side = (n % 2 == 0) ? Side::Below : Side::Above;  // N odd <=> below
  f.forms.resize(n + 1);
  for (size_t j = 0; j <= n; ++j) f.forms[j] = {ab.alpha[j], ab.beta[j]};
  // modified last form: multiplicity lN reduced by one,
  // x~_{N+1} = x_{N-1} - (lN - 1) x_N
  Int am1 = (n >= 2) ? ab.alpha[n - 2] : Int(1);  // alpha_{N-1}; for N=0 use x_{-1}=z
  Int bm1 = (n >= 2) ? ab.beta[n - 2] : Int(0);
  if (n == 1) {
    // x_{-1}(z) = z, so x~_1 = z - (l0 - 1) * 1
    f.crossed_last = {-(cf.terms[0] - 1), 1};
  } else {
    f.crossed_last = {am1 - (cf.terms[n - 1] - 1) * ab.alpha[n - 1],
                      bm1 - (cf.terms[n - 1] - 1) * ab.beta[n - 1]};
  }
  return f;
}

}  // namespace weights
}  // namespace capcalc
