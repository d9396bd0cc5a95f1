#include "capcalc/cfrac.hpp"

#include <algorithm>
#include <map>

namespace capcalc {
namespace cfrac {

bool ContinuedFraction::canonical() const {
  if (terms.empty()) return false;
  for (size_t i = 1; i < terms.size(); ++i)
    if (terms[i] < 1) return false;
  return terms.size() == 1 || terms.back() >= 2;
}

Rat ContinuedFraction::value() const {
  if (terms.empty()) throw std::domain_error("empty continued fraction");
  Rat v(terms.back());
  for (size_t i = terms.size() - 1; i-- > 0;) {
    if (v == 0) throw std::domain_error("continued fraction hits zero tail");
    v = Rat(terms[i]) + Rat(1) / v;
  }
  return v;
}

Int ContinuedFraction::term_sum() const {
  Int s = 0;
  for (const auto& t : terms) s += t;
  return s;
}

ContinuedFraction cf_expand(const Rat& a) {
  if (a <= 0) throw std::domain_error("cf_expand requires a > 0");
  ContinuedFraction cf;
  Int p = a.get_num(), q = a.get_den();
  while (q != 0) {
    Int t, r;
    mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    cf.terms.push_back(t);
    p = q;
    q = r;
  }
  return cf;  // Euclid yields the canonical form (last term >= 2, or N = 0)
}

ContinuedFraction relaxed(const ContinuedFraction& cf) {
  ContinuedFraction out = cf;
  if (out.terms.size() == 1 || out.terms.back() >= 2) {
    out.terms.back() -= 1;
    out.terms.push_back(1);
  }
  return out;
}

ContinuedFraction canonicalize(const ContinuedFraction& cf) {
  ContinuedFraction out = cf;
  while (out.terms.size() > 1 && out.terms.back() == 1) {
    out.terms.pop_back();
    out.terms.back() += 1;
  }
  return out;
}

ContinuedFraction mirror(const ContinuedFraction& cf) {
  ContinuedFraction out = cf;
  std::reverse(out.terms.begin(), out.terms.end());
  return out;
}

Convergents convergents(const ContinuedFraction& cf) {
  Convergents c;
  c.p = {1};
  c.q = {0};
  Int pm2 = 0, pm1 = 1, qm2 = 1, qm1 = 0;
  for (const auto& t : cf.terms) {
    Int p = t * pm1 + pm2;
    Int q = t * qm1 + qm2;
    c.p.push_back(p);
    c.q.push_back(q);
    pm2 = pm1;
    pm1 = p;
    qm2 = qm1;
    qm1 = q;
  }
  return c;
}

AlphaBetaSeq alpha_beta(const ContinuedFraction& cf) {
  const size_t n = cf.terms.size();  // N + 1 terms
  AlphaBetaSeq s;
  s.alpha.resize(n + 1);
  s.beta.resize(n + 1);
  s.alpha[0] = 1;
  s.beta[0] = 0;
  if (n == 0) return s;
  s.alpha[1] = -cf.terms[0];
  s.beta[1] = 1;
  for (size_t j = 2; j <= n; ++j) {
    s.alpha[j] = s.alpha[j - 2] - cf.terms[j - 1] * s.alpha[j - 1];
    s.beta[j] = s.beta[j - 2] - cf.terms[j - 1] * s.beta[j - 1];
  }
  return s;
}

namespace {

struct MediantChain {
  std::vector<Rat> values;             // mediants in creation order
  std::vector<std::pair<int, int>> meets;  // indices of the two edges each meets
  // edge indices: -1 for 0/1, 0 for the infinite edge, i >= 1 for values[i-1]
};

MediantChain mediant_chain(const Rat& a) {
  MediantChain ch;
  Int lo_p = 0, lo_q = 1;  // edge -1
  Int hi_p = 1, hi_q = 0;  // edge 0
  int lo_idx = -1, hi_idx = 0;
  while (true) {
    Int mp = lo_p + hi_p, mq = lo_q + hi_q;
    Rat m = make_rat(mp, mq);
    ch.values.push_back(m);
    ch.meets.emplace_back(lo_idx, hi_idx);
    int idx = static_cast<int>(ch.values.size());
    if (m == a) break;
    if (a < m) {
      hi_p = mp;
      hi_q = mq;
      hi_idx = idx;
    } else {
      lo_p = mp;
      lo_q = mq;
      lo_idx = idx;
    }
  }
  return ch;
}

}  // namespace

std::vector<Rat> farey_expansion(const Rat& a) {
  if (a <= 0) throw std::domain_error("farey_expansion requires a > 0");
  MediantChain ch = mediant_chain(a);
  std::vector<Rat> out;
  out.reserve(ch.values.size() + 1);
  out.emplace_back(0);
  for (auto& v : ch.values) out.push_back(v);
  return out;
}

std::vector<Rat> farey_weights(const Rat& a) {
  if (a <= 0) throw std::domain_error("farey_weights requires a > 0");
  MediantChain ch = mediant_chain(a);
  const int n = static_cast<int>(ch.values.size());
  // label edge i (1-based over mediants) backwards: lambda_N = 1, and
  // lambda_i = sum of labels of later edges meeting edge i.
  std::vector<Int> lambda(static_cast<size_t>(n) + 1, Int(0));
  lambda[static_cast<size_t>(n)] = 1;
  for (int i = n - 1; i >= 1; --i) {
    Int sum = 0;
    for (int j = i + 1; j <= n; ++j) {
      auto [u, v] = ch.meets[static_cast<size_t>(j) - 1];
      if (u == i || v == i) sum += lambda[static_cast<size_t>(j)];
    }
    lambda[static_cast<size_t>(i)] = sum;
  }
  std::vector<Rat> weights;
  weights.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    weights.push_back(make_rat(lambda[static_cast<size_t>(i)], lambda[1]));
  return weights;
}

}  // namespace cfrac
}  // namespace capcalc
