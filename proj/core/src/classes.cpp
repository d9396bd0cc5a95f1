#include "capcalc/classes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "capcalc/cfrac.hpp"
#include "capcalc/weights.hpp"

namespace capcalc {
namespace classes {

bool ExceptionalClass::operator<(const ExceptionalClass& o) const {
  if (d != o.d) return d < o.d;
  return m < o.m;
}

Int ExceptionalClass::sum_m() const {
  Int s = 0;
  for (const auto& v : m) s += v;
  return s;
}

Int ExceptionalClass::sum_m_sq() const {
  Int s = 0;
  for (const auto& v : m) s += v * v;
  return s;
}

std::size_t ExceptionalClass::ell() const {
  std::size_t n = 0;
  for (const auto& v : m)
    if (v > 0) ++n;
  return n;
}

bool ExceptionalClass::is_ordered() const {
  bool seen_zero = false;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (i > 0 && m[i - 1] != 0 && m[i] > m[i - 1]) return false;
  }
  return true;
}

std::string ExceptionalClass::to_string() const {
  std::ostringstream os;
  os << "(" << d.get_str() << ";";
  for (size_t i = 0; i < m.size();) {
    size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    os << (i ? "," : "") << m[i].get_str();
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << ")";
  return os.str();
}

ExceptionalClass make_class(long d, std::vector<long> m) {
  ExceptionalClass c;
  c.d = d;
  c.m.reserve(m.size());
  for (long v : m) c.m.emplace_back(v);
  return c;
}

ExceptionalClass parse_class(const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("class must look like \"d;m1,m2,...\"");
  ExceptionalClass c;
  try {
    c.d = Int(s.substr(0, semi));
  } catch (...) {
    throw std::invalid_argument("malformed class degree in: " + s);
  }
  std::string rest = s.substr(semi + 1);
  std::istringstream is(rest);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in class: " + s);
    auto caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        c.m.emplace_back(tok);
      } else {
        Int v(tok.substr(0, caret));
        long reps = std::stol(tok.substr(caret + 1));
        if (reps < 1) throw std::invalid_argument("bad repetition");
        for (long i = 0; i < reps; ++i) c.m.push_back(v);
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (...) {
      throw std::invalid_argument("malformed class entry: " + tok);
    }
  }
  if (c.m.empty()) throw std::invalid_argument("class with empty m: " + s);
  return c;
}

bool is_diophantine(const ExceptionalClass& c) {
  return c.sum_m() == 3 * c.d - 1 && c.sum_m_sq() == c.d * c.d + 1;
}

ExceptionalClass cremona_transform(const ExceptionalClass& c) {
  ExceptionalClass out = c;
  while (out.m.size() < 3) out.m.emplace_back(0);
  Int m1 = out.m[0], m2 = out.m[1], m3 = out.m[2];
  out.d = 2 * c.d - m1 - m2 - m3;
  out.m[0] = c.d - m2 - m3;
  out.m[1] = c.d - m1 - m3;
  out.m[2] = c.d - m1 - m2;
  return out;
}

namespace {

void order_entries(std::vector<Int>& m) {
  // nonzero entries nonincreasing, zeros trailing
  std::stable_sort(m.begin(), m.end(), [](const Int& a, const Int& b) {
    if ((a == 0) != (b == 0)) return b == 0;
    return a > b;
  });
}

}  // namespace

ExceptionalClass standard_move(const ExceptionalClass& c) {
  ExceptionalClass out = cremona_transform(c);
  order_entries(out.m);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::InE:
      return "InE";
    case Verdict::NotInE_NegativeCoordinate:
      return "NotInE(negative_coordinate)";
    case Verdict::NotInE_ReducedClass:
      return "NotInE(reduced_class)";
  }
  return "?";
}

namespace {

bool is_terminus(const ExceptionalClass& c) {
  if (c.d != 0) return false;
  bool found = false;
  for (const auto& v : c.m) {
    if (v == -1 && !found)
      found = true;
    else if (v != 0)
      return false;
  }
  return found;
}

bool is_reduced(const ExceptionalClass& c) {
  if (c.d <= 0) return false;
  for (size_t i = 0; i < c.m.size(); ++i) {
    if (c.m[i] < 0) return false;
    if (i > 0 && c.m[i] > c.m[i - 1]) return false;
  }
  Int top = 0;
  for (size_t i = 0; i < 3 && i < c.m.size(); ++i) top += c.m[i];
  return c.d >= top;
}

bool has_negative(const ExceptionalClass& c) {
  for (const auto& v : c.m)
    if (v < 0) return true;
  return false;
}

}  // namespace

ReduceResult reduce_class(const ExceptionalClass& c) {
  if (!is_diophantine(c))
    throw std::invalid_argument("reduce_class requires a Diophantine tuple: " +
                                c.to_string());
  ReduceResult res;
  ExceptionalClass cur = c;
  order_entries(cur.m);
  res.trace.push_back(cur);
  Int limit = 10 * c.d + 20;  // provably unreachable; trips on bugs only
  Int steps = 0;
  while (true) {
    if (is_terminus(cur)) {
      res.verdict = Verdict::InE;
      return res;
    }
    if (cur.d > 0 && has_negative(cur)) {
      res.verdict = Verdict::NotInE_NegativeCoordinate;
      return res;
    }
    if (is_reduced(cur)) {
      res.verdict = Verdict::NotInE_ReducedClass;
      return res;
    }
    if (++steps > limit)
      throw std::logic_error("reduce_class exceeded its move budget on " +
                             c.to_string());
    cur = standard_move(cur);
    res.trace.push_back(cur);
  }
}

namespace {
std::map<std::pair<Int, std::vector<Int>>, bool> membership_cache;
std::shared_mutex membership_mutex;
}  // namespace

bool in_E_cached(const ExceptionalClass& c) {
  ExceptionalClass key = c;
  order_entries(key.m);
  while (!key.m.empty() && key.m.back() == 0) key.m.pop_back();
  auto k = std::make_pair(key.d, key.m);
  {
    std::shared_lock lock(membership_mutex);
    auto it = membership_cache.find(k);
    if (it != membership_cache.end()) return it->second;
  }
  bool verdict = is_diophantine(key) && reduce_class(key).in_E();
  std::unique_lock lock(membership_mutex);
  membership_cache.emplace(std::move(k), verdict);
  return verdict;
}

Int intersection(const ExceptionalClass& a, const ExceptionalClass& b) {
  Int dot = 0;
  size_t n = std::min(a.m.size(), b.m.size());
  for (size_t i = 0; i < n; ++i) dot += a.m[i] * b.m[i];
  return a.d * b.d - dot;
}

Rat mu_at(const ExceptionalClass& c, const Rat& a) {
  if (c.d <= 0) throw std::domain_error("mu_at requires d > 0");
  if (a < 1) throw std::domain_error("mu_at requires a >= 1");
  auto w = weights::weight_expansion(a).flatten();
  size_t nonzero = c.m.size();
  while (nonzero > 0 && c.m[nonzero - 1] == 0) --nonzero;
  if (nonzero > w.size())
    throw std::domain_error("class is longer than the weight expansion");
  Rat dot = 0;
  for (size_t i = 0; i < nonzero; ++i) dot += Rat(c.m[i]) * w[i];
  return dot / Rat(c.d);
}

bool is_obstructive_at(const ExceptionalClass& c, const Rat& a) {
  Rat mu = mu_at(c, a);
  if (mu <= 0) return false;
  // mu > sqrt(a)  <=>  mu^2 > a
  return mu * mu > a;
}

namespace {

// Block patterns allowed on an obstructive class (within one block the
// entries take at most two adjacent values, deviating only at an end).
bool block_pattern_ok(const std::vector<Int>& m, size_t begin, size_t len,
                      bool* nonconstant) {
  *nonconstant = false;
  if (len == 0) return false;
  const Int& first = m[begin];
  const Int& last = m[begin + len - 1];
  if (first == last) {
    for (size_t i = begin; i < begin + len; ++i)
      if (m[i] != first) return false;
    return true;
  }
  if (first != last + 1) return false;
  *nonconstant = true;
  // (v^{s-1}, v-1) or (v, (v-1)^{s-1})
  bool head = true, tail = true;
  for (size_t i = begin; i + 1 < begin + len; ++i)
    if (m[i] != first) head = false;
  for (size_t i = begin + 1; i < begin + len; ++i)
    if (m[i] != last) tail = false;
  return head || tail;
}

struct CenterSearch {
  const ExceptionalClass* cls;
  size_t M;              // ell(m)
  Rat win_lo, win_hi;    // value window for candidate centers
  std::vector<Rat> found;
  long nodes = 0;

  // DFS over canonical continued fractions with term sum M whose blocks
  // align with the class entries per the two-adjacent-values rule.
  // (pm1, pm2, qm1, qm2) are the running convergent states p_{k}, p_{k-1}, ...
  void dfs(size_t depth, size_t offset, bool used_nonconstant, const Int& pm1,
           const Int& pm2, const Int& qm1, const Int& qm2) {
    if (++nodes > 500000)
      throw std::logic_error("find_center: search did not converge");
    const long rem = static_cast<long>(M - offset);
    for (long t = 1; t <= rem; ++t) {
      const bool last = (t == rem);
      if (last && t == 1 && depth > 0) continue;  // non-canonical tail [..,1]
      bool nonconst = false;
      if (!block_pattern_ok(cls->m, offset, static_cast<size_t>(t), &nonconst))
        continue;
      if (nonconst && used_nonconstant) continue;
      Int p = Int(t) * pm1 + pm2;
      Int q = Int(t) * qm1 + qm2;
      if (last) {
        Rat z = make_rat(p, q);
        if (z >= win_lo && z <= win_hi && is_obstructive_at(*cls, z))
          found.push_back(z);
        continue;
      }
      // All completions have value between the tail extremes v = 1 and
      // v = rem - t (Moebius-monotone); prune when the range misses the window.
      Int tail_max(rem - t);
      Rat z1 = make_rat(p + pm1, q + qm1);
      Rat z2 = make_rat(tail_max * p + pm1, tail_max * q + qm1);
      const Rat& lo = std::min(z1, z2);
      const Rat& hi = std::max(z1, z2);
      if (hi < win_lo || lo > win_hi) continue;
      dfs(depth + 1, offset + static_cast<size_t>(t),
          used_nonconstant || nonconst, p, pm1, q, qm1);
    }
  }
};

}  // namespace

std::optional<Rat> find_center(const ExceptionalClass& c) {
  if (c.d <= 0) return std::nullopt;
  size_t M = c.ell();
  if (M == 0 || M != c.m.size()) {
    ExceptionalClass trimmed = c;
    while (!trimmed.m.empty() && trimmed.m.back() == 0) trimmed.m.pop_back();
    if (trimmed.m.size() != trimmed.ell()) return std::nullopt;  // zeros inside
    if (trimmed.m.empty()) return std::nullopt;
    return find_center(trimmed);
  }
  // |eps_1| < 1 pins sqrt(a): m_1 - 1 < d/sqrt(a) < m_1 + 1.
  const Int& m1 = c.m[0];
  Rat lo2 = make_rat(c.d * c.d, (m1 + 1) * (m1 + 1));  // lower bound for a
  Rat hi2 = (m1 > 1) ? make_rat(c.d * c.d, (m1 - 1) * (m1 - 1)) : Rat(9);
  hi2 = std::min(hi2, Rat(9));  // mu < 3 always, so no obstruction at a >= 9
  lo2 = std::max(lo2, Rat(1));
  if (lo2 > hi2) return std::nullopt;
  CenterSearch cs;
  cs.cls = &c;
  cs.M = M;
  cs.win_lo = lo2;
  cs.win_hi = hi2;
  cs.dfs(0, 0, false, Int(1), Int(0), Int(0), Int(1));
  if (cs.found.empty()) return std::nullopt;
  // deepest center: maximize mu(z)^2 / z (exact)
  Rat best_ratio = -1;
  Rat best;
  for (const auto& z : cs.found) {
    Rat mu = mu_at(c, z);
    Rat ratio = mu * mu / z;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = z;
    }
  }
  return best;
}

ObstructionLocalForm local_form_at(const ExceptionalClass& c, const Rat& center) {
  if (c.d <= 0) throw std::domain_error("local_form requires d > 0");
  cfrac::ContinuedFraction cf = cfrac::cf_expand(center);
  size_t M = c.ell();
  if (Int(M) != cf.term_sum())
    throw std::domain_error("center length does not match the class");
  weights::WeightLinearForms forms = weights::weight_linear_forms(center);
  // accumulate A = sum m_i alpha_{block(i)}, B likewise
  Int A = 0, B = 0;
  size_t i = 0;
  for (size_t j = 0; j < cf.terms.size(); ++j) {
    for (Int t = 0; t < cf.terms[j]; ++t, ++i) {
      A += c.m[i] * forms.forms[j].first;
      B += c.m[i] * forms.forms[j].second;
    }
  }
  ObstructionLocalForm lf;
  lf.center = center;
  lf.d = c.d;
  lf.last_m = c.m[M - 1];
  const Int p = center.get_num(), q = center.get_den();
  if (forms.side == weights::Side::Below) {
    lf.A = A;
    lf.B = B;
    lf.A2 = A + lf.last_m * p;
    lf.B2 = B - lf.last_m * q;
  } else {
    lf.A2 = A;
    lf.B2 = B;
    lf.A = A - lf.last_m * p;
    lf.B = B + lf.last_m * q;
  }
  // both branches agree at the center by construction; check anyway
  Rat left = Rat(lf.A) + center * Rat(lf.B);
  Rat right = Rat(lf.A2) + center * Rat(lf.B2);
  if (left != right) throw std::logic_error("local form branches disagree");
  return lf;
}

ObstructionLocalForm local_form(const ExceptionalClass& c) {
  auto center = find_center(c);
  if (!center) throw std::domain_error("class has no obstruction center");
  return local_form_at(c, *center);
}

ErrorSummary error_summary(const ExceptionalClass& c, const Rat& a) {
  if (c.d <= 0) throw std::domain_error("error_summary requires d > 0");
  auto w = weights::weight_expansion(a);
  auto flat = w.flatten();
  size_t M = flat.size();
  size_t nonzero = c.m.size();
  while (nonzero > 0 && c.m[nonzero - 1] == 0) --nonzero;
  if (nonzero > M)
    throw std::domain_error("class is longer than the weight expansion");
  const Int p = a.get_num(), q = a.get_den();
  // d / sqrt(a) = (d q / (pq)) * sqrt(pq) -- scale applied per weight
  Quad d_over_sqrta(Rat(0), make_rat(c.d * q, p * q), p * q);
  Quad sum_eps(Rat(0));
  Quad E(Rat(0));
  Quad sigma(Rat(0));
  Quad sigma_prime(Rat(0));
  const size_t l0 = w.blocks.front().second.get_ui();
  const size_t lN = w.blocks.back().second.get_ui();
  for (size_t i = 0; i < M; ++i) {
    Int mi = (i < nonzero) ? c.m[i] : Int(0);
    Quad eps = Quad(Rat(mi)) - d_over_sqrta * flat[i];
    Quad eps2 = eps * eps;
    sum_eps = sum_eps + eps;
    E = E + eps2;
    if (i >= l0) {
      sigma = sigma + eps2;
      if (i < M - lN) sigma_prime = sigma_prime + eps2;
    }
  }
  ErrorSummary es;
  es.sum_eps = sum_eps;
  es.E = E;
  es.sigma = sigma;
  es.sigma_prime = sigma_prime;
  es.y = Quad(a + 1) - Quad::sqrt_of_rat(a) * Rat(3);
  es.delta = es.y - Quad(make_rat(1, q));
  return es;
}

}  // namespace classes
}  // namespace capcalc
