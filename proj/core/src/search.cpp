#include "capcalc/search.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "capcalc/cfrac.hpp"
#include "capcalc/weights.hpp"

namespace capcalc {
namespace search {

namespace {

void solutions_rec(const Int& a, const Int& b, const Int& cap,
                   std::vector<Int>& prefix, std::vector<std::vector<Int>>& out) {
  Int a2 = a * a;
  if (a2 < b) return;
  if (a2 == b) {
    if (a > cap) return;
    std::vector<Int> v = prefix;
    v.push_back(a);
    out.push_back(std::move(v));
    return;
  }
  Int top = std::min(isqrt(b), cap);
  for (Int i = 1; i <= top; ++i) {
    prefix.push_back(i);
    solutions_rec(a - i, b - i * i, i, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Int>> solutions_dio(const Int& a, const Int& b,
                                            const Int& cap) {
  if (a < 0 || b < 0 || cap < 0) return {};
  std::vector<std::vector<Int>> out;
  std::vector<Int> prefix;
  solutions_rec(a, b, cap, prefix, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// The four per-block perturbation patterns of the point search: contributions
// of a block of length l with floor value f under pattern k:
//   0: f^l      1: f+1, f^{l-1}      2: (f+1)^l      3: (f+1)^{l-1}, f
struct BlockOption {
  Int dsum;    // sum delta over the floor vector
  Int dsq;     // contribution to sum of squares minus l*f^2
  int ones_at_head;  // how many +1 entries, placed at the head
};

std::vector<BlockOption> block_options(const Int& f, const Int& l) {
  // pattern deltas on the sum: 0, 1, l, l-1
  std::vector<BlockOption> opts;
  auto push = [&](const Int& ones) {
    BlockOption o;
    o.dsum = ones;
    // sum (f+1)^2 over `ones` entries + f^2 over the rest, minus l f^2
    o.dsq = ones * (2 * f + 1);
    o.ones_at_head = static_cast<int>(ones.get_si());
    opts.push_back(o);
  };
  push(0);
  if (l >= 1) push(1);
  if (l >= 2) push(l);
  if (l >= 2) push(l - 1);
  return opts;
}

struct SolAtContext {
  Rat a;
  Int d;
  Int p, q, pq;
  std::vector<Int> mult;   // block multiplicities l_j
  std::vector<Int> F;      // floor value per block
  std::vector<Int> W;      // normalized weight per block
  Int target_sum, target_sq;
  std::vector<std::vector<BlockOption>> options;
  // suffix min/max of attainable (sum, sq) deltas
  std::vector<Int> min_sum_rest, max_sum_rest, min_sq_rest, max_sq_rest;
  std::set<std::vector<Int>> results;
};

void sol_at_rec(SolAtContext& ctx, size_t j, const Int& acc_sum,
                const Int& acc_sq, std::vector<int>& choice) {
  if (j == ctx.options.size()) {
    if (acc_sum != ctx.target_sum || acc_sq != ctx.target_sq) return;
    // materialize, sort descending, final checks
    std::vector<Int> v;
    for (size_t b = 0; b < ctx.mult.size(); ++b) {
      long l = ctx.mult[b].get_si();
      int ones = ctx.options[b][static_cast<size_t>(choice[b])].ones_at_head;
      for (long i = 0; i < l; ++i)
        v.push_back(ctx.F[b] + ((i < ones) ? 1 : 0));
    }
    std::sort(v.begin(), v.end(), std::greater<Int>());
    if (v.empty() || v.back() <= 0) return;  // needs ell(m) = ell(a)
    // mu >= sqrt(a):  (W0 . v)^2 >= d^2 p q  with W0 the flat normalized weights
    Int dot = 0;
    size_t idx = 0;
    for (size_t b = 0; b < ctx.mult.size(); ++b) {
      long l = ctx.mult[b].get_si();
      for (long i = 0; i < l; ++i, ++idx) dot += ctx.W[b] * v[idx];
    }
    if (dot < 0) return;
    if (dot * dot < ctx.d * ctx.d * ctx.pq) return;
    ctx.results.insert(std::move(v));
    return;
  }
  for (size_t k = 0; k < ctx.options[j].size(); ++k) {
    const BlockOption& o = ctx.options[j][k];
    Int f = ctx.F[j], l = ctx.mult[j];
    Int s = acc_sum + l * f + o.dsum;
    Int sq = acc_sq + l * f * f + o.dsq;
    if (s + ctx.min_sum_rest[j + 1] > ctx.target_sum) continue;
    if (s + ctx.max_sum_rest[j + 1] < ctx.target_sum) continue;
    if (sq + ctx.min_sq_rest[j + 1] > ctx.target_sq) continue;
    if (sq + ctx.max_sq_rest[j + 1] < ctx.target_sq) continue;
    choice[j] = static_cast<int>(k);
    sol_at_rec(ctx, j + 1, s, sq, choice);
  }
}

}  // namespace

std::vector<classes::ExceptionalClass> sol_at(const Rat& a, const Int& d) {
  if (a <= 1) throw std::domain_error("sol_at requires a > 1");
  if (d < 1) throw std::domain_error("sol_at requires d >= 1");
  cfrac::ContinuedFraction cf = cfrac::cf_expand(a);
  SolAtContext ctx;
  ctx.a = a;
  ctx.d = d;
  ctx.p = a.get_num();
  ctx.q = a.get_den();
  ctx.pq = ctx.p * ctx.q;
  ctx.mult = cf.terms;
  ctx.W = weights::normalized_block_values(cf.terms);
  ctx.target_sum = 3 * d - 1;
  ctx.target_sq = d * d + 1;
  const size_t nblocks = cf.terms.size();
  ctx.F.resize(nblocks);
  for (size_t j = 0; j < nblocks; ++j) {
    // floor(d w_j / sqrt(a)) = floor(d W_j / sqrt(pq))
    ctx.F[j] = floor_mul_sqrt(make_rat(d * ctx.W[j], ctx.pq), ctx.pq);
  }
  ctx.options.resize(nblocks);
  for (size_t j = 0; j < nblocks; ++j)
    ctx.options[j] = block_options(ctx.F[j], ctx.mult[j]);
  ctx.min_sum_rest.assign(nblocks + 1, 0);
  ctx.max_sum_rest.assign(nblocks + 1, 0);
  ctx.min_sq_rest.assign(nblocks + 1, 0);
  ctx.max_sq_rest.assign(nblocks + 1, 0);
  for (size_t j = nblocks; j-- > 0;) {
    Int base_sum = ctx.mult[j] * ctx.F[j];
    Int base_sq = ctx.mult[j] * ctx.F[j] * ctx.F[j];
    Int mn_s = base_sum + ctx.options[j][0].dsum, mx_s = mn_s;
    Int mn_q = base_sq + ctx.options[j][0].dsq, mx_q = mn_q;
    for (const auto& o : ctx.options[j]) {
      mn_s = std::min(mn_s, base_sum + o.dsum);
      mx_s = std::max(mx_s, base_sum + o.dsum);
      mn_q = std::min(mn_q, base_sq + o.dsq);
      mx_q = std::max(mx_q, base_sq + o.dsq);
    }
    ctx.min_sum_rest[j] = ctx.min_sum_rest[j + 1] + mn_s;
    ctx.max_sum_rest[j] = ctx.max_sum_rest[j + 1] + mx_s;
    ctx.min_sq_rest[j] = ctx.min_sq_rest[j + 1] + mn_q;
    ctx.max_sq_rest[j] = ctx.max_sq_rest[j + 1] + mx_q;
  }
  std::vector<int> choice(nblocks, 0);
  sol_at_rec(ctx, 0, 0, 0, choice);
  std::vector<classes::ExceptionalClass> out;
  for (const auto& m : ctx.results) {
    classes::ExceptionalClass c;
    c.d = d;
    c.m = m;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

template <typename Fn>
std::vector<std::pair<Int, std::vector<classes::ExceptionalClass>>> over_d_range(
    const Int& d_max, int jobs, Fn per_d) {
  std::vector<std::pair<Int, std::vector<classes::ExceptionalClass>>> out;
  long dmax = d_max.get_si();
  if (jobs <= 1 || dmax < 8) {
    for (long d = 1; d <= dmax; ++d) {
      auto found = per_d(d);
      if (!found.empty()) out.emplace_back(Int(d), std::move(found));
    }
    return out;
  }
  int workers = std::min<long>(jobs, dmax);
  std::vector<std::future<std::vector<std::pair<long, std::vector<classes::ExceptionalClass>>>>> futs;
  for (int w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w] {
      std::vector<std::pair<long, std::vector<classes::ExceptionalClass>>> part;
      for (long d = 1 + w; d <= dmax; d += workers) {
        auto found = per_d(d);
        if (!found.empty()) part.emplace_back(d, std::move(found));
      }
      return part;
    }));
  }
  std::vector<std::pair<long, std::vector<classes::ExceptionalClass>>> merged;
  for (auto& f : futs) {
    auto part = f.get();
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [d, v] : merged) out.emplace_back(Int(d), std::move(v));
  return out;
}

}  // namespace

std::vector<std::pair<Int, std::vector<classes::ExceptionalClass>>> sol_less(
    const Rat& a, const Int& d_max, int jobs) {
  return over_d_range(d_max, jobs, [&](long d) { return sol_at(a, Int(d)); });
}

Rat z_point(int k) {
  if (k < 1 || k > 8) throw std::domain_error("z_point: k must be in 1..8");
  return Rat(7) + make_rat(2, 2 * k + 1);
}

std::pair<Int, Int> default_bounds(int k) {
  if (k < 1 || k > 8) throw std::domain_error("default_bounds: k must be in 1..8");
  static const int Dz[9] = {0, 75, 69, 73, 79, 86, 92, 98, 104};
  static const int Dk[9] = {0, 66, 64, 56, 61, 67, 74, 81, 88};
  return {Int(Dz[k]), Int(Dk[k])};
}

namespace {

// Candidate vectors for one (k, d): the first 7+k+1 entries follow the
// near-parallel template, the tail is completed by the Diophantine recursion,
// then the length and last-block filters are applied.
std::vector<classes::ExceptionalClass> inter_sol(int k, long dl) {
  const Int d(dl);
  std::vector<classes::ExceptionalClass> keep;
  // exact versions of the rounding bounds, each widened by one
  const Int Nv = Int(k) * Int(7 * k + 1);            // (7+1/k) = (7k+1)/k
  const Int Nu = Int(k + 1) * Int(7 * k + 8);        // (7+1/(k+1))
  Rat c_m1 = make_rat(d, 7 * k + 1);                 // d / sqrt(7+1/k) = c sqrt(Nv)
  Rat c_M1 = make_rat(d, 7 * k + 8);
  Int m1 = round_mul_sqrt(c_m1, Nv) - 1;
  Int M1 = round_mul_sqrt(c_M1, Nu) + 1;
  Rat c_mx = make_rat(d, Int(k + 1) * Int(7 * k + 1));  // d/(k+1) / sqrt(7+1/k)
  Rat c_Mx = make_rat(d, Int(k) * Int(7 * k + 8));      // d/k / sqrt(7+1/(k+1))
  Int mx = floor_mul_sqrt(c_mx, Nv) - 1 - 1;
  Int Mx = ceil_mul_sqrt(c_Mx, Nu) + 1 + 1;
  if (m1 < 1) m1 = 1;
  if (mx < 1) mx = 1;
  // |t| <= ceil(sqrt(k+2)) - 1
  Int froot = isqrt(Int(k + 2));
  const Int f = froot + (froot * froot < k + 2 ? 1 : 0) - 1;
  const Int tsum = 3 * d - 1, tsq = d * d + 1;
  std::set<std::vector<Int>> seen;
  for (Int v1 = m1; v1 <= M1; ++v1) {
    for (Int vx = mx; vx <= Mx; ++vx) {
      for (int pat = 0; pat < 3; ++pat) {  // -1 on last, none, +1 on entry 8
        for (Int t = -f; t <= f; ++t) {
          std::vector<Int> m;
          m.reserve(16);
          for (int i = 0; i < 7; ++i) m.push_back(v1);
          for (int i = 0; i < k; ++i) m.push_back(vx);
          if (pat == 0) m.back() -= 1;
          if (pat == 2) m[7] += 1;
          Int second_sum = 0;
          for (size_t i = 7; i < m.size(); ++i) second_sum += m[i];
          m.push_back(m[6] - second_sum + t);  // m_{7+k+1}
          bool sorted = true;
          for (size_t i = 1; i < m.size(); ++i)
            if (m[i] > m[i - 1]) sorted = false;
          if (!sorted || m.back() <= 0) continue;
          Int A = tsum, B = tsq;
          for (const auto& e : m) {
            A -= e;
            B -= e * e;
          }
          if (A < 0 || B < 0) continue;
          auto tails = solutions_dio(A, B, m.back());
          for (const auto& tail : tails) {
            std::vector<Int> full = m;
            for (const auto& e : tail) full.push_back(e);
            while (!full.empty() && full.back() == 0) full.pop_back();
            // tail filters
            const long l = static_cast<long>(full.size());
            if (l <= 7 + k + 2) continue;
            if (full[l - 2] - full[l - 1] > 1) continue;
            if (full[l - 3] > full[l - 2] + 1) {
              Int gap = full[l - 3] - full[l - 2] - full[l - 1];
              if (abs(gap) > 1) continue;
            }
            if (k == 1 && l >= 10) {
              if (full[8] - full[9] > 1) {
                Int gap = full[7] - (full[8] + full[9]);
                if (abs(gap) > 1) continue;
              }
            }
            Int rest = 0;
            for (long i = 7 + k; i < l; ++i) rest += full[static_cast<size_t>(i)];
            Int lead = full[static_cast<size_t>(7 + k - 1)] - rest;
            if (lead >= 0 && lead * lead >= Int(l - k - 6)) continue;
            seen.insert(std::move(full));
          }
        }
      }
    }
  }
  for (const auto& m : seen) {
    classes::ExceptionalClass c;
    c.d = d;
    c.m = m;
    keep.push_back(std::move(c));
  }
  return keep;
}

}  // namespace

std::vector<std::pair<Int, std::vector<classes::ExceptionalClass>>> inter_sol_less(
    int k, const Int& d_max, int jobs) {
  if (k < 1 || k > 8) throw std::domain_error("inter_sol_less: k must be in 1..8");
  return over_d_range(d_max, jobs, [k](long d) { return inter_sol(k, d); });
}

}  // namespace search
}  // namespace capcalc
