#include "capcalc/capacity.hpp"

#include <algorithm>
#include <future>

#include "capcalc/cfrac.hpp"
#include "capcalc/fib.hpp"
#include "capcalc/search.hpp"
#include "capcalc/weights.hpp"

namespace capcalc {
namespace capacity {

using classes::ExceptionalClass;

StaircasePoint staircase_point(int n) {
  if (n < 0) throw std::domain_error("staircase_point requires n >= 0");
  StaircasePoint sp;
  sp.n = n;
  Int gn = fib::g(n), gn1 = fib::g(n + 1), gn2 = fib::g(n + 2);
  sp.a_n = make_rat(gn1 * gn1, gn * gn);
  sp.b_n = make_rat(gn2, gn);
  sp.sqrt_a_n = make_rat(gn1, gn);
  sp.sqrt_a_np1 = make_rat(gn2, gn1);
  return sp;
}

ExceptionalClass class_E_bn(int n) {
  if (n < 0) throw std::domain_error("class_E_bn requires n >= 0");
  StaircasePoint sp = staircase_point(n);
  ExceptionalClass c;
  c.d = fib::g(n + 1);
  c.m = weights::normalized_weights(sp.b_n);
  return c;
}

ExceptionalClass class_E_an(int n) {
  if (n < 1) throw std::domain_error("class_E_an requires n >= 1");
  StaircasePoint sp = staircase_point(n);
  ExceptionalClass c;
  c.d = fib::g(n) * fib::g(n + 1);
  c.m = weights::normalized_weights(sp.a_n);
  c.m.emplace_back(1);
  return c;
}

Rat conv_c(int idx) {
  if (idx < 1) throw std::domain_error("conv_c requires index >= 1");
  // c_{2k-1} = F_{k+1}/F_k, c_{2k} = L_{k+1}/L_k
  if (idx % 2 == 1) {
    int k = (idx + 1) / 2;
    return make_rat(fib::bigF(k + 1), fib::bigF(k));
  }
  int k = idx / 2;
  return make_rat(fib::bigL(k + 1), fib::bigL(k));
}

Rat u_point(int k, long j) {
  if (k < 1 || j < 1) throw std::domain_error("u_point requires k, j >= 1");
  return make_rat(fib::bigF(k + 1) + j * fib::bigF(k + 2),
                  fib::bigF(k) + j * fib::bigF(k + 1));
}

Rat v_point(int k, long j) {
  if (k < 1 || j < 1) throw std::domain_error("v_point requires k, j >= 1");
  return make_rat(fib::bigL(k) + j * fib::bigF(k + 1),
                  fib::bigL(k - 1) + j * fib::bigF(k));
}

Rat e_point(int k) { return v_point(k, 7); }

Rat b_point(int k, int i) {
  if (i < 0) throw std::domain_error("b_point requires i >= 0");
  return v_point(k, 1 + 3 * i);
}

ExceptionalClass class_b_ki(int k, int i) {
  if (k < 1 || i < 0) throw std::domain_error("class_b_ki requires k >= 1, i >= 0");
  Rat b = b_point(k, i);
  const Int q = b.get_den();
  std::vector<Int> W = weights::normalized_weights(b);
  // last block is 1^{1+3i}; replace it by (i, 1^{1+2i})
  long tail = 1 + 3 * i;
  for (long t = 0; t < tail; ++t) {
    if (W.back() != 1) throw std::logic_error("unexpected last block in b_k(i)");
    W.pop_back();
  }
  if (i > 0) W.emplace_back(i);
  for (long t = 0; t < 1 + 2 * i; ++t) W.emplace_back(1);
  ExceptionalClass c;
  Rat d = Rat(q) * (Rat(1) + b) / Rat(3);
  if (d.get_den() != 1) throw std::logic_error("d_k(i) is not an integer");
  c.d = d.get_num();
  c.m = std::move(W);
  // entries of the replaced block keep the vector ordered when i <= 1+...;
  // for large i the entry i exceeds the preceding 1s' predecessor j? No:
  // the block before the last has value j+1 > i, so order holds.
  if (!c.is_ordered()) throw std::logic_error("b_k(i) class is not ordered");
  return c;
}

GhostClass ghost_class(int k) {
  if (k < 1) throw std::domain_error("ghost_class requires k >= 1");
  GhostClass g;
  g.cls = class_b_ki(k, 2);
  g.left = conv_c(2 * k);
  g.breakpoint = conv_c(2 * k + 1);
  g.right = e_point(k);
  g.const_value = make_rat(fib::h(2 * k + 3), fib::h(2 * k + 2));
  if (g.cls.d != fib::h(2 * k + 2)) throw std::logic_error("ghost degree mismatch");
  return g;
}

namespace {

// tau^4 = (7 + 3 sqrt 5)/2 is the root of z^2 - 7z + 1 above 7/2.
bool above_tau4(const Rat& a) {
  return a * a - 7 * a + 1 > 0 && 2 * a > 7;
}

CapacityValue sqrt_value(const Rat& a) {
  CapacityValue v;
  v.value = Quad::sqrt_of_rat(a);
  v.regime = "volume";
  return v;
}

const ExceptionalClass& class_3_2_1x6() {
  return small_E_classes()[3];  // (3; 2, 1^6)
}

}  // namespace

CapacityValue capacity_closed_form(const Rat& a) {
  if (a < 1) throw std::domain_error("capacity is defined for a >= 1");
  if (!above_tau4(a)) {
    // Fibonacci stairs: find n with a <= a_{n+1}
    for (int n = 0;; ++n) {
      StaircasePoint sp = staircase_point(n);
      StaircasePoint spn = staircase_point(n + 1);
      if (a <= sp.b_n) {
        CapacityValue v;
        v.value = Quad(a * make_rat(fib::g(n), fib::g(n + 1)));
        v.regime = "stairs-linear[" + std::to_string(n) + "]";
        v.witnesses = {class_E_bn(n)};
        return v;
      }
      if (a <= spn.a_n) {
        CapacityValue v;
        v.value = Quad(sp.sqrt_a_np1);
        v.regime = "stairs-constant[" + std::to_string(n) + "]";
        v.witnesses = {class_E_bn(n)};
        return v;
      }
    }
  }
  if (a <= 7) {
    CapacityValue v;
    v.value = Quad((a + 1) / 3);
    v.regime = "linear-ramp";
    v.witnesses = {class_3_2_1x6()};
    return v;
  }
  if (a <= make_rat(64, 9)) {
    CapacityValue v;
    v.value = Quad(make_rat(8, 3));
    v.regime = "seven-constant";
    v.witnesses = {class_3_2_1x6()};
    return v;
  }
  for (const IntervalRow& row : table_t1()) {
    // left branch: u_x <= a <= center  <=>  (A + Ba)/d >= sqrt(a), a <= center
    const Int d = row.cls.d;
    if (a <= row.center) {
      Rat lin = (Rat(row.A) + a * Rat(row.B)) / Rat(d);
      if (lin > 0 && lin * lin >= a) {
        CapacityValue v;
        v.value = Quad(lin);
        v.regime = "interval[" + rat_to_string(row.center) + "]";
        v.witnesses = {row.cls};
        return v;
      }
    } else {
      Rat lin = (Rat(row.A2) + a * Rat(row.B2)) / Rat(d);
      if (lin > 0 && lin * lin >= a) {
        CapacityValue v;
        v.value = Quad(lin);
        v.regime = "interval[" + rat_to_string(row.center) + "]";
        v.witnesses = {row.cls};
        return v;
      }
    }
  }
  return sqrt_value(a);
}

namespace {

void consider(const ExceptionalClass& c, const Rat& a, const Int& ell_a,
              Quad& best, std::vector<ExceptionalClass>& witnesses) {
  if (c.d <= 0) return;
  size_t nonzero = c.m.size();
  while (nonzero > 0 && c.m[nonzero - 1] == 0) --nonzero;
  if (Int(static_cast<unsigned long>(nonzero)) > ell_a) return;
  Quad q(classes::mu_at(c, a));
  int cmp = q.cmp(best);
  if (cmp > 0) {
    best = q;
    witnesses.clear();
    witnesses.push_back(c);
  } else if (cmp == 0) {
    if (std::find(witnesses.begin(), witnesses.end(), c) == witnesses.end())
      witnesses.push_back(c);
  }
}

}  // namespace

CapacityValue capacity_search(const Rat& a, int jobs) {
  const Rat lo = make_rat(48, 7);
  if (a < lo || a > 9)
    throw std::domain_error("capacity_search supports [48/7, 9]");
  Quad best = Quad::sqrt_of_rat(a);
  std::vector<ExceptionalClass> witnesses;

  // named candidate families
  std::vector<ExceptionalClass> candidates;
  for (const auto& c : small_E_classes())
    if (c.d > 0) candidates.push_back(c);
  for (const auto& row : table_t1()) candidates.push_back(row.cls);
  for (const auto& row : table_t5()) candidates.push_back(row.cls);
  for (int n = 0; n <= 8; ++n) {
    candidates.push_back(class_E_bn(n));
    if (n >= 1) candidates.push_back(class_E_an(n));
  }
  for (int k = 1; k <= 4; ++k)
    for (int i = 0; i <= 5; ++i) candidates.push_back(class_b_ki(k, i));

  // bounded point search at a itself
  Int dmax(20);
  if (a > make_rat(64, 9) && a < 8) {
    for (int k = 1; k <= 8; ++k) {
      auto [Dz, Dk] = search::default_bounds(k);
      if (a == search::z_point(k)) {
        dmax = Dz;
        break;
      }
      Rat lo_k = Rat(7) + make_rat(1, k + 1), hi_k = Rat(7) + make_rat(1, k);
      if (a > lo_k && a < hi_k) {
        dmax = Dk;
        break;
      }
    }
  } else if (a >= 8) {
    dmax = 16;
  }
  for (const auto& [d, found] : search::sol_less(a, dmax, jobs))
    for (const auto& c : found) candidates.push_back(c);

  const Int ell_a = cfrac::cf_expand(a).term_sum();
  for (const auto& c : candidates) consider(c, a, ell_a, best, witnesses);

  CapacityValue v;
  v.value = best;
  v.witnesses = std::move(witnesses);
  v.regime = v.witnesses.empty() ? "volume" : "obstructed";
  return v;
}

Quad row_ux(const IntervalRow& row) {
  // largest root of (A + Bz)^2 = d^2 z
  const Int d = row.cls.d;
  if (row.B == 0) return Quad(make_rat(row.A * row.A, d * d));
  // B^2 z^2 + (2AB - d^2) z + A^2 = 0
  Int disc = d * d * (d * d - 4 * row.A * row.B);
  Rat base = make_rat(d * d - 2 * row.A * row.B, 2 * row.B * row.B);
  Rat coeff = make_rat(1, 2 * row.B * row.B);
  return Quad(base, coeff, disc);
}

Quad row_vx(const IntervalRow& row) {
  // smallest root of (A' + B'z)^2 = d^2 z
  const Int d = row.cls.d;
  if (row.B2 == 0) return Quad(make_rat(row.A2 * row.A2, d * d));
  Int disc = d * d * (d * d - 4 * row.A2 * row.B2);
  Rat base = make_rat(d * d - 2 * row.A2 * row.B2, 2 * row.B2 * row.B2);
  Rat coeff = make_rat(1, 2 * row.B2 * row.B2);
  return Quad(base, -coeff, disc);
}

namespace {

void push_breakpoint(std::vector<Rat>& bps, const Rat& from, const Rat& to,
                     const Rat& b) {
  if (b >= from && b <= to) bps.push_back(b);
}

}  // namespace

CapacityGraph emit_graph(const Rat& from, const Rat& to, const Rat& step,
                         int jobs) {
  if (from < 1 || to < from || step <= 0)
    throw std::domain_error("emit_graph: need 1 <= from <= to and step > 0");
  CapacityGraph g;

  // rational corner points of the closed form inside [from, to]; the stairs
  // accumulate at tau^4, so corners thinner than the sampling step are cut off
  for (int n = 0; n <= 64; ++n) {
    StaircasePoint sp = staircase_point(n);
    if (sp.a_n > to) break;
    push_breakpoint(g.breakpoints, from, to, sp.a_n);
    push_breakpoint(g.breakpoints, from, to, sp.b_n);
    if (n > 0 && sp.b_n - sp.a_n < step) break;
  }
  push_breakpoint(g.breakpoints, from, to, Rat(7));
  push_breakpoint(g.breakpoints, from, to, make_rat(64, 9));
  for (const auto& row : table_t1())
    push_breakpoint(g.breakpoints, from, to, row.center);
  push_breakpoint(g.breakpoints, from, to, make_rat(289, 36));
  std::sort(g.breakpoints.begin(), g.breakpoints.end());
  g.breakpoints.erase(std::unique(g.breakpoints.begin(), g.breakpoints.end()),
                      g.breakpoints.end());

  // sample grid (plus the breakpoints, so corners are exact in the output)
  std::vector<Rat> xs;
  for (Rat x = from; x <= to; x += step) xs.push_back(x);
  if (xs.empty() || xs.back() != to) xs.push_back(to);
  for (const auto& b : g.breakpoints) xs.push_back(b);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  g.samples.resize(xs.size());
  auto eval_range = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
      g.samples[i] = {xs[i], capacity_closed_form(xs[i])};
  };
  if (jobs <= 1 || xs.size() < 32) {
    eval_range(0, xs.size());
  } else {
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), xs.size());
    std::vector<std::future<void>> futs;
    size_t chunk = (xs.size() + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
      size_t b = w * chunk, e = std::min(xs.size(), b + chunk);
      if (b >= e) break;
      futs.push_back(std::async(std::launch::async, eval_range, b, e));
    }
    for (auto& f : futs) f.get();
  }

  // segment list: between consecutive sample points the regime decides the
  // segment; merge equal consecutive descriptors.
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    const auto& val = g.samples[i].second;
    GraphSegment seg;
    seg.from = Quad(xs[i]);
    seg.to = Quad(xs[i + 1]);
    seg.regime = val.regime;
    seg.is_sqrt = !val.is_rational();
    if (!val.witnesses.empty()) seg.witness = val.witnesses.front();
    if (!seg.is_sqrt && !val.witnesses.empty()) {
      // reconstruct the affine description from two endpoint values when the
      // next sample shares the regime; otherwise mark as a point segment.
      seg.d = val.witnesses.front().d;
      Rat y0 = val.rational();
      const auto& nxt = g.samples[i + 1].second;
      if (nxt.is_rational() && nxt.regime == val.regime && xs[i + 1] != xs[i]) {
        Rat y1 = nxt.rational();
        Rat slope = (y1 - y0) / (xs[i + 1] - xs[i]);
        Rat inter = y0 - slope * xs[i];
        Rat Bq = slope * Rat(seg.d), Aq = inter * Rat(seg.d);
        if (Bq.get_den() == 1 && Aq.get_den() == 1) {
          seg.A = Aq.get_num();
          seg.B = Bq.get_num();
        }
      }
    }
    if (!g.segments.empty()) {
      GraphSegment& last = g.segments.back();
      if (last.regime == seg.regime && last.is_sqrt == seg.is_sqrt &&
          last.A == seg.A && last.B == seg.B && last.d == seg.d) {
        last.to = seg.to;
        continue;
      }
    }
    g.segments.push_back(std::move(seg));
  }
  return g;
}

}  // namespace capacity
}  // namespace capcalc
