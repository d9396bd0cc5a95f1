#include "capcalc/capacity.hpp"

namespace capcalc {
namespace capacity {

namespace {

classes::ExceptionalClass cls(long d, std::initializer_list<std::pair<long, int>> runs) {
  classes::ExceptionalClass c;
  c.d = d;
  for (auto [v, n] : runs)
    for (int i = 0; i < n; ++i) c.m.emplace_back(v);
  return c;
}

}  // namespace

const std::vector<IntervalRow>& table_t1() {
  static const std::vector<IntervalRow> rows = [] {
    std::vector<IntervalRow> t;
    auto row = [&](long cp, long cq, classes::ExceptionalClass c, long A, long B,
                   long A2, long B2, long mup, long muq, const char* ux,
                   const char* vx, double gap) {
      IntervalRow r;
      r.center = make_rat(cp, cq);
      r.cls = std::move(c);
      r.A = A;
      r.B = B;
      r.A2 = A2;
      r.B2 = B2;
      r.mu_center = make_rat(mup, muq);
      r.ux_decimal = ux;
      r.vx_decimal = vx;
      r.mu_minus_sqrt = gap;
      t.push_back(std::move(r));
    };
    row(57, 8, cls(48, {{18, 7}, {3, 1}, {2, 7}}), 7, 17, 121, 1, 1025, 384,
        "7.12499", "7.12501", 1.27e-6);
    row(107, 15, cls(64, {{24, 7}, {3, 7}, {1, 2}}), 14, 22, 121, 7, 641, 240,
        "7.1333", "7.1334", 3.25e-6);
    row(50, 7, cls(24, {{9, 7}, {2, 1}, {1, 6}}), 7, 8, 57, 1, 449, 168,
        "7.1428", "7.1429", 6.63e-6);
    row(93, 13, cls(40, {{15, 7}, {2, 6}, {1, 2}}), 14, 13, 107, 0, 107, 40,
        "7.151", "7.156", 332.5e-6);
    row(36, 5, cls(16, {{6, 7}, {1, 5}}), 7, 5, 43, 0, 43, 16,
        "7.1665", "7.22", 4218.4e-6);
    row(29, 4, cls(35, {{13, 7}, {4, 1}, {3, 3}}), 0, 13, 87, 1, 377, 140,
        "7.2485", "7.252", 274.7e-6);
    row(15, 2, cls(8, {{3, 7}, {1, 2}}), 7, 2, 22, 0, 11, 4,
        "7.328", "7.56", 11387.2e-6);
    row(8, 1, cls(6, {{3, 1}, {2, 7}}), 1, 2, 17, 0, 17, 6,
        "7.97", "8.03", 4906.2e-6);
    return t;
  }();
  return rows;
}

const std::vector<HiddenRow>& table_t5() {
  static const std::vector<HiddenRow> rows = [] {
    std::vector<HiddenRow> t;
    auto row = [&](long cp, long cq, classes::ExceptionalClass c, long A, long B,
                   long A2, long B2, long mup, long muq, long N, long s) {
      HiddenRow r;
      r.center = make_rat(cp, cq);
      r.cls = std::move(c);
      r.A = A;
      r.B = B;
      r.A2 = A2;
      r.B2 = B2;
      r.mu_center = make_rat(mup, muq);
      r.lattice_points = N;
      r.slant_points = s;
      t.push_back(std::move(r));
    };
    row(57, 8, cls(384, {{144, 6}, {143, 1}, {18, 8}}), -1, 144, 1025, 0,
        1025, 384, 74322, 18);
    row(50, 7, cls(168, {{63, 6}, {62, 1}, {9, 7}}), -1, 63, 449, 0,
        449, 168, 14373, 9);
    row(43, 6, cls(96, {{36, 6}, {35, 1}, {6, 6}}), -1, 36, 257, 0,
        257, 96, 4758, 6);
    row(22, 3, cls(24, {{9, 6}, {8, 1}, {3, 3}}), -1, 9, 65, 0,
        65, 24, 327, 3);
    return t;
  }();
  return rows;
}

const std::vector<classes::ExceptionalClass>& small_E_classes() {
  static const std::vector<classes::ExceptionalClass> list = {
      cls(0, {{-1, 1}}),
      cls(1, {{1, 2}}),
      cls(2, {{1, 5}}),
      cls(3, {{2, 1}, {1, 6}}),
      cls(4, {{2, 3}, {1, 5}}),
      cls(5, {{2, 6}, {1, 2}}),
      cls(6, {{3, 1}, {2, 7}}),
  };
  return list;
}

}  // namespace capacity
}  // namespace capcalc
