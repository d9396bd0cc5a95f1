#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capcalc/classes.hpp"
#include "capcalc/quadratic.hpp"
#include "capcalc/rational.hpp"

namespace capcalc {
namespace capacity {

// a_n = (g_{n+1}/g_n)^2, b_n = g_{n+2}/g_n.
struct StaircasePoint {
  int n;
  Rat a_n, b_n;
  Rat sqrt_a_n;    // g_{n+1}/g_n
  Rat sqrt_a_np1;  // g_{n+2}/g_{n+1} = c(b_n)
};
StaircasePoint staircase_point(int n);

classes::ExceptionalClass class_E_bn(int n);            // (g_{n+1}; W(b_n))
classes::ExceptionalClass class_E_an(int n);            // (g_n g_{n+1}; W(a_n), 1)
classes::ExceptionalClass class_b_ki(int k, int i);     // the nearly perfect family

Rat conv_c(int idx);                  // convergents c_1, c_2, ... of tau^4
Rat u_point(int k, long j);           // (F_{k+1} + j F_{k+2}) / (F_k + j F_{k+1})
Rat v_point(int k, long j);           // (L_k + j F_{k+1}) / (L_{k-1} + j F_k)
Rat e_point(int k);                   // v_k(7)
Rat b_point(int k, int i);            // v_k(1+3i)

// Ghost stairs: mu = (z+1)/3 on [c_{2k}, c_{2k+1}], constant
// h_{2k+3}/h_{2k+2} on [c_{2k+1}, e_k].
struct GhostClass {
  classes::ExceptionalClass cls;
  Rat left, breakpoint, right;  // c_{2k}, c_{2k+1}, e_k
  Rat const_value;              // h_{2k+3}/h_{2k+2}
};
GhostClass ghost_class(int k);

struct CapacityValue {
  Quad value;  // rational in every regime except the sqrt one
  std::string regime;
  std::vector<classes::ExceptionalClass> witnesses;

  bool is_rational() const { return value.is_rational(); }
  const Rat& rational() const { return value.as_rational(); }
};

// Closed-form c(a) for rational a >= 1 (sqrt(a) above 8 + 1/36).
CapacityValue capacity_closed_form(const Rat& a);

// Search-based evaluation on [48/7, 9]: max of sqrt(a) and mu over the
// candidate classes named by the analysis plus a bounded point search.
CapacityValue capacity_search(const Rat& a, int jobs = 1);

// Table of the eight contributing classes on [7+1/9, 8] and the four hidden
// classes, with frozen reference data.
struct IntervalRow {
  Rat center;
  classes::ExceptionalClass cls;
  Int A, B, A2, B2;
  Rat mu_center;
  std::string ux_decimal, vx_decimal;  // as printed, mixed precision
  double mu_minus_sqrt;                // last column
};
const std::vector<IntervalRow>& table_t1();

struct HiddenRow {
  Rat center;
  classes::ExceptionalClass cls;
  Int A, B, A2, B2;
  Rat mu_center;
  Int lattice_points, slant_points;
};
const std::vector<HiddenRow>& table_t5();

const std::vector<classes::ExceptionalClass>& small_E_classes();  // E_M, M <= 8

// Exact interval endpoints u_x, v_x of a table row: roots of (A+Bz)^2 = d^2 z.
Quad row_ux(const IntervalRow& row);
Quad row_vx(const IntervalRow& row);

struct GraphSegment {
  Quad from, to;
  bool is_sqrt = false;
  Int A, B, d;  // value = (A + B z)/d on the segment when !is_sqrt
  std::string regime;
  std::optional<classes::ExceptionalClass> witness;
};

struct CapacityGraph {
  std::vector<GraphSegment> segments;
  std::vector<Rat> breakpoints;                       // rational corners
  std::vector<std::pair<Rat, CapacityValue>> samples;
};

CapacityGraph emit_graph(const Rat& from, const Rat& to, const Rat& step,
                         int jobs = 1);

}  // namespace capacity
}  // namespace capcalc
