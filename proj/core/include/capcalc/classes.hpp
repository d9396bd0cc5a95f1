#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capcalc/quadratic.hpp"
#include "capcalc/rational.hpp"

namespace capcalc {
namespace classes {

// Candidate exceptional class (d; m_1, ..., m_M).  Entries may go negative
// while a Cremona reduction is in flight.
struct ExceptionalClass {
  Int d;
  std::vector<Int> m;

  bool operator==(const ExceptionalClass& o) const = default;
  bool operator<(const ExceptionalClass& o) const;

  Int sum_m() const;
  Int sum_m_sq() const;
  std::size_t ell() const;  // number of positive entries
  bool is_ordered() const;  // nonzero entries nonincreasing, zeros trailing
  std::string to_string() const;  // "(d; a^xk, b, ...)" display form
};

ExceptionalClass make_class(long d, std::vector<long> m);
// Parses "d;m1,m2,..." with optional "^k" repetition, e.g. "6;3,2^7".
ExceptionalClass parse_class(const std::string& s);

bool is_diophantine(const ExceptionalClass& c);

// (2d-m1-m2-m3; d-m2-m3, d-m1-m3, d-m1-m2, m4, ...), unordered.
ExceptionalClass cremona_transform(const ExceptionalClass& c);
// Cremona transform followed by ordering.
ExceptionalClass standard_move(const ExceptionalClass& c);

enum class Verdict { InE, NotInE_NegativeCoordinate, NotInE_ReducedClass };
std::string verdict_name(Verdict v);

struct ReduceResult {
  Verdict verdict;
  std::vector<ExceptionalClass> trace;  // every state, input first
  bool in_E() const { return verdict == Verdict::InE; }
};

// Repeated standard Cremona moves; requires is_diophantine(c).
ReduceResult reduce_class(const ExceptionalClass& c);

// Cached membership verdict (read-mostly, safe for concurrent readers).
bool in_E_cached(const ExceptionalClass& c);

Int intersection(const ExceptionalClass& a, const ExceptionalClass& b);

// mu(d;m)(a) = m . w(a) / d; requires d > 0 and ell(m) <= ell(a).
Rat mu_at(const ExceptionalClass& c, const Rat& a);
bool is_obstructive_at(const ExceptionalClass& c, const Rat& a);  // mu > sqrt(a)

// d*mu near the center a0 = p/q: A + Bz for z < a0 and A' + B'z for z > a0,
// with A' = A + mp, B' = B - mq (m = last nonzero entry of the class).
struct ObstructionLocalForm {
  Rat center;
  Int d;
  Int A, B;
  Int A2, B2;
  Int last_m;
};

// The unique point of an obstruction interval with ell(a0) = ell(m); when
// the class is obstructive on several intervals, the deepest center (largest
// mu/sqrt ratio) is returned.  nullopt when the class is nowhere obstructive.
std::optional<Rat> find_center(const ExceptionalClass& c);

ObstructionLocalForm local_form_at(const ExceptionalClass& c, const Rat& center);
ObstructionLocalForm local_form(const ExceptionalClass& c);

// Error vector summaries at a: eps_i = m_i - (d/sqrt a) w_i.
struct ErrorSummary {
  Quad sum_eps;      // sum of eps_i
  Quad E;            // sum eps_i^2
  Quad sigma;        // sum over i > l_0
  Quad sigma_prime;  // sum over l_0 < i <= M - lN
  Quad y;            // a + 1 - 3 sqrt(a)
  Quad delta;        // y(a) - 1/q
};
ErrorSummary error_summary(const ExceptionalClass& c, const Rat& a);

}  // namespace classes
}  // namespace capcalc
