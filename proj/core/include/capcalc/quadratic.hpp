#pragma once

#include <string>

#include "capcalc/rational.hpp"

namespace capcalc {

// Exact number of the form x + y*sqrt(r) with x, y rational and r a
// nonnegative integer, kept square-free by the constructors.  All sign and
// order tests are exact; no floating point anywhere.
class Quad {
 public:
  Quad() : x_(0), y_(0), r_(0) {}
  explicit Quad(Rat rational) : x_(std::move(rational)), y_(0), r_(0) {}
  Quad(Rat x, Rat y, Int r);

  static Quad sqrt_of_int(const Int& n);      // sqrt(n), n >= 0
  static Quad sqrt_of_rat(const Rat& a);      // sqrt(p/q) = sqrt(pq)/q, a >= 0

  const Rat& rat_part() const { return x_; }
  const Rat& surd_coeff() const { return y_; }
  const Int& radicand() const { return r_; }

  bool is_rational() const { return y_ == 0; }
  const Rat& as_rational() const;

  int sign() const;
  int cmp(const Quad& o) const;
  int cmp(const Rat& o) const { return cmp(Quad(o)); }

  Quad operator+(const Quad& o) const;
  Quad operator-(const Quad& o) const;
  Quad operator-() const;
  Quad operator*(const Quad& o) const;
  Quad operator*(const Rat& s) const;

  bool operator==(const Quad& o) const { return cmp(o) == 0; }
  bool operator<(const Quad& o) const { return cmp(o) < 0; }
  bool operator<=(const Quad& o) const { return cmp(o) <= 0; }
  bool operator>(const Quad& o) const { return cmp(o) > 0; }
  bool operator>=(const Quad& o) const { return cmp(o) >= 0; }

  // "(p + q*sqrt(r))/s" over a common denominator s, or plain rational form.
  std::string to_string() const;
  std::string decimal(int digits) const;

 private:
  void require_same_field(const Quad& o) const;
  Rat x_, y_;
  Int r_;
};

// Largest square factor is stripped: returns (s, r) with n = s^2 * r.
std::pair<Int, Int> squarefree_decompose(const Int& n);

}  // namespace capcalc
