#pragma once

#include <compare>
#include <string>

#include "nivatk/numeric.hpp"

namespace nivatk {

// Exact real number (a + b*sqrt(n)) / q with q > 0 and n squarefree.
// Rationals are stored with b = 0, n = 0.
class QuadraticReal {
 public:
  QuadraticReal() = default;
  QuadraticReal(Integer a, Integer b, Integer n, Integer q);
  static QuadraticReal rational(const Rational& r);
  static QuadraticReal sqrt(const Integer& n);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& radicand() const noexcept { return n_; }
  const Integer& q() const noexcept { return q_; }
  bool is_rational() const noexcept { return b_ == 0; }

  // floor(m * x), exact.
  Integer floor_times(const Integer& m) const;
  Integer floor() const { return floor_times(1); }
  // Sign of x - r.
  int compare(const Rational& r) const;

  bool operator==(const QuadraticReal& o) const = default;

  std::string str() const;

 private:
  void canonicalize();

  Integer a_ = 0, b_ = 0, n_ = 0, q_ = 1;
};

// floor(x + y*sqrt(n)) for integers x, y and n >= 0.
Integer floor_of_surd(const Integer& x, const Integer& y, const Integer& n);

}  // namespace nivatk
