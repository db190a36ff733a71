#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nivatk/numeric.hpp"

namespace nivatk {

// Dense univariate polynomial over Q; coeffs[i] multiplies t^i. The zero
// polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& lead() const { return coeffs_.back(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  UniPoly monic() const;
  // Divides out the largest power of t.
  UniPoly without_t_power() const;

  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const = default;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// (quotient, remainder) of Euclidean division; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd via Euclid over Q; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace nivatk
