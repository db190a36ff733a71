#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nivatk/configuration.hpp"
#include "nivatk/int_vector.hpp"
#include "nivatk/numeric.hpp"
#include "nivatk/pattern.hpp"

namespace nivatk {

// Multivariate Laurent polynomial sum a_v X^v with rational coefficients.
// Zero coefficients are never stored; the zero polynomial has no terms.
class LaurentPolynomial {
 public:
  using Terms = std::map<IntVector, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t dim) : dim_(dim) {}
  LaurentPolynomial(std::size_t dim, Terms terms);

  static LaurentPolynomial constant(std::size_t dim, const Rational& c);
  static LaurentPolynomial monomial(const IntVector& e, const Rational& c = 1);
  // X^v - 1
  static LaurentPolynomial difference(const IntVector& v);

  std::size_t dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Rational coeff(const IntVector& e) const;
  std::vector<IntVector> support() const;
  bool is_integral() const;

  void add_term(const IntVector& e, const Rational& c);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const Rational& k) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
  // X^v * f
  LaurentPolynomial shifted(const IntVector& v) const;

  bool operator==(const LaurentPolynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  // Text form, terms in descending graded-lex order (see text_format.hpp).
  std::string str() const;

 private:
  void require_compatible(const LaurentPolynomial& o) const;

  std::size_t dim_ = 0;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f);

LaurentPolynomial pow(const LaurentPolynomial& f, unsigned k);
// f(X^n): exponents scaled by n.
LaurentPolynomial substitute_power(const LaurentPolynomial& f, std::int64_t n);
// Coefficients reduced into [0, p); requires integer coefficients.
LaurentPolynomial reduce_mod(const LaurentPolynomial& f, const Integer& p);
// (X^{v_1} - 1) ... (X^{v_m} - 1)
LaurentPolynomial product_of_differences(const std::vector<IntVector>& vectors, std::size_t dim);

// Componentwise max - min over the support.
IntVector bbox(const LaurentPolynomial& f);
// Componentwise minimum exponent.
IntVector min_exponent(const LaurentPolynomial& f);
// Graded-lex leading exponent: highest total degree, then lexicographic.
IntVector leading_exponent(const LaurentPolynomial& f);

// Canonical representative up to units: monomial stripped (componentwise
// minimum exponent 0), coprime integer coefficients, leading graded-lex
// coefficient positive.
LaurentPolynomial normalize(const LaurentPolynomial& f);

// q with f = q g if one exists.
std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g);

// Direction (primitive, canonical sign) if the support is >= 2 collinear points.
std::optional<IntVector> line_direction(const LaurentPolynomial& f);

// Total order on canonical 2D directions by angle in [0, pi), starting at (1,0).
bool direction_before(const IntVector& a, const IntVector& b);

// The formal product f*c on `window`: (fc)_u = sum_v a_v c_{u-v}.
RationalPattern apply(const LaurentPolynomial& f, const Configuration& c, const Window& window);

enum class Annihilation { Yes, YesOnWindow, No };

struct AnnihilationResult {
  Annihilation verdict = Annihilation::No;
  Window checked;                  // window actually verified
  std::optional<IntVector> witness;  // first position with (fc)_u != 0
  Rational witness_value;
  bool holds() const noexcept { return verdict != Annihilation::No; }
};

// Exact for periodic descriptors (checked on one fundamental domain);
// otherwise checked on the window.
AnnihilationResult annihilates(const LaurentPolynomial& f, const Configuration& c, const Window& window);

// Primitive edge directions of the Newton polygon (d = 2), deduplicated up
// to sign, in direction_before order.
std::vector<IntVector> newton_polygon_directions(const LaurentPolynomial& f);

// Product of all line factors of f with direction v, normalized; 1 if none.
LaurentPolynomial line_content(const LaurentPolynomial& f, const IntVector& v);

struct LineFactor {
  IntVector direction;
  LaurentPolynomial phi;
};

struct LineFactorization {
  std::vector<LineFactor> factors;
  LaurentPolynomial remainder;
  IntVector monomial;

  std::size_t line_direction_count() const noexcept { return factors.size(); }
  std::vector<IntVector> directions() const;
  // X^monomial * prod phi_i * remainder
  LaurentPolynomial reconstruct() const;
};

LineFactorization line_factorization(const LaurentPolynomial& f);

// Directions present in every factorization, in the order of the first.
// A single annihilator may carry line factors the annihilator ideal does not
// need; intersecting over several annihilators prunes some of them, but is
// not claimed to give exactly the ideal's directions.
std::vector<IntVector> common_line_directions(const std::vector<LineFactorization>& lfs);

}  // namespace nivatk
