#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>

#include "nivatk/numeric.hpp"

namespace nivatk {

// Lattice point / exponent vector in Z^d. Coordinates are checked int64;
// arithmetic that would overflow throws Errc::Overflow.
class IntVector {
 public:
  static constexpr std::size_t kMaxDim = 4;

  IntVector() = default;
  explicit IntVector(std::size_t dim);
  IntVector(std::initializer_list<std::int64_t> coords);
  explicit IntVector(std::span<const std::int64_t> coords);

  static IntVector unit(std::size_t dim, std::size_t axis);
  static IntVector filled(std::size_t dim, std::int64_t value);

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t operator[](std::size_t i) const noexcept { return c_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return c_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return {c_.data(), dim_}; }

  bool is_zero() const noexcept;

  IntVector operator+(const IntVector& o) const;
  IntVector operator-(const IntVector& o) const;
  IntVector operator-() const;
  IntVector operator*(std::int64_t k) const;
  IntVector& operator+=(const IntVector& o) { return *this = *this + o; }
  IntVector& operator-=(const IntVector& o) { return *this = *this - o; }

  bool operator==(const IntVector& o) const noexcept;
  // Lexicographic on coordinates; vectors of smaller dimension sort first.
  std::strong_ordering operator<=>(const IntVector& o) const noexcept;

  std::string str() const;

 private:
  std::array<std::int64_t, kMaxDim> c_{};
  std::size_t dim_ = 0;
};

std::ostream& operator<<(std::ostream& os, const IntVector& v);

void require_same_dim(const IntVector& a, const IntVector& b);

// gcd of absolute coordinate values (0 for the zero vector).
std::int64_t content(const IntVector& v);
bool is_primitive(const IntVector& v);
IntVector primitive_part(const IntVector& v);
// Sign-normalized so the first nonzero coordinate is positive.
IntVector canonical_sign(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
// (|v_1|, ..., |v_d|): extents of the smallest box containing 0 and v.
IntVector box_of(const IntVector& v);
bool parallel(const IntVector& a, const IntVector& b);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

}  // namespace nivatk
