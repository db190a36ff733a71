#include "nivatk/int_vector.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace nivatk {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimitive: return "NonPrimitive";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyShape: return "EmptyShape";
    case Errc::EmptySample: return "EmptySample";
    case Errc::EmptyResult: return "EmptyResult";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case Errc::V0NotInSupport: return "V0NotInSupport";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::Infeasible: return "Infeasible";
    case Errc::DegenerateDirection: return "DegenerateDirection";
    case Errc::ZeroArea: return "ZeroArea";
    case Errc::ParallelDirections: return "ParallelDirections";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::BlockTooSmall: return "BlockTooSmall";
    case Errc::NotPrime: return "NotPrime";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NonSquarefreeRadicand: return "NonSquarefreeRadicand";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

IntVector::IntVector(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDim)
    throw Error(Errc::DimensionMismatch, "dimension must be in [1," + std::to_string(kMaxDim) + "]");
}

IntVector::IntVector(std::initializer_list<std::int64_t> coords)
    : IntVector(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

IntVector::IntVector(std::span<const std::int64_t> coords) : IntVector(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

IntVector IntVector::unit(std::size_t dim, std::size_t axis) {
  IntVector v(dim);
  v[axis] = 1;
  return v;
}

IntVector IntVector::filled(std::size_t dim, std::int64_t value) {
  IntVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = value;
  return v;
}

bool IntVector::is_zero() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

void require_same_dim(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim())
    throw Error(Errc::DimensionMismatch, a.str() + " vs " + b.str());
}

IntVector IntVector::operator+(const IntVector& o) const {
  require_same_dim(*this, o);
  IntVector r(*this);
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
  return r;
}

IntVector IntVector::operator-(const IntVector& o) const {
  require_same_dim(*this, o);
  IntVector r(*this);
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = checked_sub(c_[i], o.c_[i]);
  return r;
}

IntVector IntVector::operator-() const {
  IntVector r(*this);
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = checked_sub(0, c_[i]);
  return r;
}

IntVector IntVector::operator*(std::int64_t k) const {
  IntVector r(*this);
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = checked_mul(c_[i], k);
  return r;
}

bool IntVector::operator==(const IntVector& o) const noexcept {
  if (dim_ != o.dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::strong_ordering IntVector::operator<=>(const IntVector& o) const noexcept {
  if (dim_ != o.dim_) return dim_ <=> o.dim_;
  for (std::size_t i = 0; i < dim_; ++i)
    if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
  return std::strong_ordering::equal;
}

std::string IntVector::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

std::int64_t content(const IntVector& v) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) g = std::gcd(g, v[i]);
  return g;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

IntVector primitive_part(const IntVector& v) {
  std::int64_t g = content(v);
  if (g == 0) throw Error(Errc::ZeroVector, "primitive part of zero vector");
  IntVector r(v);
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] / g;
  return r;
}

IntVector canonical_sign(const IntVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] > 0) return v;
    if (v[i] < 0) return -v;
  }
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += to_integer(a[i]) * to_integer(b[i]);
  return s;
}

IntVector box_of(const IntVector& v) {
  IntVector r(v);
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] < 0 ? checked_sub(0, v[i]) : v[i];
  return r;
}

bool parallel(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (to_integer(a[i]) * to_integer(b[j]) != to_integer(a[j]) * to_integer(b[i])) return false;
  return true;
}

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
  std::size_t h = v.dim();
  for (std::size_t i = 0; i < v.dim(); ++i)
    h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(v[i]) + (h >> 29);
  return h;
}

}  // namespace nivatk
