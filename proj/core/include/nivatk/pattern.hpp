#pragma once

#include <algorithm>
#include <vector>

#include "nivatk/numeric.hpp"
#include "nivatk/window.hpp"

namespace nivatk {

// Values on a finite shape, stored in the shape's points() order.
template <class T>
class BasicPattern {
 public:
  BasicPattern() = default;
  explicit BasicPattern(Window shape, T fill = T(0)) : shape_(std::move(shape)), values_(shape_.size(), fill) {}
  BasicPattern(Window shape, std::vector<T> values) : shape_(std::move(shape)), values_(std::move(values)) {
    if (values_.size() != shape_.size()) throw Error(Errc::InvalidArgument, "pattern size mismatch");
  }

  const Window& shape() const noexcept { return shape_; }
  const std::vector<T>& values() const noexcept { return values_; }
  std::vector<T>& values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  const T& at(const IntVector& u) const { return values_[shape_.index_of(u)]; }
  T& at(const IntVector& u) { return values_[shape_.index_of(u)]; }

  bool all_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const T& x) { return x == 0; });
  }
  bool all_equal(const T& v) const {
    return std::all_of(values_.begin(), values_.end(), [&](const T& x) { return x == v; });
  }

  bool operator==(const BasicPattern& o) const { return shape_ == o.shape_ && values_ == o.values_; }

 private:
  Window shape_;
  std::vector<T> values_;
};

using Pattern = BasicPattern<Integer>;
using RationalPattern = BasicPattern<Rational>;

inline RationalPattern to_rational(const Pattern& p) {
  std::vector<Rational> v(p.values().begin(), p.values().end());
  return RationalPattern(p.shape(), std::move(v));
}

}  // namespace nivatk
