#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nivatk/int_vector.hpp"

namespace nivatk {

// Finite subset of Z^d: an inclusive axis-aligned box, or an explicit
// deduplicated point set (stored sorted). Box points enumerate with the
// first coordinate varying fastest.
class Window {
 public:
  Window() = default;

  static Window box(const IntVector& lo, const IntVector& hi);
  // Box with the given side lengths anchored at the origin.
  static Window sized(std::span<const std::int64_t> extents);
  static Window sized(std::initializer_list<std::int64_t> extents);
  static Window set(std::vector<IntVector> points);
  static Window empty(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  bool is_box() const noexcept { return is_box_; }
  bool empty() const noexcept { return size() == 0; }
  std::size_t size() const noexcept;

  // Only meaningful for nonempty windows; for sets these are the bounding box.
  const IntVector& lo() const noexcept { return lo_; }
  const IntVector& hi() const noexcept { return hi_; }
  std::int64_t extent(std::size_t axis) const noexcept { return hi_[axis] - lo_[axis] + 1; }

  bool contains(const IntVector& v) const;
  std::vector<IntVector> points() const;
  // Position of v in points(); requires contains(v).
  std::size_t index_of(const IntVector& v) const;
  IntVector point_at(std::size_t index) const;

  Window bounding_box() const;
  Window translated(const IntVector& v) const;
  // Box grown by `lo_pad` below and `hi_pad` above along each axis.
  Window expanded(const IntVector& lo_pad, const IntVector& hi_pad) const;
  bool subset_of(const Window& other) const;

  bool operator==(const Window& o) const;

  std::string str() const;

 private:
  std::size_t dim_ = 0;
  bool is_box_ = true;
  bool empty_ = true;
  IntVector lo_, hi_;
  std::vector<IntVector> set_;
};

// Intersection of two boxes; empty window if disjoint.
Window intersect_boxes(const Window& a, const Window& b);

}  // namespace nivatk
