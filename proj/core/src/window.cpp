#include "nivatk/window.hpp"

#include <algorithm>
#include <sstream>

namespace nivatk {

Window Window::box(const IntVector& lo, const IntVector& hi) {
  require_same_dim(lo, hi);
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (lo[i] > hi[i]) throw Error(Errc::InvalidArgument, "box lo " + lo.str() + " exceeds hi " + hi.str());
  Window w;
  w.dim_ = lo.dim();
  w.is_box_ = true;
  w.empty_ = false;
  w.lo_ = lo;
  w.hi_ = hi;
  return w;
}

Window Window::sized(std::span<const std::int64_t> extents) {
  IntVector lo(extents.size()), hi(extents.size());
  for (std::size_t i = 0; i < extents.size(); ++i) {
    if (extents[i] <= 0) return empty(extents.size());
    hi[i] = extents[i] - 1;
  }
  return box(lo, hi);
}

Window Window::sized(std::initializer_list<std::int64_t> extents) {
  return sized(std::span<const std::int64_t>(extents.begin(), extents.size()));
}

Window Window::set(std::vector<IntVector> points) {
  if (points.empty()) throw Error(Errc::InvalidArgument, "use Window::empty for empty sets");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Window w;
  w.dim_ = points.front().dim();
  w.is_box_ = false;
  w.empty_ = false;
  w.lo_ = points.front();
  w.hi_ = points.front();
  for (const auto& p : points) {
    if (p.dim() != w.dim_) throw Error(Errc::DimensionMismatch, "mixed dimensions in point set");
    for (std::size_t i = 0; i < w.dim_; ++i) {
      w.lo_[i] = std::min(w.lo_[i], p[i]);
      w.hi_[i] = std::max(w.hi_[i], p[i]);
    }
  }
  w.set_ = std::move(points);
  return w;
}

Window Window::empty(std::size_t dim) {
  Window w;
  w.dim_ = dim;
  w.is_box_ = false;
  w.empty_ = true;
  return w;
}

std::size_t Window::size() const noexcept {
  if (empty_) return 0;
  if (!is_box_) return set_.size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim_; ++i) n *= static_cast<std::size_t>(extent(i));
  return n;
}

bool Window::contains(const IntVector& v) const {
  if (empty_) return false;
  require_same_dim(v, lo_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (v[i] < lo_[i] || v[i] > hi_[i]) return false;
  if (is_box_) return true;
  return std::binary_search(set_.begin(), set_.end(), v);
}

std::vector<IntVector> Window::points() const {
  if (empty_) return {};
  if (!is_box_) return set_;
  std::vector<IntVector> out;
  out.reserve(size());
  IntVector p = lo_;
  while (true) {
    out.push_back(p);
    std::size_t i = 0;
    for (; i < dim_; ++i) {
      if (p[i] < hi_[i]) {
        ++p[i];
        break;
      }
      p[i] = lo_[i];
    }
    if (i == dim_) break;
  }
  return out;
}

std::size_t Window::index_of(const IntVector& v) const {
  if (!is_box_) {
    auto it = std::lower_bound(set_.begin(), set_.end(), v);
    return static_cast<std::size_t>(it - set_.begin());
  }
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    idx += static_cast<std::size_t>(v[i] - lo_[i]) * stride;
    stride *= static_cast<std::size_t>(extent(i));
  }
  return idx;
}

IntVector Window::point_at(std::size_t index) const {
  if (!is_box_) return set_.at(index);
  IntVector p = lo_;
  for (std::size_t i = 0; i < dim_; ++i) {
    auto e = static_cast<std::size_t>(extent(i));
    p[i] = lo_[i] + static_cast<std::int64_t>(index % e);
    index /= e;
  }
  return p;
}

Window Window::bounding_box() const {
  if (empty_) return *this;
  return box(lo_, hi_);
}

Window Window::translated(const IntVector& v) const {
  if (empty_) return *this;
  if (is_box_) return box(lo_ + v, hi_ + v);
  std::vector<IntVector> pts;
  pts.reserve(set_.size());
  for (const auto& p : set_) pts.push_back(p + v);
  return set(std::move(pts));
}

Window Window::expanded(const IntVector& lo_pad, const IntVector& hi_pad) const {
  if (!is_box_) throw Error(Errc::InvalidArgument, "expanded() requires a box");
  IntVector lo = lo_ - lo_pad, hi = hi_ + hi_pad;
  for (std::size_t i = 0; i < dim_; ++i)
    if (lo[i] > hi[i]) return empty(dim_);
  return box(lo, hi);
}

bool Window::subset_of(const Window& other) const {
  if (empty_) return true;
  if (other.empty_) return false;
  if (is_box_ && other.is_box_) {
    for (std::size_t i = 0; i < dim_; ++i)
      if (lo_[i] < other.lo_[i] || hi_[i] > other.hi_[i]) return false;
    return true;
  }
  for (const auto& p : points())
    if (!other.contains(p)) return false;
  return true;
}

bool Window::operator==(const Window& o) const {
  if (dim_ != o.dim_ || empty_ != o.empty_) return false;
  if (empty_) return true;
  if (is_box_ != o.is_box_) return points() == o.points();
  if (is_box_) return lo_ == o.lo_ && hi_ == o.hi_;
  return set_ == o.set_;
}

std::string Window::str() const {
  std::ostringstream os;
  if (empty_) {
    os << "{}";
  } else if (is_box_) {
    os << lo_ << ".." << hi_;
  } else {
    os << '{';
    for (std::size_t i = 0; i < set_.size(); ++i) os << (i ? " " : "") << set_[i];
    os << '}';
  }
  return os.str();
}

Window intersect_boxes(const Window& a, const Window& b) {
  if (a.empty() || b.empty()) return Window::empty(a.dim());
  if (!a.is_box() || !b.is_box()) throw Error(Errc::InvalidArgument, "intersect_boxes requires boxes");
  require_same_dim(a.lo(), b.lo());
  IntVector lo(a.dim()), hi(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    lo[i] = std::max(a.lo()[i], b.lo()[i]);
    hi[i] = std::min(a.hi()[i], b.hi()[i]);
    if (lo[i] > hi[i]) return Window::empty(a.dim());
  }
  return Window::box(lo, hi);
}

}  // namespace nivatk
