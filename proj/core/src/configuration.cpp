#include "nivatk/configuration.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "nivatk/parallel.hpp"

namespace nivatk {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_dim(const Configuration& c, const IntVector& v) {
  if (v.dim() != c.dim())
    throw Error(Errc::DimensionMismatch,
                "position " + v.str() + " in a " + std::to_string(c.dim()) + "-dimensional configuration");
}

void require_dim(const Configuration& c, const Window& w) {
  if (w.dim() != c.dim())
    throw Error(Errc::DimensionMismatch,
                "window of dimension " + std::to_string(w.dim()) + " vs configuration " + std::to_string(c.dim()));
}

}  // namespace

const ConfigNode& Configuration::node() const {
  if (!node_) throw Error(Errc::InvalidArgument, "empty configuration");
  return *node_;
}

Configuration Configuration::periodic(Lattice lattice, const std::map<IntVector, Integer>& values) {
  if (!lattice.full_rank()) throw Error(Errc::RankDeficient, "periodic configuration needs a full-rank lattice");
  PeriodicNode n;
  n.values.assign(lattice.residue_count(), Integer(0));
  std::vector<char> seen(n.values.size(), 0);
  for (const auto& [pos, val] : values) {
    std::size_t idx = lattice.residue_index(lattice.reduce(pos));
    if (seen[idx] && n.values[idx] != val)
      throw Error(Errc::InvalidArgument, "conflicting values for residue class of " + pos.str());
    seen[idx] = 1;
    n.values[idx] = val;
  }
  n.lattice = std::move(lattice);
  Configuration c;
  c.dim_ = n.lattice.dim();
  c.node_ = std::make_shared<ConfigNode>(ConfigNode{std::move(n)});
  return c;
}

Configuration Configuration::constant(std::size_t dim, const Integer& value) {
  return periodic(Lattice::full(dim), {{IntVector(dim), value}});
}

Configuration Configuration::coset(IntVector offset, Lattice lattice, Integer value) {
  if (offset.dim() != lattice.dim()) throw Error(Errc::DimensionMismatch, "coset offset vs lattice");
  Configuration c;
  c.dim_ = offset.dim();
  c.node_ = std::make_shared<ConfigNode>(ConfigNode{CosetNode{std::move(offset), std::move(lattice), std::move(value)}});
  return c;
}

Configuration Configuration::mechanical(IntVector weights, QuadraticReal alpha) {
  Configuration c;
  c.dim_ = weights.dim();
  c.node_ = std::make_shared<ConfigNode>(ConfigNode{MechanicalNode{std::move(weights), std::move(alpha)}});
  return c;
}

Configuration Configuration::finite(std::size_t dim, std::map<IntVector, Integer> values) {
  std::erase_if(values, [](const auto& kv) { return kv.second == 0; });
  for (const auto& kv : values)
    if (kv.first.dim() != dim) throw Error(Errc::DimensionMismatch, "support point " + kv.first.str());
  Configuration c;
  c.dim_ = dim;
  c.node_ = std::make_shared<ConfigNode>(ConfigNode{FiniteNode{std::move(values)}});
  return c;
}

Configuration Configuration::sum(std::vector<Term> terms) {
  if (terms.empty()) throw Error(Errc::InvalidArgument, "empty sum");
  std::size_t dim = terms.front().config.dim();
  for (const auto& t : terms)
    if (t.config.dim() != dim) throw Error(Errc::DimensionMismatch, "sum terms of different dimensions");
  Configuration c;
  c.dim_ = dim;
  c.node_ = std::make_shared<ConfigNode>(ConfigNode{SumNode{std::move(terms)}});
  return c;
}

Configuration Configuration::value_map(Configuration inner, std::map<Integer, Integer> map, Integer fallback) {
  Configuration c;
  c.dim_ = inner.dim();
  c.node_ = std::make_shared<ConfigNode>(ConfigNode{ValueMapNode{std::move(inner), std::move(map), std::move(fallback)}});
  return c;
}

Configuration Configuration::shift(Configuration inner, IntVector offset) {
  if (offset.dim() != inner.dim()) throw Error(Errc::DimensionMismatch, "shift offset " + offset.str());
  Configuration c;
  c.dim_ = inner.dim();
  c.node_ = std::make_shared<ConfigNode>(ConfigNode{ShiftNode{std::move(inner), std::move(offset)}});
  return c;
}

Integer Configuration::evaluate(const IntVector& v) const {
  require_dim(*this, v);
  return std::visit(
      Overloaded{
          [&](const PeriodicNode& n) -> Integer { return n.values[n.lattice.residue_index(n.lattice.reduce(v))]; },
          [&](const CosetNode& n) -> Integer { return n.lattice.contains(v - n.offset) ? n.value : Integer(0); },
          [&](const MechanicalNode& n) -> Integer { return n.alpha.floor_times(dot(n.weights, v)); },
          [&](const FiniteNode& n) -> Integer {
            auto it = n.values.find(v);
            return it == n.values.end() ? Integer(0) : it->second;
          },
          [&](const SumNode& n) -> Integer {
            Integer s = 0;
            for (const auto& t : n.terms) s += t.coefficient * t.config.evaluate(v);
            return s;
          },
          [&](const ValueMapNode& n) -> Integer {
            auto it = n.map.find(n.inner.evaluate(v));
            return it == n.map.end() ? n.fallback : it->second;
          },
          [&](const ShiftNode& n) -> Integer { return n.inner.evaluate(v + n.offset); },
      },
      node().v);
}

Finitary Configuration::finitary() const {
  return std::visit(Overloaded{
                        [](const PeriodicNode&) { return Finitary::Yes; },
                        [](const CosetNode&) { return Finitary::Yes; },
                        [](const FiniteNode&) { return Finitary::Yes; },
                        [](const ValueMapNode&) { return Finitary::Yes; },
                        [](const MechanicalNode& n) {
                          bool trivial = n.weights.is_zero() || (n.alpha.is_rational() && n.alpha.a() == 0);
                          return trivial ? Finitary::Yes : Finitary::No;
                        },
                        [](const SumNode& n) {
                          for (const auto& t : n.terms)
                            if (t.config.finitary() != Finitary::Yes) return Finitary::Unknown;
                          return Finitary::Yes;
                        },
                        [](const ShiftNode& n) { return n.inner.finitary(); },
                    },
                    node().v);
}

bool Configuration::is_periodic_descriptor() const { return std::holds_alternative<PeriodicNode>(node().v); }

Pattern materialize(const Configuration& c, const Window& window) {
  require_dim(c, window);
  Pattern p(window);
  auto pts = window.points();
  auto& vals = p.values();
  // Periodic descriptors dominate the hot paths; skip the variant dispatch.
  if (const auto* pn = std::get_if<PeriodicNode>(&c.node().v)) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      vals[i] = pn->values[pn->lattice.residue_index(pn->lattice.reduce(pts[i]))];
    return p;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = c.evaluate(pts[i]);
  return p;
}

Pattern extract_pattern(const Configuration& c, const IntVector& anchor, const Window& shape) {
  require_dim(c, anchor);
  if (shape.empty()) return Pattern(shape);
  require_dim(c, shape);
  Pattern p(shape);
  auto pts = shape.points();
  for (std::size_t i = 0; i < pts.size(); ++i) p.values()[i] = c.evaluate(anchor + pts[i]);
  return p;
}

Window covering_box(const Window& anchors, const Window& shape) {
  return Window::box(anchors.lo() + shape.lo(), anchors.hi() + shape.hi());
}

PatternCounter::PatternCounter(const Configuration& c, const Window& region) { build(materialize(c, region)); }

PatternCounter::PatternCounter(const Pattern& values) { build(values); }

void PatternCounter::build(const Pattern& values) {
  if (!values.shape().is_box()) throw Error(Errc::InvalidArgument, "PatternCounter needs a box region");
  region_ = values.shape();
  std::map<Integer, std::uint32_t> index;
  for (const auto& v : values.values()) index.emplace(v, 0);
  std::uint32_t next = 0;
  for (auto& [val, id] : index) {
    id = next++;
    alphabet_.push_back(val);
  }
  ids_.reserve(values.size());
  for (const auto& v : values.values()) ids_.push_back(index.at(v));
  width_ = alphabet_.size() <= 0x100 ? 1 : alphabet_.size() <= 0x10000 ? 2 : 4;
}

std::vector<std::ptrdiff_t> PatternCounter::offsets(const Window& shape) const {
  std::vector<std::ptrdiff_t> out;
  for (const auto& u : shape.points()) {
    std::ptrdiff_t delta = 0, stride = 1;
    for (std::size_t i = 0; i < region_.dim(); ++i) {
      delta += static_cast<std::ptrdiff_t>(u[i]) * stride;
      stride *= static_cast<std::ptrdiff_t>(region_.extent(i));
    }
    out.push_back(delta);
  }
  return out;
}

std::string PatternCounter::key(const std::vector<std::ptrdiff_t>& offsets, const IntVector& anchor) const {
  std::string k;
  k.resize(offsets.size() * width_);
  auto base = static_cast<std::ptrdiff_t>(region_.index_of(anchor));
  char* out = k.data();
  for (auto off : offsets) {
    std::uint32_t id = ids_[static_cast<std::size_t>(base + off)];
    for (std::size_t b = 0; b < width_; ++b) *out++ = static_cast<char>((id >> (8 * b)) & 0xFF);
  }
  return k;
}

std::size_t PatternCounter::count(const Window& shape, const Window& anchors,
                                  std::optional<std::size_t> stop_above) const {
  if (shape.empty()) throw Error(Errc::EmptyShape, "pattern shape is empty");
  if (anchors.empty()) throw Error(Errc::EmptySample, "sample window is empty");
  if (!covering_box(anchors, shape).subset_of(region_))
    throw Error(Errc::InvalidArgument, "anchors + shape leave the materialized region");
  auto offs = offsets(shape);
  auto pts = anchors.points();

  if (stop_above) {
    std::unordered_set<std::string> seen;
    for (const auto& a : pts) {
      seen.insert(key(offs, a));
      if (seen.size() > *stop_above) break;
    }
    return seen.size();
  }

  std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, pts.size() / 4096));
  std::vector<std::unordered_set<std::string>> parts(std::max<std::size_t>(workers, 1));
  parallel_chunks(
      pts.size(),
      [&](std::size_t w, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) parts[w].insert(key(offs, pts[i]));
      },
      workers);
  for (std::size_t i = 1; i < parts.size(); ++i) parts[0].merge(parts[i]);
  return parts[0].size();
}

ComplexityResult pattern_complexity(const Configuration& c, const Window& shape, const Window& sample) {
  if (shape.empty()) throw Error(Errc::EmptyShape, "pattern shape is empty");
  if (sample.empty()) throw Error(Errc::EmptySample, "sample window is empty");
  require_dim(c, shape);
  require_dim(c, sample);
  ComplexityResult r;
  if (const auto* pn = std::get_if<PeriodicNode>(&c.node().v)) {
    r.sample_window = pn->lattice.fundamental_box();
    r.exact = true;
  } else {
    r.sample_window = sample;
  }
  PatternCounter counter(c, covering_box(r.sample_window, shape));
  r.count = counter.count(shape, r.sample_window);
  return r;
}

PeriodicityResult periodicity_test(const Configuration& c, const IntVector& v, const Window& sample) {
  require_dim(c, v);
  if (v.is_zero()) throw Error(Errc::ZeroVector, "periodicity test with zero vector");
  PeriodicityResult r;
  const auto& node = c.node().v;

  if (const auto* pn = std::get_if<PeriodicNode>(&node)) {
    r.exact = true;
    for (const auto& u : pn->lattice.fundamental_box().points()) {
      if (c.evaluate(u) != c.evaluate(u + v)) {
        r.verdict = Periodicity::NotPeriodic;
        r.witness = u;
        return r;
      }
    }
    r.verdict = Periodicity::Periodic;
    return r;
  }
  if (const auto* cn = std::get_if<CosetNode>(&node)) {
    r.exact = true;
    if (cn->value == 0 || cn->lattice.contains(v)) {
      r.verdict = Periodicity::Periodic;
    } else {
      r.verdict = Periodicity::NotPeriodic;
      r.witness = cn->offset;
    }
    return r;
  }
  if (const auto* fn = std::get_if<FiniteNode>(&node)) {
    r.exact = true;
    if (fn->values.empty()) {
      r.verdict = Periodicity::Periodic;
      return r;
    }
    // The support point furthest along v has a zero at its v-translate.
    auto best = fn->values.begin();
    for (auto it = fn->values.begin(); it != fn->values.end(); ++it)
      if (dot(it->first, v) > dot(best->first, v)) best = it;
    r.verdict = Periodicity::NotPeriodic;
    r.witness = best->first;
    return r;
  }

  require_dim(c, sample);
  for (const auto& u : sample.points()) {
    if (c.evaluate(u) != c.evaluate(u + v)) {
      r.verdict = Periodicity::NotPeriodic;
      r.witness = u;
      return r;
    }
  }
  r.verdict = Periodicity::Unknown;
  return r;
}

Configuration merge_letters(const Configuration& c, std::map<Integer, Integer> map, Integer fallback) {
  return Configuration::value_map(c, std::move(map), std::move(fallback));
}

std::set<Integer> observed_alphabet(const Configuration& c, const Window& window) {
  auto p = materialize(c, window);
  return {p.values().begin(), p.values().end()};
}

}  // namespace nivatk
