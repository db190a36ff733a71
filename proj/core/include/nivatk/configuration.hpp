#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "nivatk/int_vector.hpp"
#include "nivatk/lattice.hpp"
#include "nivatk/pattern.hpp"
#include "nivatk/quadratic_real.hpp"
#include "nivatk/window.hpp"

namespace nivatk {

struct ConfigNode;

enum class Finitary { Yes, No, Unknown };

// A finitely described integral configuration c : Z^d -> Z, i.e. the formal
// power series sum c_v X^v. Immutable; copies share the description.
class Configuration {
 public:
  struct Term;

  Configuration() = default;

  // Lattice-periodic: c_v = values[v mod L]; unlisted residues are 0.
  static Configuration periodic(Lattice lattice, const std::map<IntVector, Integer>& values);
  static Configuration constant(std::size_t dim, const Integer& value);
  // c_v = value if v in offset + L, else 0. L may have any rank.
  static Configuration coset(IntVector offset, Lattice lattice, Integer value);
  // c_v = floor(<weights, v> * alpha).
  static Configuration mechanical(IntVector weights, QuadraticReal alpha);
  static Configuration finite(std::size_t dim, std::map<IntVector, Integer> values);
  static Configuration sum(std::vector<Term> terms);
  // c_v = map(inner_v), with `fallback` for values missing from the map.
  static Configuration value_map(Configuration inner, std::map<Integer, Integer> map, Integer fallback);
  // c_v = inner_{v + offset}.
  static Configuration shift(Configuration inner, IntVector offset);

  std::size_t dim() const noexcept { return dim_; }
  const ConfigNode& node() const;
  bool valid() const noexcept { return node_ != nullptr; }

  Integer evaluate(const IntVector& v) const;
  Finitary finitary() const;
  bool is_periodic_descriptor() const;

 private:
  std::shared_ptr<const ConfigNode> node_;
  std::size_t dim_ = 0;
};

struct Configuration::Term {
  Integer coefficient;
  Configuration config;
};

struct PeriodicNode {
  Lattice lattice;
  std::vector<Integer> values;  // indexed by Lattice::residue_index
};
struct CosetNode {
  IntVector offset;
  Lattice lattice;
  Integer value;
};
struct MechanicalNode {
  IntVector weights;
  QuadraticReal alpha;
};
struct FiniteNode {
  std::map<IntVector, Integer> values;
};
struct SumNode {
  std::vector<Configuration::Term> terms;
};
struct ValueMapNode {
  Configuration inner;
  std::map<Integer, Integer> map;
  Integer fallback;
};
struct ShiftNode {
  Configuration inner;
  IntVector offset;
};

struct ConfigNode {
  std::variant<PeriodicNode, CosetNode, MechanicalNode, FiniteNode, SumNode, ValueMapNode, ShiftNode> v;
};

// Values of c on every point of `window`.
Pattern materialize(const Configuration& c, const Window& window);
Pattern extract_pattern(const Configuration& c, const IntVector& anchor, const Window& shape);

struct ComplexityResult {
  std::size_t count = 0;
  bool exact = false;
  Window sample_window;  // anchors actually scanned
};

// Distinct patterns c_{v+shape} over anchors v in `sample`. For periodic
// descriptors the sample is replaced by one fundamental domain and the count
// is exact; otherwise it is a lower bound on the true complexity.
ComplexityResult pattern_complexity(const Configuration& c, const Window& shape, const Window& sample);

enum class Periodicity { Periodic, NotPeriodic, Unknown };

struct PeriodicityResult {
  Periodicity verdict = Periodicity::Unknown;
  bool exact = false;
  std::optional<IntVector> witness;  // c_w != c_{w+v}
};

PeriodicityResult periodicity_test(const Configuration& c, const IntVector& v, const Window& sample);

// Letter merging: wraps c in a value map.
Configuration merge_letters(const Configuration& c, std::map<Integer, Integer> map, Integer fallback);

// Values observed on a window (sorted).
std::set<Integer> observed_alphabet(const Configuration& c, const Window& window);

// Distinct-pattern counting over a materialized box. Values are mapped to
// dense symbol ids; pattern keys are packed byte strings so equality is exact.
class PatternCounter {
 public:
  PatternCounter(const Configuration& c, const Window& region);
  explicit PatternCounter(const Pattern& values);

  const Window& region() const noexcept { return region_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }

  // Counts distinct shape-patterns over anchors; anchor + shape must lie in
  // the region. Stops early once the count exceeds `stop_above`.
  std::size_t count(const Window& shape, const Window& anchors,
                    std::optional<std::size_t> stop_above = std::nullopt) const;
  // Packed key of the pattern at one anchor.
  std::string key(const std::vector<std::ptrdiff_t>& offsets, const IntVector& anchor) const;
  std::vector<std::ptrdiff_t> offsets(const Window& shape) const;

 private:
  void build(const Pattern& values);

  Window region_;
  std::vector<Integer> alphabet_;
  std::vector<std::uint32_t> ids_;
  std::size_t width_ = 1;  // bytes per symbol in keys
};

// Smallest box containing every anchor + shape point.
Window covering_box(const Window& anchors, const Window& shape);

}  // namespace nivatk
