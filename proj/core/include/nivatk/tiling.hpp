#pragma once

#include <optional>
#include <vector>

#include "nivatk/annihilator.hpp"
#include "nivatk/configuration.hpp"
#include "nivatk/lattice.hpp"
#include "nivatk/laurent.hpp"

namespace nivatk {

// Finite tile D, stored as its translate with componentwise minimum 0,
// sorted and deduplicated.
class ClusterTile {
 public:
  ClusterTile() = default;
  explicit ClusterTile(std::vector<IntVector> cells);

  std::size_t dim() const noexcept { return cells_.front().dim(); }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<IntVector>& cells() const noexcept { return cells_; }
  // The tile -D, again in canonical position.
  ClusterTile negated() const;

  bool operator==(const ClusterTile& o) const = default;

 private:
  std::vector<IntVector> cells_;
};

// C = residues + lattice.
struct PeriodicCoTiler {
  Lattice lattice;
  std::vector<IntVector> residues;
};

LaurentPolynomial tile_polynomial(const ClusterTile& d);

// Indicator configuration of C.
Configuration cotiler_configuration(const PeriodicCoTiler& c);

enum class CoverVerdict { Valid, Overlap, Gap };

struct CoverCheck {
  CoverVerdict verdict = CoverVerdict::Valid;
  std::optional<IntVector> witness;  // canonical residue covered twice or not at all
  bool valid() const noexcept { return verdict == CoverVerdict::Valid; }
};

// Exact: every class of Z^d / L must be hit exactly once by D + residues.
CoverCheck verify_cotiler(const ClusterTile& d, const PeriodicCoTiler& c);

// All full-rank lattices of the given index in canonical order: diagonal
// tuples lexicographically, then the entries above the diagonal.
std::vector<Lattice> lattices_of_index(std::size_t dim, std::int64_t index);

// First co-tiler over lattices of index |D| k <= max_index, in canonical
// order; residues are canonical representatives, sorted.
std::optional<PeriodicCoTiler> search_periodic_cotiler(const ClusterTile& d, std::int64_t max_index);

struct PeriodCheck {
  IntVector vector;  // p (v - u), canonical sign
  bool verified = false;
};

struct PrimeCheckReport {
  std::int64_t p = 0;
  std::vector<PeriodCheck> periods;
  CongruenceResult congruence;  // f(X^p) c == 0 (mod p) on the window
  bool all_verified() const;
};

// For |D| = p prime: C must be p(v - u)-periodic for all u, v in D. Exact
// for a periodic co-tiler; the congruence is checked on `window`.
PrimeCheckReport prime_periodicity_check(const ClusterTile& d, const PeriodicCoTiler& c, const Window& window);
// Same for a co-tiler given as a configuration; periods checked on the window.
PrimeCheckReport prime_periodicity_check(const ClusterTile& d, const Configuration& c, const Window& window);

}  // namespace nivatk
