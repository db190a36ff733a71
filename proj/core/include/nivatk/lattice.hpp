#pragma once

#include <cstddef>
#include <vector>

#include "nivatk/int_vector.hpp"
#include "nivatk/window.hpp"

namespace nivatk {

// Sublattice of Z^d spanned by linearly independent generators.
//
// Internally kept in a canonical echelon basis: one row per pivot coordinate,
// pivots taken from the last coordinate down, each pivot positive and every
// entry of a row at a lower pivot coordinate reduced into [0, pivot). For a
// full-rank lattice the rows, read as columns, form the upper-triangular
// column Hermite normal form, and the canonical residues fill the box
// [0, a_1) x ... x [0, a_d) of its diagonal.
class Lattice {
 public:
  Lattice() = default;
  // Throws RankDeficient if the generators are linearly dependent (or empty).
  explicit Lattice(std::vector<IntVector> generators);
  // Accepts dependent generators; the rank is whatever they span.
  static Lattice spanned_by(std::vector<IntVector> generators, std::size_t dim);
  static Lattice full(std::size_t dim);  // Z^d itself
  static Lattice diagonal(std::span<const std::int64_t> periods);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full_rank() const noexcept { return rank() == dim_; }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }

  // Canonical representative of v + L.
  IntVector reduce(const IntVector& v) const;
  bool contains(const IntVector& v) const;

  // Full-rank only.
  Integer index() const;
  std::vector<IntVector> hnf_columns() const;
  IntVector diagonal() const;
  Window fundamental_box() const;
  std::size_t residue_index(const IntVector& reduced) const;
  std::size_t residue_count() const;

  bool operator==(const Lattice& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }

 private:
  void require_full_rank() const;

  std::size_t dim_ = 0;
  std::vector<IntVector> generators_;
  // Echelon rows sorted by descending pivot coordinate.
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

struct FundamentalDomain {
  std::vector<IntVector> basis;     // HNF columns, upper triangular
  std::vector<IntVector> residues;  // canonical coset representatives
  Integer index;
};

FundamentalDomain hnf_fundamental_domain(const Lattice& lattice);

// w with |det(v, w)| = 1 for primitive v in Z^2. Among valid w, picks the one
// minimizing max(|w1|,|w2|), then |w1|+|w2|; ties prefer w1 >= 0, then
// det(v, w) = +1, then lexicographically smallest.
IntVector unimodular_complement(const IntVector& v);

// |u1 v2 - u2 v1|.
Integer parallelogram_area(const IntVector& u, const IntVector& v);

}  // namespace nivatk
