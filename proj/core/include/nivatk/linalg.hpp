#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "nivatk/numeric.hpp"

namespace nivatk::linalg {

using Matrix = std::vector<std::vector<Rational>>;

struct Rref {
  Matrix rows;                      // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column per row
  std::size_t cols = 0;
};

Rref rref(Matrix m, std::size_t cols);

// Kernel basis read off the RREF: one vector per free column, in increasing
// column order, with that free variable 1 and the other free variables 0.
std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols);

// Scales v to coprime integers whose first nonzero entry is positive.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

// Sparse linear system A x = b over the rationals.
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return rows_.size(); }

  // Entries with equal columns are summed.
  void add_equation(std::vector<std::pair<std::uint32_t, Rational>> entries, Rational rhs);

  struct Solution {
    std::vector<Rational> x;  // free variables pinned to 0
    std::size_t rank = 0;
  };
  struct Inconsistent {
    std::size_t equation;  // an original equation index involved in 0 = c
  };

  // Canonical solution: equal to the reduced-row-echelon solution with all
  // free variables (non-pivot columns, leftmost-independent rule) set to 0.
  std::variant<Solution, Inconsistent> solve() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows_;
  std::vector<Rational> rhs_;
};

}  // namespace nivatk::linalg
