#pragma once

#include <optional>
#include <vector>

#include "nivatk/configuration.hpp"
#include "nivatk/pattern.hpp"

namespace nivatk {

// u -> p_{u-v} - p_u on shape cap (shape + v). Throws EmptyResult when the
// domain is empty.
template <class T>
BasicPattern<T> difference(const BasicPattern<T>& p, const IntVector& v);

// o on p's box with difference(o, v) = d wherever defined; o is 0 at the
// first point of every line u + Zv inside the box.
template <class T>
BasicPattern<T> integrate(const BasicPattern<T>& d, const IntVector& v);

struct WindowDecomposition {
  std::vector<IntVector> vectors;
  std::vector<RationalPattern> components;
  Window core;
  bool residual_check = false;  // sum and per-component periodicity both hold
  bool integral = false;        // every component value is an integer
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

// Components c_i on the box `core`, c_i constant along every line
// u + Z v_i, with sum c_i = c on core. Canonical solution: free unknowns are
// 0. The product of the (X^{v_i} - 1) must annihilate c wherever its
// stencil fits inside `halo` (VerificationFailed otherwise); an
// inconsistent system throws Infeasible.
WindowDecomposition decompose(const Configuration& c, const std::vector<IntVector>& vectors, const Window& core,
                              const Window& halo);

// Both decomposition invariants, checked exactly against c.
bool check_decomposition(const Configuration& c, const WindowDecomposition& d);

}  // namespace nivatk
