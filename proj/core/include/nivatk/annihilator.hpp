#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nivatk/configuration.hpp"
#include "nivatk/laurent.hpp"

namespace nivatk {

// Output of the nullspace construction: g c is the constant `constant`
// and f = (X^e - 1) g annihilates c, both checked on `verified_on`.
struct AnnihilatorReport {
  LaurentPolynomial g;
  Rational constant;
  LaurentPolynomial f;
  Window shape;
  Window sample;
  Window verified_on;
  std::size_t distinct_rows = 0;  // distinct augmented pattern vectors seen
};

// Kernel of the matrix whose rows are (c_{v+u_1}, ..., c_{v+u_n}, 1) for v in
// the sample. Returns nothing when the kernel is trivial, which certifies
// more than |shape| distinct patterns on the sample. Throws
// VerificationFailed if the kernel vector does not survive `verify`.
std::optional<AnnihilatorReport> find_annihilator(const Configuration& c, const Window& shape,
                                                  const Window& sample, const Window& verify);

struct ExpansionBound {
  Integer s;
  Integer r;  // s!
};

// s = c_max * sum |a_v| and r = s!; f(X^n) annihilates c for every n coprime to r.
ExpansionBound expansion_bound(const LaurentPolynomial& f, const Integer& c_max);

struct CongruenceResult {
  bool holds = true;
  std::optional<IntVector> witness;
  Rational value;  // (f c)_witness before reduction
};

// f c == 0 (mod p) on the window; f must have integer coefficients.
CongruenceResult congruence_check(const LaurentPolynomial& f, const Configuration& c, const Integer& p,
                                  const Window& window);

struct ExpansionCheck {
  std::int64_t p = 0;
  bool above_bound = false;                  // p > s
  std::optional<AnnihilationResult> exact;   // f(X^p) c = 0, only run above the bound
  CongruenceResult modular;                  // f(X^p) c == 0 (mod p)
};

struct ExpansionReport {
  ExpansionBound bound;
  Integer c_max;
  std::vector<ExpansionCheck> checks;
};

// For each prime p: the mod-p check always, and the exact annihilation check
// of f(X^p) when p > s. c_max is the largest |value| of c on the region the
// checks read (exact for periodic descriptors).
ExpansionReport verify_expansion(const LaurentPolynomial& f, const Configuration& c,
                                 const std::vector<std::int64_t>& primes, const Window& window);

// x_1 ... x_d * prod_{v in supp f, v != v0} (X^{r v} - X^{r v0}).
LaurentPolynomial build_radical_witness(const LaurentPolynomial& f, const Integer& r, const IntVector& v0);

// g = constant * X^monomial * prod (X^{w_i} - 1).
struct DifferenceForm {
  IntVector monomial;
  Rational constant;
  std::vector<IntVector> vectors;
  LaurentPolynomial expand() const;
};

// Difference form of the radical witness, read off its construction.
DifferenceForm radical_witness_form(const LaurentPolynomial& f, const Integer& r, const IntVector& v0);

// Splits g into binomial difference factors by exact division, if possible.
std::optional<DifferenceForm> difference_form(const LaurentPolynomial& g);

// Candidate factor vectors: nonzero, coordinates in [-bound, bound], first
// nonzero coordinate positive, in lexicographic order.
std::vector<IntVector> difference_candidates(std::size_t dim, std::int64_t bound);

// Shortest, then lexicographically least, nondecreasing sequence v_1..v_m
// (m <= max_factors) with prod (X^{v_i} - 1) c = 0 on the part of `window`
// where the product is defined.
std::optional<std::vector<IntVector>> search_difference_annihilator(const Configuration& c, int max_factors,
                                                                    std::int64_t coord_bound,
                                                                    const Window& window);

}  // namespace nivatk
