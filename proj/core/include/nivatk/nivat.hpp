#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nivatk/configuration.hpp"
#include "nivatk/laurent.hpp"

namespace nivatk {

// Mn + mN + mn disjoint lines of blocks.
Integer bound_disjoint_lines(std::int64_t m, std::int64_t n, std::int64_t M, std::int64_t N);
// (Mn + mN) / S, a strict lower bound on the size of a line of patterns.
Rational bound_line_size(std::int64_t m, std::int64_t n, std::int64_t M, std::int64_t N, std::int64_t S);
// (M n1 + m1 N)(M n2 + m2 N) / (m1 n2 + m2 n1) with (m_i, n_i) = box(v_i).
Rational bound_two_directions(const IntVector& v1, const IntVector& v2, std::int64_t M, std::int64_t N);
// The block size that bound applies to: (M + m1 + m2, N + n1 + n2).
std::pair<std::int64_t, std::int64_t> two_direction_block(const IntVector& v1, const IntVector& v2,
                                                          std::int64_t M, std::int64_t N);

struct BoundEntry {
  std::string label;  // cor-a, cor-b-pair, cor-c
  Rational value;
  bool applicable = false;
  bool conditional = false;  // rests on opc = number of line directions
  std::vector<IntVector> pair;
  std::optional<Rational> alpha;  // value / (M-m)(N-n)
  std::string note;
};

struct BoundReport {
  std::int64_t M = 0, N = 0, m = 0, n = 0;
  std::vector<IntVector> directions;
  std::vector<BoundEntry> entries;
  Rational best;  // largest applicable value

  const BoundEntry* find(const std::string& label) const;
};

BoundReport corollary_report(const LaurentPolynomial& f, const LineFactorization& lf, std::int64_t M,
                             std::int64_t N);

enum class ScanVerdict { ExceedsMN, Inconclusive };

struct ScanRow {
  std::int64_t M = 0, N = 0;
  std::size_t count = 0;  // sampled lower bound on P_c(M,N)
  std::int64_t threshold = 0;
  ScanVerdict verdict = ScanVerdict::Inconclusive;
};

// Rows in M-major order. Counting for a cell stops once it exceeds MN.
std::vector<ScanRow> nivat_scan(const Configuration& c, std::pair<std::int64_t, std::int64_t> M_range,
                                std::pair<std::int64_t, std::int64_t> N_range, const Window& sample);
std::string scan_csv(const std::vector<ScanRow>& rows);
const char* verdict_name(ScanVerdict v);

struct CensusLine {
  IntVector id;  // canonical point of the line modulo v
  std::size_t anchors = 0;
  std::size_t distinct = 0;
};

struct CensusReport {
  std::vector<CensusLine> lines;
  std::size_t anchor_lines = 0;     // lines of anchors met by the sample
  std::size_t distinct_sets = 0;    // distinct pattern sets among them
  std::size_t disjoint_lines = 0;   // greedy pairwise-disjoint pattern sets
};

// Anchors of the sample grouped into lines w + Zv, with distinct shape
// patterns counted per line.
CensusReport line_pattern_census(const Configuration& c, const Window& shape, const IntVector& v,
                                 const Window& sample);

enum class PeriodicityClass { DoublyPeriodicCandidate, OnePeriodicCandidate, NonPeriodicCandidate, Unknown };

struct ClassReport {
  PeriodicityClass cls = PeriodicityClass::Unknown;
  bool certain = false;  // backed by exact periods
  std::optional<std::size_t> direction_count;
  std::string reason;
};

// Line-direction count of an annihilator as a proxy for opc (0, 1, >= 2),
// upgraded to certainty by exactly verified periods.
ClassReport periodicity_class(const std::optional<std::vector<IntVector>>& search_result,
                              const std::optional<LineFactorization>& lf,
                              const std::vector<IntVector>& exact_periods = {});
const char* class_name(PeriodicityClass c);

}  // namespace nivatk
