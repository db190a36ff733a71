#include "nivatk/nivat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nivatk/lattice.hpp"
#include "nivatk/parallel.hpp"

namespace nivatk {
namespace {

void require_nonnegative(std::int64_t M, std::int64_t N) {
  if (M < 0 || N < 0) throw Error(Errc::InvalidArgument, "block sides must be nonnegative");
}

Integer I(std::int64_t v) { return to_integer(v); }

void require_plane_vector(const IntVector& v) {
  if (v.dim() != 2) throw Error(Errc::DimensionMismatch, "direction " + v.str() + " is not two-dimensional");
  if (v.is_zero()) throw Error(Errc::ZeroVector, "direction");
  if (!is_primitive(v)) throw Error(Errc::NonPrimitive, v.str());
}

bool axis_aligned(const IntVector& v) { return v[0] == 0 || v[1] == 0; }

}  // namespace

Integer bound_disjoint_lines(std::int64_t m, std::int64_t n, std::int64_t M, std::int64_t N) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "box extents must be nonnegative");
  if (m == 0 && n == 0) throw Error(Errc::DegenerateDirection, "box (0,0)");
  require_nonnegative(M, N);
  return I(M) * I(n) + I(m) * I(N) + I(m) * I(n);
}

Rational bound_line_size(std::int64_t m, std::int64_t n, std::int64_t M, std::int64_t N, std::int64_t S) {
  if (S == 0) throw Error(Errc::ZeroArea, "parallelogram area is zero");
  if (S < 0) throw Error(Errc::InvalidArgument, "area must be positive");
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "box extents must be nonnegative");
  require_nonnegative(M, N);
  return make_rational(I(M) * I(n) + I(m) * I(N), I(S));
}

Rational bound_two_directions(const IntVector& v1, const IntVector& v2, std::int64_t M, std::int64_t N) {
  require_plane_vector(v1);
  require_plane_vector(v2);
  if (parallel(v1, v2)) throw Error(Errc::ParallelDirections, v1.str() + " and " + v2.str());
  require_nonnegative(M, N);
  IntVector b1 = box_of(v1), b2 = box_of(v2);
  Integer m1 = I(b1[0]), n1 = I(b1[1]), m2 = I(b2[0]), n2 = I(b2[1]);
  Integer den = m1 * n2 + m2 * n1;
  if (den == 0) throw Error(Errc::ZeroDenominator, v1.str() + " and " + v2.str());
  return make_rational((I(M) * n1 + m1 * I(N)) * (I(M) * n2 + m2 * I(N)), den);
}

std::pair<std::int64_t, std::int64_t> two_direction_block(const IntVector& v1, const IntVector& v2,
                                                          std::int64_t M, std::int64_t N) {
  IntVector b1 = box_of(v1), b2 = box_of(v2);
  return {checked_add(M, checked_add(b1[0], b2[0])), checked_add(N, checked_add(b1[1], b2[1]))};
}

const BoundEntry* BoundReport::find(const std::string& label) const {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

BoundReport corollary_report(const LaurentPolynomial& f, const LineFactorization& lf, std::int64_t M,
                             std::int64_t N) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "corollary_report");
  if (f.dim() != 2) throw Error(Errc::DimensionMismatch, "corollary_report is two-dimensional only");
  IntVector box = bbox(f);
  BoundReport r;
  r.M = M;
  r.N = N;
  r.m = box[0];
  r.n = box[1];
  if (M < r.m || N < r.n)
    throw Error(Errc::BlockTooSmall, std::to_string(M) + "x" + std::to_string(N) + " block is thinner than bbox " +
                                         box.str() + "; no annihilator fits inside");
  r.directions = lf.directions();
  const Integer base = I(M - r.m) * I(N - r.n);

  BoundEntry a;
  a.label = "cor-a";
  a.value = base;
  a.applicable = true;
  a.alpha = Rational(1);
  r.entries.push_back(a);

  for (std::size_t i = 0; i < r.directions.size(); ++i) {
    for (std::size_t j = i + 1; j < r.directions.size(); ++j) {
      const IntVector &v1 = r.directions[i], &v2 = r.directions[j];
      if (axis_aligned(v1) || axis_aligned(v2)) continue;
      BoundEntry b;
      b.label = "cor-b-pair";
      b.pair = {v1, v2};
      // An MxN block of c fixes an (M-m1-m2-m')x(N-n1-n2-n') block of f'c where f = phi1 phi2 f',
      // and bbox(f) dominates that sum, so the two-direction bound applies at (M-m, N-n).
      b.value = bound_two_directions(v1, v2, M - r.m, N - r.n);
      b.applicable = true;
      if (base > 0) b.alpha = b.value / Rational(base);
      r.entries.push_back(b);
    }
  }

  if (lf.line_direction_count() >= 3) {
    BoundEntry cc;
    cc.label = "cor-c";
    cc.value = 2 * base;
    cc.applicable = true;
    cc.conditional = true;
    cc.alpha = Rational(2);
    cc.note = "assumes opc equals the line-direction count";
    r.entries.push_back(cc);
  }

  r.best = 0;
  for (const auto& e : r.entries)
    if (e.applicable && e.value > r.best) r.best = e.value;
  return r;
}

const char* verdict_name(ScanVerdict v) { return v == ScanVerdict::ExceedsMN ? "ExceedsMN" : "Inconclusive"; }

std::vector<ScanRow> nivat_scan(const Configuration& c, std::pair<std::int64_t, std::int64_t> M_range,
                                std::pair<std::int64_t, std::int64_t> N_range, const Window& sample) {
  if (c.dim() != 2 || sample.dim() != 2) throw Error(Errc::DimensionMismatch, "nivat_scan is two-dimensional");
  if (M_range.first < 1 || N_range.first < 1 || M_range.first > M_range.second || N_range.first > N_range.second)
    throw Error(Errc::InvalidArgument, "block ranges must be nonempty and positive");
  if (sample.empty()) throw Error(Errc::EmptySample, "nivat_scan");

  std::vector<ScanRow> rows;
  for (auto M = M_range.first; M <= M_range.second; ++M)
    for (auto N = N_range.first; N <= N_range.second; ++N) {
      ScanRow r;
      r.M = M;
      r.N = N;
      r.threshold = checked_mul(M, N);
      rows.push_back(r);
    }

  PatternCounter counter(c, covering_box(sample, Window::sized({M_range.second, N_range.second})));
  parallel_chunks(rows.size(), [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      auto& r = rows[i];
      r.count = counter.count(Window::sized({r.M, r.N}), sample, static_cast<std::size_t>(r.threshold));
      r.verdict = r.count > static_cast<std::size_t>(r.threshold) ? ScanVerdict::ExceedsMN : ScanVerdict::Inconclusive;
    }
  });
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "M,N,count,threshold,verdict\n";
  for (const auto& r : rows)
    os << r.M << ',' << r.N << ',' << r.count << ',' << r.threshold << ',' << verdict_name(r.verdict) << '\n';
  return os.str();
}

CensusReport line_pattern_census(const Configuration& c, const Window& shape, const IntVector& v,
                                 const Window& sample) {
  if (v.dim() != c.dim() || shape.dim() != c.dim() || sample.dim() != c.dim())
    throw Error(Errc::DimensionMismatch, "line_pattern_census");
  if (v.is_zero()) throw Error(Errc::ZeroVector, "census direction");
  if (shape.empty()) throw Error(Errc::EmptyShape, "census");
  if (sample.empty()) throw Error(Errc::EmptySample, "census");

  Lattice line = Lattice::spanned_by({v}, v.dim());
  PatternCounter counter(c, covering_box(sample, shape));
  auto offs = counter.offsets(shape);
  std::map<IntVector, std::pair<std::size_t, std::set<std::string>>> groups;
  for (const auto& a : sample.points()) {
    auto& g = groups[line.reduce(a)];
    ++g.first;
    g.second.insert(counter.key(offs, a));
  }

  CensusReport out;
  out.anchor_lines = groups.size();
  std::set<std::set<std::string>> sets;
  std::set<std::string> used;
  for (const auto& [id, g] : groups) {
    out.lines.push_back({id, g.first, g.second.size()});
    sets.insert(g.second);
    bool disjoint = std::none_of(g.second.begin(), g.second.end(), [&](const std::string& k) { return used.count(k); });
    if (disjoint) {
      ++out.disjoint_lines;
      used.insert(g.second.begin(), g.second.end());
    }
  }
  out.distinct_sets = sets.size();
  return out;
}

const char* class_name(PeriodicityClass c) {
  switch (c) {
    case PeriodicityClass::DoublyPeriodicCandidate: return "DoublyPeriodicCandidate";
    case PeriodicityClass::OnePeriodicCandidate: return "OnePeriodicCandidate";
    case PeriodicityClass::NonPeriodicCandidate: return "NonPeriodicCandidate";
    case PeriodicityClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

ClassReport periodicity_class(const std::optional<std::vector<IntVector>>& search_result,
                              const std::optional<LineFactorization>& lf,
                              const std::vector<IntVector>& exact_periods) {
  ClassReport r;
  std::vector<IntVector> periods;
  for (const auto& p : exact_periods)
    if (!p.is_zero()) periods.push_back(p);
  bool two_independent = false;
  for (std::size_t i = 0; i < periods.size() && !two_independent; ++i)
    for (std::size_t j = i + 1; j < periods.size(); ++j)
      if (periods[i].dim() == periods[j].dim() && !parallel(periods[i], periods[j])) {
        two_independent = true;
        break;
      }

  if (lf) {
    r.direction_count = lf->line_direction_count();
  } else if (search_result) {
    std::set<IntVector> dirs;
    for (const auto& v : *search_result)
      if (!v.is_zero()) dirs.insert(canonical_sign(primitive_part(v)));
    r.direction_count = dirs.size();
  }

  if (two_independent) {
    r.cls = PeriodicityClass::DoublyPeriodicCandidate;
    r.certain = true;
    r.reason = "two independent exact periods";
    return r;
  }
  if (!r.direction_count) {
    if (!periods.empty()) {
      r.cls = PeriodicityClass::OnePeriodicCandidate;
      r.reason = "exact period " + periods.front().str() + " only";
    } else {
      r.reason = "no usable input";
    }
    return r;
  }
  std::size_t k = *r.direction_count;
  r.cls = k == 0 ? PeriodicityClass::DoublyPeriodicCandidate
          : k == 1 ? PeriodicityClass::OnePeriodicCandidate
                   : PeriodicityClass::NonPeriodicCandidate;
  r.reason = std::to_string(k) + " line direction(s)";
  if (r.cls == PeriodicityClass::NonPeriodicCandidate && !periods.empty()) {
    r.cls = PeriodicityClass::OnePeriodicCandidate;
    r.reason += ", but exact period " + periods.front().str();
  }
  return r;
}

}  // namespace nivatk
