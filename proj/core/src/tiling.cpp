#include "nivatk/tiling.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "nivatk/parallel.hpp"

namespace nivatk {

ClusterTile::ClusterTile(std::vector<IntVector> cells) {
  if (cells.empty()) throw Error(Errc::EmptyShape, "tile has no cells");
  const std::size_t d = cells.front().dim();
  IntVector lo = cells.front();
  for (const auto& c : cells) {
    if (c.dim() != d) throw Error(Errc::DimensionMismatch, "tile cell " + c.str());
    for (std::size_t i = 0; i < d; ++i) lo[i] = std::min(lo[i], c[i]);
  }
  for (auto& c : cells) c -= lo;
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  cells_ = std::move(cells);
}

ClusterTile ClusterTile::negated() const {
  std::vector<IntVector> neg;
  for (const auto& c : cells_) neg.push_back(-c);
  return ClusterTile(std::move(neg));
}

LaurentPolynomial tile_polynomial(const ClusterTile& d) {
  LaurentPolynomial f(d.dim());
  for (const auto& c : d.cells()) f.add_term(c, 1);
  return f;
}

Configuration cotiler_configuration(const PeriodicCoTiler& c) {
  std::map<IntVector, Integer> values;
  for (const auto& r : c.residues) values[c.lattice.reduce(r)] = 1;
  return Configuration::periodic(c.lattice, values);
}

CoverCheck verify_cotiler(const ClusterTile& d, const PeriodicCoTiler& c) {
  if (!c.lattice.full_rank()) throw Error(Errc::RankDeficient, "co-tiler lattice is not full rank");
  if (c.lattice.dim() != d.dim()) throw Error(Errc::DimensionMismatch, "tile and co-tiler");
  CoverCheck out;
  std::vector<std::uint8_t> hits(c.lattice.residue_count(), 0);
  for (const auto& r : c.residues) {
    for (const auto& cell : d.cells()) {
      IntVector cls = c.lattice.reduce(cell + r);
      auto& h = hits[c.lattice.residue_index(cls)];
      if (h) {
        out.verdict = CoverVerdict::Overlap;
        out.witness = cls;
        return out;
      }
      h = 1;
    }
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (!hits[i]) {
      out.verdict = CoverVerdict::Gap;
      out.witness = c.lattice.fundamental_box().point_at(i);
      return out;
    }
  }
  return out;
}

std::vector<Lattice> lattices_of_index(std::size_t dim, std::int64_t index) {
  if (dim < 1 || dim > 3) throw Error(Errc::InvalidArgument, "lattice enumeration supports dimensions 1 to 3");
  if (index < 1) throw Error(Errc::InvalidArgument, "index must be positive");
  std::vector<std::vector<std::int64_t>> diags;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> split = [&](std::int64_t rest) {
    if (cur.size() + 1 == dim) {
      cur.push_back(rest);
      diags.push_back(cur);
      cur.pop_back();
      return;
    }
    for (std::int64_t a = 1; a <= rest; ++a) {
      if (rest % a) continue;
      cur.push_back(a);
      split(rest / a);
      cur.pop_back();
    }
  };
  split(index);

  std::vector<Lattice> out;
  for (const auto& a : diags) {
    // Column j: a_j on the diagonal, entries above it in [0, a_i).
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row i, column j), i < j
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::int64_t combos = 1;
    for (const auto& sl : slots) combos = checked_mul(combos, a[sl.first]);
    for (std::int64_t k = 0; k < combos; ++k) {
      std::vector<IntVector> cols;
      for (std::size_t j = 0; j < dim; ++j) {
        IntVector col(dim);
        col[j] = a[j];
        cols.push_back(col);
      }
      // Mixed radix, last slot fastest.
      std::int64_t rest = k;
      for (std::size_t s = slots.size(); s-- > 0;) {
        auto radix = a[slots[s].first];
        cols[slots[s].second][slots[s].first] = rest % radix;
        rest /= radix;
      }
      out.emplace_back(std::move(cols));
    }
  }
  return out;
}

namespace {

// Exact cover of the classes of Z^d / L by translates of D.
std::optional<std::vector<IntVector>> cover_classes(const ClusterTile& d, const Lattice& lattice) {
  const std::size_t n = lattice.residue_count();
  Window box = lattice.fundamental_box();
  std::vector<std::uint8_t> covered(n, 0);
  std::vector<IntVector> chosen;
  std::vector<std::size_t> idx(d.size());

  std::function<bool(std::size_t)> fill = [&](std::size_t start) {
    std::size_t first = start;
    while (first < n && covered[first]) ++first;
    if (first == n) return true;
    IntVector target = box.point_at(first);
    for (const auto& anchor : d.cells()) {
      IntVector r = lattice.reduce(target - anchor);
      bool ok = true;
      for (std::size_t k = 0; k < d.size() && ok; ++k) {
        idx[k] = lattice.residue_index(lattice.reduce(d.cells()[k] + r));
        if (covered[idx[k]]) ok = false;
        for (std::size_t l = 0; l < k && ok; ++l)
          if (idx[l] == idx[k]) ok = false;
      }
      if (!ok) continue;
      std::vector<std::size_t> mine(idx.begin(), idx.end());
      for (auto i : mine) covered[i] = 1;
      chosen.push_back(r);
      if (fill(first + 1)) return true;
      chosen.pop_back();
      for (auto i : mine) covered[i] = 0;
    }
    return false;
  };
  if (!fill(0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::optional<PeriodicCoTiler> search_periodic_cotiler(const ClusterTile& d, std::int64_t max_index) {
  const auto size = static_cast<std::int64_t>(d.size());
  if (max_index < size) throw Error(Errc::InvalidArgument, "max_index is smaller than the tile");
  for (std::int64_t index = size; index <= max_index; index += size) {
    auto lattices = lattices_of_index(d.dim(), index);
    std::vector<std::optional<std::vector<IntVector>>> found(lattices.size());
    auto first = first_index_where(lattices.size(), [&](std::size_t i) {
      found[i] = cover_classes(d, lattices[i]);
      return found[i].has_value();
    });
    if (!first) continue;
    PeriodicCoTiler c{lattices[*first], *found[*first]};
    if (!verify_cotiler(d, c).valid()) throw Error(Errc::VerificationFailed, "search produced an invalid co-tiler");
    return c;
  }
  return std::nullopt;
}

bool PrimeCheckReport::all_verified() const {
  return congruence.holds &&
         std::all_of(periods.begin(), periods.end(), [](const PeriodCheck& p) { return p.verified; });
}

namespace {

std::vector<IntVector> prime_periods(const ClusterTile& d, std::int64_t& p) {
  p = static_cast<std::int64_t>(d.size());
  if (!is_prime(p)) throw Error(Errc::NotPrime, "tile has " + std::to_string(p) + " cells");
  std::set<IntVector> out;
  for (const auto& u : d.cells())
    for (const auto& v : d.cells())
      if (u != v) out.insert(canonical_sign((v - u) * p));
  return {out.begin(), out.end()};
}

}  // namespace

PrimeCheckReport prime_periodicity_check(const ClusterTile& d, const PeriodicCoTiler& c, const Window& window) {
  if (!c.lattice.full_rank()) throw Error(Errc::RankDeficient, "co-tiler lattice is not full rank");
  PrimeCheckReport rep;
  auto vecs = prime_periods(d, rep.p);
  std::set<IntVector> classes;
  for (const auto& r : c.residues) classes.insert(c.lattice.reduce(r));
  for (const auto& w : vecs) {
    bool ok = std::all_of(classes.begin(), classes.end(),
                          [&](const IntVector& r) { return classes.count(c.lattice.reduce(r + w)) > 0; });
    rep.periods.push_back({w, ok});
  }
  rep.congruence = congruence_check(substitute_power(tile_polynomial(d), rep.p), cotiler_configuration(c),
                                    Integer(static_cast<long>(rep.p)), window);
  return rep;
}

PrimeCheckReport prime_periodicity_check(const ClusterTile& d, const Configuration& c, const Window& window) {
  PrimeCheckReport rep;
  auto vecs = prime_periods(d, rep.p);
  for (const auto& w : vecs)
    rep.periods.push_back({w, periodicity_test(c, w, window).verdict != Periodicity::NotPeriodic});
  rep.congruence =
      congruence_check(substitute_power(tile_polynomial(d), rep.p), c, Integer(static_cast<long>(rep.p)), window);
  return rep;
}

}  // namespace nivatk
