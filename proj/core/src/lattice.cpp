#include "nivatk/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace nivatk {
namespace {

using Row = std::vector<Integer>;

struct Echelon {
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;
};

Echelon echelonize(const std::vector<IntVector>& generators, std::size_t dim) {
  std::vector<Row> remaining;
  for (const auto& g : generators) {
    if (g.dim() != dim) throw Error(Errc::DimensionMismatch, "generator " + g.str());
    Row r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = to_integer(g[i]);
    remaining.push_back(std::move(r));
  }

  Echelon e;
  for (std::size_t col = dim; col-- > 0;) {
    while (true) {
      std::vector<std::size_t> nz;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (remaining[i][col] != 0) nz.push_back(i);
      if (nz.empty()) break;
      std::size_t best = nz.front();
      for (auto i : nz)
        if (abs(remaining[i][col]) < abs(remaining[best][col])) best = i;
      if (nz.size() == 1) {
        Row p = std::move(remaining[best]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
        if (p[col] < 0)
          for (auto& x : p) x = -x;
        e.rows.push_back(std::move(p));
        e.pivots.push_back(col);
        break;
      }
      for (auto i : nz) {
        if (i == best) continue;
        Integer q = remaining[i][col] / remaining[best][col];  // truncating
        for (std::size_t k = 0; k < dim; ++k) remaining[i][k] -= q * remaining[best][k];
      }
    }
  }

  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < e.rows.size(); ++j) {
      std::size_t q = e.pivots[j];
      Integer k;
      mpz_fdiv_q(k.get_mpz_t(), e.rows[i][q].get_mpz_t(), e.rows[j][q].get_mpz_t());
      if (k != 0)
        for (std::size_t c = 0; c < dim; ++c) e.rows[i][c] -= k * e.rows[j][c];
    }
  }
  return e;
}

}  // namespace

Lattice Lattice::spanned_by(std::vector<IntVector> generators, std::size_t dim) {
  Lattice l;
  l.dim_ = dim;
  Echelon e = echelonize(generators, dim);
  l.generators_ = std::move(generators);
  for (const auto& r : e.rows) {
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = to_int64(r[i]);
    l.rows_.push_back(v);
  }
  l.pivots_ = std::move(e.pivots);
  return l;
}

Lattice::Lattice(std::vector<IntVector> generators) {
  if (generators.empty()) throw Error(Errc::RankDeficient, "no generators");
  std::size_t dim = generators.front().dim();
  std::size_t count = generators.size();
  *this = spanned_by(std::move(generators), dim);
  if (rank() != count)
    throw Error(Errc::RankDeficient, "generators are linearly dependent (rank " + std::to_string(rank()) + " of " +
                                         std::to_string(count) + ")");
}

Lattice Lattice::full(std::size_t dim) {
  std::vector<IntVector> g;
  for (std::size_t i = 0; i < dim; ++i) g.push_back(IntVector::unit(dim, i));
  return Lattice(std::move(g));
}

Lattice Lattice::diagonal(std::span<const std::int64_t> periods) {
  std::vector<IntVector> g;
  for (std::size_t i = 0; i < periods.size(); ++i) g.push_back(IntVector::unit(periods.size(), i) * periods[i]);
  return Lattice(std::move(g));
}

IntVector Lattice::reduce(const IntVector& v) const {
  if (v.dim() != dim_) throw Error(Errc::DimensionMismatch, "reduce " + v.str());
  IntVector r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t p = pivots_[i];
    std::int64_t k = floor_div(r[p], rows_[i][p]);
    if (k != 0) r -= rows_[i] * k;
  }
  return r;
}

bool Lattice::contains(const IntVector& v) const { return reduce(v).is_zero(); }

void Lattice::require_full_rank() const {
  if (!full_rank()) throw Error(Errc::RankDeficient, "lattice of rank " + std::to_string(rank()) + " in dimension " +
                                                         std::to_string(dim_));
}

IntVector Lattice::diagonal() const {
  require_full_rank();
  IntVector d(dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i) d[pivots_[i]] = rows_[i][pivots_[i]];
  return d;
}

Integer Lattice::index() const {
  IntVector d = diagonal();
  Integer n = 1;
  for (std::size_t i = 0; i < dim_; ++i) n *= to_integer(d[i]);
  return n;
}

std::vector<IntVector> Lattice::hnf_columns() const {
  require_full_rank();
  std::vector<IntVector> cols(rows_.rbegin(), rows_.rend());
  return cols;
}

Window Lattice::fundamental_box() const {
  IntVector d = diagonal();
  return Window::sized(d.coords());
}

std::size_t Lattice::residue_count() const {
  Integer n = index();
  if (!n.fits_ulong_p()) throw Error(Errc::Overflow, "lattice index too large");
  return n.get_ui();
}

std::size_t Lattice::residue_index(const IntVector& reduced) const {
  IntVector d = diagonal();
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    idx += static_cast<std::size_t>(reduced[i]) * stride;
    stride *= static_cast<std::size_t>(d[i]);
  }
  return idx;
}

FundamentalDomain hnf_fundamental_domain(const Lattice& lattice) {
  FundamentalDomain fd;
  fd.basis = lattice.hnf_columns();
  fd.index = lattice.index();
  fd.residues = lattice.fundamental_box().points();
  return fd;
}

IntVector unimodular_complement(const IntVector& v) {
  if (v.dim() != 2) throw Error(Errc::DimensionMismatch, "unimodular_complement needs d = 2");
  if (v.is_zero()) throw Error(Errc::ZeroVector, "unimodular_complement of zero vector");
  if (!is_primitive(v)) throw Error(Errc::NonPrimitive, v.str());

  // Extended gcd: a*x + b*y = 1, so w0 = (-y, x) has det(v, w0) = 1.
  Integer a = to_integer(v[0]), b = to_integer(v[1]), g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g < 0) {
    x = -x;
    y = -y;
  }
  Integer w1 = -y, w2 = x;

  // Shift w0 by multiples of v toward the shortest representative.
  Integer num = w1 * a + w2 * b, den = a * a + b * b, k0;
  mpz_fdiv_q(k0.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  k0 = -k0;

  using Key = std::tuple<Integer, Integer, int, int, std::int64_t, std::int64_t>;
  std::optional<Key> best;
  IntVector best_w(2);
  for (int dk = -3; dk <= 3; ++dk) {
    for (int s : {1, -1}) {
      Integer c1 = s * (w1 + (k0 + dk) * a), c2 = s * (w2 + (k0 + dk) * b);
      Integer m = std::max(Integer(abs(c1)), Integer(abs(c2)));
      Key key{m, abs(c1) + abs(c2), c1 >= 0 ? 0 : 1, s == 1 ? 0 : 1, to_int64(c1), to_int64(c2)};
      if (!best || key < *best) {
        best = key;
        best_w = IntVector{to_int64(c1), to_int64(c2)};
      }
    }
  }
  return best_w;
}

Integer parallelogram_area(const IntVector& u, const IntVector& v) {
  if (u.dim() != 2 || v.dim() != 2) throw Error(Errc::DimensionMismatch, "parallelogram_area needs d = 2");
  Integer det = to_integer(u[0]) * to_integer(v[1]) - to_integer(u[1]) * to_integer(v[0]);
  return abs(det);
}

}  // namespace nivatk
