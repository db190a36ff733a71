#include "nivatk/annihilator.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "nivatk/linalg.hpp"
#include "nivatk/parallel.hpp"

namespace nivatk {
namespace {

void require_integral(const LaurentPolynomial& f, const char* what) {
  if (!f.is_integral()) throw Error(Errc::NonIntegerCoefficients, std::string(what) + ": " + f.str());
}

std::string where(const std::optional<IntVector>& w) { return w ? " at " + w->str() : std::string(); }

// Integer values on a box, used by the difference search.
struct Grid {
  Window box;
  std::vector<Integer> values;

  bool all_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Integer& x) { return x == 0; });
  }

  // (X^v - 1) applied: u -> g(u - v) - g(u) on box cap (box + v).
  Grid difference(const IntVector& v) const {
    Grid out;
    out.box = intersect_boxes(box, box.translated(v));
    if (out.box.empty()) return out;
    auto pts = out.box.points();
    out.values.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      out.values[i] = values[box.index_of(pts[i] - v)] - values[box.index_of(pts[i])];
    return out;
  }
};

}  // namespace

std::optional<AnnihilatorReport> find_annihilator(const Configuration& c, const Window& shape,
                                                  const Window& sample, const Window& verify) {
  if (shape.empty()) throw Error(Errc::EmptyShape, "find_annihilator");
  if (sample.empty()) throw Error(Errc::EmptySample, "find_annihilator");
  if (shape.dim() != c.dim() || sample.dim() != c.dim() || verify.dim() != c.dim())
    throw Error(Errc::DimensionMismatch, "find_annihilator");

  auto us = shape.points();
  const std::size_t n = us.size();
  Pattern region = materialize(c, covering_box(sample, shape));

  std::set<std::vector<Integer>> rows;
  std::vector<Integer> row(n);
  for (const auto& v : sample.points()) {
    for (std::size_t i = 0; i < n; ++i) row[i] = region.at(v + us[i]);
    rows.insert(row);
  }

  linalg::Matrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rational> mr(r.begin(), r.end());
    mr.emplace_back(1);
    m.push_back(std::move(mr));
  }
  auto kernel = linalg::nullspace(m, n + 1);
  if (kernel.empty()) {
    // At most n distinct rows in n + 1 columns always leaves a kernel.
    if (rows.size() <= n) throw Error(Errc::VerificationFailed, "trivial kernel with too few distinct patterns");
    return std::nullopt;
  }

  auto a = linalg::primitive_integer_vector(kernel.front());
  AnnihilatorReport rep;
  rep.shape = shape;
  rep.sample = sample;
  rep.distinct_rows = rows.size();
  rep.g = LaurentPolynomial(c.dim());
  for (std::size_t i = 0; i < n; ++i) rep.g.add_term(-us[i], Rational(a[i]));
  rep.constant = Rational(-a[n]);
  rep.f = LaurentPolynomial::difference(IntVector::unit(c.dim(), 0)) * rep.g;

  AnnihilationResult ann = annihilates(rep.f, c, verify);
  rep.verified_on = ann.checked;
  if (!ann.holds())
    throw Error(Errc::VerificationFailed,
                "kernel polynomial fails to annihilate" + where(ann.witness) + ": " + rep.f.str());
  RationalPattern gc = apply(rep.g, c, rep.verified_on);
  for (std::size_t i = 0; i < gc.size(); ++i)
    if (gc.values()[i] != rep.constant)
      throw Error(Errc::VerificationFailed, "g c is not constant at " + rep.verified_on.point_at(i).str());
  return rep;
}

ExpansionBound expansion_bound(const LaurentPolynomial& f, const Integer& c_max) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "expansion_bound");
  require_integral(f, "expansion_bound");
  if (c_max < 0) throw Error(Errc::InvalidArgument, "c_max must be nonnegative");
  Integer total = 0;
  for (const auto& [e, a] : f.terms()) total += abs(a.get_num());
  ExpansionBound b;
  b.s = c_max * total;
  if (!b.s.fits_ulong_p()) throw Error(Errc::Overflow, "s = " + b.s.get_str() + " is too large for s!");
  b.r = factorial(b.s.get_ui());
  return b;
}

CongruenceResult congruence_check(const LaurentPolynomial& f, const Configuration& c, const Integer& p,
                                  const Window& window) {
  require_integral(f, "congruence_check");
  if (p < 2) throw Error(Errc::InvalidArgument, "modulus must be at least 2");
  CongruenceResult out;
  RationalPattern fc = apply(f, c, window);
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (!mpz_divisible_p(fc.values()[i].get_num_mpz_t(), p.get_mpz_t())) {
      out.holds = false;
      out.witness = window.point_at(i);
      out.value = fc.values()[i];
      break;
    }
  }
  return out;
}

ExpansionReport verify_expansion(const LaurentPolynomial& f, const Configuration& c,
                                 const std::vector<std::int64_t>& primes, const Window& window) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "verify_expansion");
  require_integral(f, "verify_expansion");
  for (auto p : primes)
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p));

  ExpansionReport rep;
  rep.c_max = 0;
  if (c.is_periodic_descriptor()) {
    for (const auto& v : std::get<PeriodicNode>(c.node().v).values) rep.c_max = std::max<Integer>(rep.c_max, abs(v));
  } else if (!window.empty()) {
    std::int64_t pmax = primes.empty() ? 1 : *std::max_element(primes.begin(), primes.end());
    LaurentPolynomial widest = substitute_power(f, std::max<std::int64_t>(pmax, 1));
    IntVector lo = min_exponent(widest), hi = lo + bbox(widest);
    for (const auto& x : observed_alphabet(c, Window::box(window.lo() - hi, window.hi() - lo)))
      rep.c_max = std::max<Integer>(rep.c_max, abs(x));
  }
  rep.bound = expansion_bound(f, rep.c_max);

  for (auto p : primes) {
    ExpansionCheck chk;
    chk.p = p;
    chk.above_bound = Integer(static_cast<long>(p)) > rep.bound.s;
    LaurentPolynomial fp = substitute_power(f, p);
    chk.modular = congruence_check(fp, c, Integer(static_cast<long>(p)), window);
    if (chk.above_bound) chk.exact = annihilates(fp, c, window);
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

LaurentPolynomial build_radical_witness(const LaurentPolynomial& f, const Integer& r, const IntVector& v0) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "build_radical_witness");
  if (v0.dim() != f.dim()) throw Error(Errc::DimensionMismatch, "build_radical_witness");
  if (f.coeff(v0) == 0) throw Error(Errc::V0NotInSupport, v0.str());
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be positive");
  std::int64_t rr = to_int64(r);
  LaurentPolynomial g = LaurentPolynomial::monomial(IntVector::filled(f.dim(), 1));
  for (const auto& v : f.support()) {
    if (v == v0) continue;
    g *= LaurentPolynomial::monomial(v * rr) - LaurentPolynomial::monomial(v0 * rr);
  }
  return g;
}

LaurentPolynomial DifferenceForm::expand() const {
  return product_of_differences(vectors, monomial.dim()).shifted(monomial) * constant;
}

DifferenceForm radical_witness_form(const LaurentPolynomial& f, const Integer& r, const IntVector& v0) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "radical_witness_form");
  if (f.coeff(v0) == 0) throw Error(Errc::V0NotInSupport, v0.str());
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be positive");
  std::int64_t rr = to_int64(r);
  // X^{rv} - X^{rv0} = X^{rv0} (X^{r(v - v0)} - 1)
  DifferenceForm out;
  out.constant = 1;
  out.monomial = IntVector::filled(f.dim(), 1);
  for (const auto& v : f.support()) {
    if (v == v0) continue;
    out.monomial += v0 * rr;
    out.vectors.push_back((v - v0) * rr);
  }
  return out;
}

std::optional<DifferenceForm> difference_form(const LaurentPolynomial& g) {
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "difference_form");
  std::vector<IntVector> chosen;
  std::optional<DifferenceForm> found;

  std::function<bool(const LaurentPolynomial&, std::size_t)> peel = [&](const LaurentPolynomial& h,
                                                                         std::size_t depth) {
    if (h.is_monomial()) {
      const auto& [e, a] = *h.terms().begin();
      found = DifferenceForm{e, a, chosen};
      return true;
    }
    if (depth > 16) return false;
    // Wider binomials first, so x^2 - 1 is not split as (x - 1)(x + 1).
    auto pts = h.support();
    std::vector<IntVector> cands;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) cands.push_back(canonical_sign(pts[j] - pts[i]));
    auto norm = [](const IntVector& v) {
      std::int64_t m = 0;
      for (auto x : v.coords()) m = std::max<std::int64_t>(m, x < 0 ? -x : x);
      return m;
    };
    std::sort(cands.begin(), cands.end(), [&](const IntVector& a, const IntVector& b) {
      auto na = norm(a), nb = norm(b);
      return na != nb ? na > nb : a < b;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& w : cands) {
      auto q = exact_divide(h, LaurentPolynomial::difference(w));
      if (!q) continue;
      chosen.push_back(w);
      if (peel(*q, depth + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  peel(g, 0);
  if (found) std::sort(found->vectors.begin(), found->vectors.end());
  return found;
}

std::vector<IntVector> difference_candidates(std::size_t dim, std::int64_t bound) {
  if (bound < 1) throw Error(Errc::InvalidArgument, "coordinate bound must be positive");
  std::vector<IntVector> out;
  Window cube = Window::box(IntVector::filled(dim, -bound), IntVector::filled(dim, bound));
  for (const auto& v : cube.points())
    if (!v.is_zero() && canonical_sign(v) == v) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<IntVector>> search_difference_annihilator(const Configuration& c, int max_factors,
                                                                    std::int64_t coord_bound,
                                                                    const Window& window) {
  if (max_factors < 1) throw Error(Errc::InvalidArgument, "max_factors must be positive");
  if (window.dim() != c.dim()) throw Error(Errc::DimensionMismatch, "search window");
  if (!window.is_box() || window.empty()) throw Error(Errc::InvalidArgument, "search window must be a nonempty box");
  auto cands = difference_candidates(c.dim(), coord_bound);
  for (std::size_t i = 0; i < window.dim(); ++i)
    if (window.extent(i) <= checked_mul(max_factors, coord_bound))
      throw Error(Errc::WindowTooSmall, window.str() + " cannot absorb " + std::to_string(max_factors) +
                                            " factors with coordinates up to " + std::to_string(coord_bound));

  Grid base{window, materialize(c, window).values()};

  // Nondecreasing index sequences extending `seq` by `left` more factors.
  std::function<bool(const Grid&, std::size_t, int, std::vector<std::size_t>&)> dfs =
      [&](const Grid& g, std::size_t start, int left, std::vector<std::size_t>& seq) {
        if (left == 0) return g.all_zero();
        for (std::size_t j = start; j < cands.size(); ++j) {
          seq.push_back(j);
          if (dfs(g.difference(cands[j]), j, left - 1, seq)) return true;
          seq.pop_back();
        }
        return false;
      };

  for (int m = 1; m <= max_factors; ++m) {
    auto first = first_index_where(cands.size(), [&](std::size_t i) {
      std::vector<std::size_t> seq{i};
      return dfs(base.difference(cands[i]), i, m - 1, seq);
    });
    if (!first) continue;
    std::vector<std::size_t> seq{*first};
    Grid g = base.difference(cands[*first]);
    dfs(g, *first, m - 1, seq);

    std::vector<IntVector> out;
    Window domain = window;
    for (auto j : seq) {
      out.push_back(cands[j]);
      domain = intersect_boxes(domain, domain.translated(cands[j]));
    }
    AnnihilationResult check = annihilates(product_of_differences(out, c.dim()), c, domain);
    if (!check.holds()) throw Error(Errc::VerificationFailed, "difference certificate fails" + where(check.witness));
    return out;
  }
  return std::nullopt;
}

}  // namespace nivatk
