#include "nivatk/laurent.hpp"

#include <algorithm>
#include <variant>

#include "nivatk/lattice.hpp"
#include "nivatk/univariate.hpp"

namespace nivatk {
namespace {

std::int64_t total_degree(const IntVector& e) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < e.dim(); ++i) s = checked_add(s, e[i]);
  return s;
}

bool graded_lex_less(const IntVector& a, const IntVector& b) {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

__int128 cross(const IntVector& o, const IntVector& a, const IntVector& b) {
  return static_cast<__int128>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<__int128>(a[1] - o[1]) * (b[0] - o[0]);
}

void require_nonzero(const LaurentPolynomial& f, const char* what) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, what);
}

void require_plane(const LaurentPolynomial& f, const char* what) {
  if (f.dim() != 2) throw Error(Errc::DimensionMismatch, std::string(what) + " is two-dimensional only");
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::size_t dim, Terms terms) : dim_(dim) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const Rational& c) {
  LaurentPolynomial f(dim);
  f.add_term(IntVector(dim), c);
  return f;
}

LaurentPolynomial LaurentPolynomial::monomial(const IntVector& e, const Rational& c) {
  LaurentPolynomial f(e.dim());
  f.add_term(e, c);
  return f;
}

LaurentPolynomial LaurentPolynomial::difference(const IntVector& v) {
  return monomial(v) - constant(v.dim(), 1);
}

Rational LaurentPolynomial::coeff(const IntVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<IntVector> LaurentPolynomial::support() const {
  std::vector<IntVector> s;
  s.reserve(terms_.size());
  for (const auto& kv : terms_) s.push_back(kv.first);
  return s;
}

bool LaurentPolynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return nivatk::is_integral(kv.second); });
}

void LaurentPolynomial::add_term(const IntVector& e, const Rational& c) {
  if (e.dim() != dim_) throw Error(Errc::DimensionMismatch, "exponent " + e.str());
  if (c == 0) return;
  Rational cc = c;
  // mpq_class(p, q) does not reduce; equality below assumes reduced form.
  if (cc.get_den() != 1) cc.canonicalize();
  auto [it, inserted] = terms_.emplace(e, cc);
  if (!inserted) {
    it->second += cc;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::require_compatible(const LaurentPolynomial& o) const {
  if (dim_ != o.dim_)
    throw Error(Errc::DimensionMismatch,
                "polynomials in " + std::to_string(dim_) + " and " + std::to_string(o.dim_) + " variables");
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  require_compatible(o);
  LaurentPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const { return *this + (-o); }

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  require_compatible(o);
  LaurentPolynomial r(dim_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& k) const {
  if (k == 0) return LaurentPolynomial(dim_);
  LaurentPolynomial r = *this;
  for (auto& kv : r.terms_) kv.second *= k;
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const IntVector& v) const {
  LaurentPolynomial r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + v, c);
  return r;
}

LaurentPolynomial pow(const LaurentPolynomial& f, unsigned k) {
  LaurentPolynomial r = LaurentPolynomial::constant(f.dim(), 1), base = f;
  while (k) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return r;
}

LaurentPolynomial substitute_power(const LaurentPolynomial& f, std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "substitute_power needs n >= 1");
  LaurentPolynomial r(f.dim());
  for (const auto& [e, c] : f.terms()) r.add_term(e * n, c);
  return r;
}

LaurentPolynomial reduce_mod(const LaurentPolynomial& f, const Integer& p) {
  if (!f.is_integral()) throw Error(Errc::NonIntegerCoefficients, "reduce_mod");
  LaurentPolynomial r(f.dim());
  for (const auto& [e, c] : f.terms()) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_num().get_mpz_t(), p.get_mpz_t());
    r.add_term(e, Rational(m));
  }
  return r;
}

LaurentPolynomial product_of_differences(const std::vector<IntVector>& vectors, std::size_t dim) {
  LaurentPolynomial r = LaurentPolynomial::constant(dim, 1);
  for (const auto& v : vectors) {
    if (v.is_zero()) throw Error(Errc::ZeroVector, "difference factor with zero vector");
    r *= LaurentPolynomial::difference(v);
  }
  return r;
}

IntVector min_exponent(const LaurentPolynomial& f) {
  require_nonzero(f, "min_exponent");
  IntVector lo = f.terms().begin()->first;
  for (const auto& kv : f.terms())
    for (std::size_t i = 0; i < f.dim(); ++i) lo[i] = std::min(lo[i], kv.first[i]);
  return lo;
}

IntVector bbox(const LaurentPolynomial& f) {
  require_nonzero(f, "bbox");
  IntVector lo = min_exponent(f), hi = lo;
  for (const auto& kv : f.terms())
    for (std::size_t i = 0; i < f.dim(); ++i) hi[i] = std::max(hi[i], kv.first[i]);
  return hi - lo;
}

IntVector leading_exponent(const LaurentPolynomial& f) {
  require_nonzero(f, "leading_exponent");
  IntVector best = f.terms().begin()->first;
  for (const auto& kv : f.terms())
    if (graded_lex_less(best, kv.first)) best = kv.first;
  return best;
}

LaurentPolynomial normalize(const LaurentPolynomial& f) {
  if (f.is_zero()) return f;
  LaurentPolynomial g = f.shifted(-min_exponent(f));
  std::vector<Rational> coeffs;
  for (const auto& kv : g.terms()) coeffs.push_back(kv.second);
  Integer l = 1, gg = 0;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& c : coeffs) {
    Integer n = c.get_num() * (l / c.get_den());
    mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale = make_rational(l, gg);
  if (g.coeff(leading_exponent(g)) < 0) scale = -scale;
  return g * scale;
}

std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  require_nonzero(g, "exact_divide by zero");
  if (f.dim() != g.dim()) throw Error(Errc::DimensionMismatch, "exact_divide");
  if (f.is_zero()) return f;
  // Both shifted to ordinary polynomials without monomial factors; then the
  // quotient, if it exists, is an ordinary polynomial and lex division by a
  // single divisor is exact.
  IntVector mf = min_exponent(f), mg = min_exponent(g);
  LaurentPolynomial r = f.shifted(-mf), d = g.shifted(-mg);
  const auto& [lead_e, lead_c] = *d.terms().rbegin();
  LaurentPolynomial q(f.dim());
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    IntVector e = re - lead_e;
    for (std::size_t i = 0; i < e.dim(); ++i)
      if (e[i] < 0) return std::nullopt;
    Rational c = rc / lead_c;
    q.add_term(e, c);
    r = r - d.shifted(e) * c;
  }
  return q.shifted(mf - mg);
}

std::optional<IntVector> line_direction(const LaurentPolynomial& f) {
  if (f.term_count() < 2) return std::nullopt;
  auto pts = f.support();
  IntVector dir = pts[1] - pts[0];
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (!parallel(pts[i] - pts[0], dir)) return std::nullopt;
  return canonical_sign(primitive_part(dir));
}

bool direction_before(const IntVector& a, const IntVector& b) {
  auto rep = [](const IntVector& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? -v : v; };
  IntVector ra = rep(a), rb = rep(b);
  __int128 c = static_cast<__int128>(ra[0]) * rb[1] - static_cast<__int128>(ra[1]) * rb[0];
  if (c != 0) return c > 0;
  return ra < rb;
}

RationalPattern apply(const LaurentPolynomial& f, const Configuration& c, const Window& window) {
  require_nonzero(f, "apply");
  if (f.dim() != c.dim() || window.dim() != c.dim()) throw Error(Errc::DimensionMismatch, "apply");
  RationalPattern out(window);
  if (window.empty()) return out;

  IntVector lo = min_exponent(f), hi = lo + bbox(f);
  Window region = Window::box(window.lo() - hi, window.hi() - lo);
  Pattern values = materialize(c, region);
  auto pts = window.points();
  const bool integral = f.is_integral();
  std::vector<std::pair<IntVector, Integer>> int_terms;
  if (integral)
    for (const auto& [e, a] : f.terms()) int_terms.emplace_back(e, a.get_num());

  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (integral) {
      Integer s = 0;
      for (const auto& [e, a] : int_terms) s += a * values.at(pts[i] - e);
      out.values()[i] = s;
    } else {
      Rational s = 0;
      for (const auto& [e, a] : f.terms()) s += a * values.at(pts[i] - e);
      out.values()[i] = s;
    }
  }
  return out;
}

AnnihilationResult annihilates(const LaurentPolynomial& f, const Configuration& c, const Window& window) {
  require_nonzero(f, "annihilates");
  AnnihilationResult r;
  const bool periodic = c.is_periodic_descriptor();
  r.checked = periodic ? std::get<PeriodicNode>(c.node().v).lattice.fundamental_box() : window;
  RationalPattern p = apply(f, c, r.checked);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.values()[i] != 0) {
      r.verdict = Annihilation::No;
      r.witness = r.checked.point_at(i);
      r.witness_value = p.values()[i];
      return r;
    }
  }
  r.verdict = periodic ? Annihilation::Yes : Annihilation::YesOnWindow;
  return r;
}

std::vector<IntVector> newton_polygon_directions(const LaurentPolynomial& f) {
  require_nonzero(f, "newton_polygon_directions");
  require_plane(f, "newton_polygon_directions");
  auto pts = f.support();  // lexicographically sorted
  if (pts.size() == 1) return {};
  if (auto d = line_direction(f)) return {*d};

  // Andrew's monotone chain, dropping collinear points.
  std::vector<IntVector> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  std::vector<IntVector> dirs;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    IntVector d = canonical_sign(primitive_part(hull[(i + 1) % hull.size()] - hull[i]));
    if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
  }
  std::sort(dirs.begin(), dirs.end(), direction_before);
  return dirs;
}

namespace {

// f rewritten in coordinates s = X^v, t = X^w: exponent e = a v + b w.
struct LineCoordinates {
  IntVector v, w;
  std::int64_t det;  // det(v, w) = +-1

  std::pair<std::int64_t, std::int64_t> to_st(const IntVector& e) const {
    std::int64_t a = checked_sub(checked_mul(e[0], w[1]), checked_mul(e[1], w[0])) * det;
    std::int64_t b = checked_sub(checked_mul(v[0], e[1]), checked_mul(v[1], e[0])) * det;
    return {a, b};
  }
};

LineCoordinates line_coordinates(const IntVector& v) {
  IntVector w = unimodular_complement(v);
  std::int64_t det = v[0] * w[1] - v[1] * w[0];
  return {v, w, det};
}

}  // namespace

LaurentPolynomial line_content(const LaurentPolynomial& f, const IntVector& v) {
  require_nonzero(f, "line_content");
  require_plane(f, "line_content");
  if (v.dim() != 2) throw Error(Errc::DimensionMismatch, "line_content direction");
  if (v.is_zero()) throw Error(Errc::ZeroVector, "line_content direction");
  if (!is_primitive(v)) throw Error(Errc::NonPrimitive, v.str());

  LineCoordinates lc = line_coordinates(v);
  // Coefficient polynomials in s, grouped by the t-exponent.
  std::map<std::int64_t, std::map<std::int64_t, Rational>> groups;
  for (const auto& [e, c] : f.terms()) {
    auto [a, b] = lc.to_st(e);
    groups[b][a] = c;
  }
  UniPoly content;
  for (const auto& [b, row] : groups) {
    std::int64_t lo = row.begin()->first, hi = row.rbegin()->first;
    std::vector<Rational> coeffs(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (const auto& [a, c] : row) coeffs[static_cast<std::size_t>(a - lo)] = c;
    content = gcd(content, UniPoly(std::move(coeffs)));
    if (content.degree() == 0) break;
  }
  if (content.degree() <= 0) return LaurentPolynomial::constant(2, 1);

  LaurentPolynomial phi(2);
  for (std::size_t k = 0; k < content.coeffs().size(); ++k)
    phi.add_term(v * static_cast<std::int64_t>(k), content.coeffs()[k]);
  return normalize(phi);
}

std::vector<IntVector> LineFactorization::directions() const {
  std::vector<IntVector> d;
  for (const auto& lf : factors) d.push_back(lf.direction);
  return d;
}

LaurentPolynomial LineFactorization::reconstruct() const {
  LaurentPolynomial r = remainder.shifted(monomial);
  for (const auto& lf : factors) r *= lf.phi;
  return r;
}

LineFactorization line_factorization(const LaurentPolynomial& f) {
  require_nonzero(f, "line_factorization");
  require_plane(f, "line_factorization");
  LineFactorization out;
  out.monomial = min_exponent(f);
  LaurentPolynomial rem = f.shifted(-out.monomial);

  // A line factor's Newton polygon is a segment summand of rem's polygon, so
  // its direction is an edge direction; one pass over the edges suffices,
  // but re-check until the remainder is stable.
  std::vector<IntVector> done;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& dir : newton_polygon_directions(rem)) {
      if (std::find(done.begin(), done.end(), dir) != done.end()) continue;
      done.push_back(dir);
      LaurentPolynomial phi = line_content(rem, dir);
      if (phi.term_count() < 2) continue;
      auto q = exact_divide(rem, phi);
      if (!q) throw Error(Errc::VerificationFailed, "line content does not divide " + rem.str());
      rem = *q;
      out.factors.push_back({dir, phi});
      changed = true;
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const LineFactor& a, const LineFactor& b) { return direction_before(a.direction, b.direction); });
  out.remainder = rem;
  return out;
}

std::vector<IntVector> common_line_directions(const std::vector<LineFactorization>& lfs) {
  if (lfs.empty()) return {};
  std::vector<IntVector> out;
  for (const auto& v : lfs.front().directions()) {
    bool everywhere = std::all_of(lfs.begin() + 1, lfs.end(), [&](const LineFactorization& lf) {
      auto d = lf.directions();
      return std::find(d.begin(), d.end(), v) != d.end();
    });
    if (everywhere) out.push_back(v);
  }
  return out;
}

}  // namespace nivatk
