#include "nivatk/decomposition.hpp"

#include <variant>

#include "nivatk/laurent.hpp"
#include "nivatk/linalg.hpp"

namespace nivatk {

template <class T>
BasicPattern<T> difference(const BasicPattern<T>& p, const IntVector& v) {
  if (v.dim() != p.shape().dim()) throw Error(Errc::DimensionMismatch, "difference");
  if (v.is_zero()) throw Error(Errc::ZeroVector, "difference");
  const Window& s = p.shape();
  Window dom;
  if (s.is_box()) {
    dom = s.empty() ? s : intersect_boxes(s, s.translated(v));
  } else {
    std::vector<IntVector> pts;
    for (const auto& u : s.points())
      if (s.contains(u - v)) pts.push_back(u);
    dom = Window::set(std::move(pts));
  }
  if (dom.empty()) throw Error(Errc::EmptyResult, "difference along " + v.str() + " leaves nothing of " + s.str());
  BasicPattern<T> out(dom);
  auto pts = dom.points();
  for (std::size_t i = 0; i < pts.size(); ++i) out.values()[i] = p.at(pts[i] - v) - p.at(pts[i]);
  return out;
}

template <class T>
BasicPattern<T> integrate(const BasicPattern<T>& d, const IntVector& v) {
  const Window& box = d.shape();
  if (!box.is_box()) throw Error(Errc::InvalidArgument, "integrate needs a box domain");
  if (v.dim() != box.dim()) throw Error(Errc::DimensionMismatch, "integrate");
  if (v.is_zero()) throw Error(Errc::ZeroVector, "integrate");
  BasicPattern<T> o(box);
  for (const auto& start : box.points()) {
    if (box.contains(start - v)) continue;
    for (IntVector u = start + v; box.contains(u); u += v) o.at(u) = o.at(u - v) - d.at(u);
  }
  return o;
}

template Pattern difference(const Pattern&, const IntVector&);
template RationalPattern difference(const RationalPattern&, const IntVector&);
template Pattern integrate(const Pattern&, const IntVector&);
template RationalPattern integrate(const RationalPattern&, const IntVector&);

namespace {

// Run index of every core point along v, runs numbered by their first point.
std::vector<std::uint32_t> runs_along(const Window& core, const IntVector& v, std::size_t& count) {
  std::vector<std::uint32_t> run(core.size());
  count = 0;
  for (const auto& start : core.points()) {
    if (core.contains(start - v)) continue;
    auto id = static_cast<std::uint32_t>(count++);
    for (IntVector u = start; core.contains(u); u += v) run[core.index_of(u)] = id;
  }
  return run;
}

}  // namespace

WindowDecomposition decompose(const Configuration& c, const std::vector<IntVector>& vectors, const Window& core,
                              const Window& halo) {
  if (vectors.empty()) throw Error(Errc::InvalidArgument, "decompose needs at least one vector");
  for (const auto& v : vectors) {
    if (v.dim() != c.dim()) throw Error(Errc::DimensionMismatch, "decompose vector " + v.str());
    if (v.is_zero()) throw Error(Errc::ZeroVector, "decompose");
  }
  if (core.dim() != c.dim() || halo.dim() != c.dim()) throw Error(Errc::DimensionMismatch, "decompose windows");
  if (!core.is_box() || core.empty()) throw Error(Errc::InvalidArgument, "core must be a nonempty box");
  if (!halo.is_box() || !core.subset_of(halo)) throw Error(Errc::InvalidArgument, "halo must be a box containing the core");

  LaurentPolynomial prod = product_of_differences(vectors, c.dim());
  IntVector lo = min_exponent(prod), hi = lo + bbox(prod);
  Window checked = Window::box(halo.lo() + hi, halo.hi() + lo);
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (checked.lo()[i] > checked.hi()[i]) throw Error(Errc::WindowTooSmall, "halo " + halo.str());
  AnnihilationResult ann = annihilates(prod, c, checked);
  if (!ann.holds())
    throw Error(Errc::VerificationFailed, prod.str() + " does not annihilate c at " + ann.witness->str());

  WindowDecomposition out;
  out.vectors = vectors;
  out.core = core;

  std::vector<std::vector<std::uint32_t>> runs;
  std::vector<std::uint32_t> base;
  std::size_t cols = 0;
  for (const auto& v : vectors) {
    std::size_t count = 0;
    runs.push_back(runs_along(core, v, count));
    base.push_back(static_cast<std::uint32_t>(cols));
    cols += count;
  }
  out.unknowns = cols;

  Pattern values = materialize(c, core);
  linalg::SparseSystem sys(cols);
  for (std::size_t p = 0; p < core.size(); ++p) {
    std::vector<std::pair<std::uint32_t, Rational>> row;
    for (std::size_t i = 0; i < vectors.size(); ++i) row.emplace_back(base[i] + runs[i][p], Rational(1));
    sys.add_equation(std::move(row), Rational(values.values()[p]));
  }
  auto sol = sys.solve();
  if (auto* bad = std::get_if<linalg::SparseSystem::Inconsistent>(&sol))
    throw Error(Errc::Infeasible, "no periodic decomposition on " + core.str() + "; inconsistent at " +
                                      core.point_at(bad->equation).str());
  const auto& s = std::get<linalg::SparseSystem::Solution>(sol);
  out.rank = s.rank;

  out.integral = true;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    RationalPattern comp(core);
    for (std::size_t p = 0; p < core.size(); ++p) {
      comp.values()[p] = s.x[base[i] + runs[i][p]];
      if (!is_integral(comp.values()[p])) out.integral = false;
    }
    out.components.push_back(std::move(comp));
  }
  out.residual_check = check_decomposition(c, out);
  return out;
}

bool check_decomposition(const Configuration& c, const WindowDecomposition& d) {
  if (d.components.size() != d.vectors.size()) return false;
  Pattern values = materialize(c, d.core);
  auto pts = d.core.points();
  for (std::size_t p = 0; p < pts.size(); ++p) {
    Rational sum = 0;
    for (const auto& comp : d.components) sum += comp.values()[p];
    if (sum != values.values()[p]) return false;
  }
  for (std::size_t i = 0; i < d.vectors.size(); ++i) {
    const auto& comp = d.components[i];
    for (std::size_t p = 0; p < pts.size(); ++p) {
      IntVector next = pts[p] + d.vectors[i];
      if (d.core.contains(next) && comp.at(next) != comp.values()[p]) return false;
    }
  }
  return true;
}

}  // namespace nivatk
