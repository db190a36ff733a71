#include <limits>

#include "doctest.h"
#include "nivatk/lattice.hpp"
#include "oracles.hpp"

using namespace nivatk;

namespace {

std::int64_t det2(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

TEST_CASE("primitive vectors and canonical sign") {
  CHECK(is_primitive({2, 3}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK_FALSE(is_primitive({0, 0}));
  CHECK(primitive_part({4, -6}) == IntVector{2, -3});
  CHECK(canonical_sign({-1, 2}) == IntVector{1, -2});
  CHECK(canonical_sign({0, -3}) == IntVector{0, 3});
  CHECK(box_of({1, -1}) == IntVector{1, 1});
  CHECK(parallel({2, 4}, {-1, -2}));
  CHECK_FALSE(parallel({1, 0}, {1, 1}));
}

TEST_CASE("int64 overflow is reported") {
  IntVector big{std::numeric_limits<std::int64_t>::max(), 0};
  CHECK(oracle::errc_of([&] { (void)(big + IntVector{1, 0}); }) == Errc::Overflow);
}

TEST_CASE("unimodular complement") {
  CHECK(unimodular_complement({1, 0}) == IntVector{0, 1});
  auto w = unimodular_complement({2, 3});
  CHECK(std::abs(det2({2, 3}, w)) == 1);
  CHECK(oracle::errc_of([] { unimodular_complement({0, 0}); }) == Errc::ZeroVector);
  CHECK(oracle::errc_of([] { unimodular_complement({2, 4}); }) == Errc::NonPrimitive);

  // Property over all primitive vectors with small coordinates.
  for (std::int64_t a = -7; a <= 7; ++a)
    for (std::int64_t b = -7; b <= 7; ++b) {
      IntVector v{a, b};
      if (!is_primitive(v)) continue;
      auto c = unimodular_complement(v);
      CHECK(std::abs(det2(v, c)) == 1);
      // Nothing strictly smaller in max norm also works.
      std::int64_t m = std::max(std::abs(c[0]), std::abs(c[1]));
      for (std::int64_t x = -m + 1; x < m; ++x)
        for (std::int64_t y = -m + 1; y < m; ++y) CHECK(std::abs(det2(v, {x, y})) != 1);
    }
}

TEST_CASE("hnf fundamental domain") {
  auto d = hnf_fundamental_domain(Lattice({{2, 0}, {0, 2}}));
  CHECK(d.index == 4);
  CHECK(d.residues == std::vector<IntVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});

  auto e = hnf_fundamental_domain(Lattice({{3, 0}, {-2, 1}}));
  CHECK(e.index == 3);
  CHECK(e.residues == std::vector<IntVector>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(e.basis == std::vector<IntVector>{{3, 0}, {1, 1}});

  CHECK(oracle::errc_of([] { Lattice({{1, 1}, {2, 2}}); }) == Errc::RankDeficient);
}

TEST_CASE("reduction picks one residue per coset") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntVector> gens{{rng.uniform(-4, 4), rng.uniform(-4, 4)}, {rng.uniform(-4, 4), rng.uniform(-4, 4)}};
    std::int64_t det = det2(gens[0], gens[1]);
    if (det == 0) continue;
    Lattice l(gens);
    CHECK(l.index() == std::abs(det));
    auto dom = hnf_fundamental_domain(l);
    CHECK(dom.residues.size() == static_cast<std::size_t>(std::abs(det)));
    std::set<IntVector> seen;
    for (const auto& p : oracle::box_points({-6, -6}, {6, 6})) {
      auto r = l.reduce(p);
      seen.insert(r);
      CHECK(std::find(dom.residues.begin(), dom.residues.end(), r) != dom.residues.end());
      // p - r lies in the lattice: solve with Cramer's rule.
      IntVector diff = p - r;
      std::int64_t s = det2(diff, gens[1]), t = det2(gens[0], diff);
      CHECK(s % det == 0);
      CHECK(t % det == 0);
      CHECK(l.reduce(p + gens[0]) == r);
    }
    CHECK(seen.size() <= dom.residues.size());
  }
}

TEST_CASE("rank-deficient lattices reduce along their span") {
  auto l = Lattice::spanned_by({{1, 1}, {2, 2}}, 2);
  CHECK(l.rank() == 1);
  CHECK(l.reduce({3, 5}) == l.reduce({0, 2}));
  CHECK(l.contains({-4, -4}));
  CHECK_FALSE(l.contains({1, 0}));
}

TEST_CASE("parallelogram area") {
  CHECK(parallelogram_area({1, 0}, {0, 1}) == 1);
  CHECK(parallelogram_area({1, 0}, {1, -1}) == 1);
  CHECK(parallelogram_area({2, 4}, {1, 2}) == 0);
  oracle::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    IntVector u{rng.uniform(-9, 9), rng.uniform(-9, 9)}, v{rng.uniform(-9, 9), rng.uniform(-9, 9)};
    CHECK(parallelogram_area(u, v) == parallelogram_area(v, u));
  }
}

TEST_CASE("windows") {
  auto w = Window::box({0, 0}, {2, 1});
  CHECK(w.size() == 6);
  CHECK(w.points().front() == IntVector{0, 0});
  CHECK(w.points()[1] == IntVector{1, 0});
  CHECK(w.index_of({2, 1}) == 5);
  auto s = Window::set({{1, 1}, {0, 0}, {1, 1}});
  CHECK(s.size() == 2);
  CHECK_FALSE(s.is_box());
  CHECK(intersect_boxes(w, Window::box({5, 5}, {6, 6})).empty());
}
