#include "doctest.h"
#include "nivatk/text_format.hpp"
#include "nivatk/tiling.hpp"
#include "oracles.hpp"

using namespace nivatk;

namespace {

const ClusterTile kDomino({{0, 0}, {1, 0}});
const ClusterTile kTromino({{0, 0}, {1, 0}, {0, 1}});

// Coverage multiplicity of each cell of a box by D + C, from the definition.
bool tiles_box(const ClusterTile& d, const PeriodicCoTiler& c, std::int64_t r) {
  for (const auto& u : oracle::box_points({-r, -r}, {r, r})) {
    int hits = 0;
    for (const auto& cell : d.cells())
      for (const auto& res : c.residues)
        if (c.lattice.contains(u - cell - res)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("tile polynomials") {
  CHECK(tile_polynomial(kDomino) == parse_polynomial("1 + x"));
  CHECK(tile_polynomial(kTromino) == parse_polynomial("1 + x + y"));
  CHECK(tile_polynomial(ClusterTile({{0, 0}})) == parse_polynomial("1"));
  CHECK(ClusterTile({{5, 5}, {6, 5}}) == kDomino);
}

TEST_CASE("verify co-tilers") {
  PeriodicCoTiler tri{Lattice({{3, 0}, {-2, 1}}), {{0, 0}}};
  CHECK(verify_cotiler(kTromino, tri).valid());
  PeriodicCoTiler brick{Lattice({{2, 0}, {0, 1}}), {{0, 0}}};
  CHECK(verify_cotiler(kDomino, brick).valid());
  PeriodicCoTiler all{Lattice({{1, 0}, {0, 1}}), {{0, 0}}};
  auto over = verify_cotiler(kDomino, all);
  CHECK(over.verdict == CoverVerdict::Overlap);
  CHECK(over.witness);
  PeriodicCoTiler sparse{Lattice({{4, 0}, {0, 1}}), {{0, 0}}};
  CHECK(verify_cotiler(kDomino, sparse).verdict == CoverVerdict::Gap);
  PeriodicCoTiler flat{Lattice::spanned_by({{1, 0}}, 2), {{0, 0}}};
  CHECK(oracle::errc_of([&] { verify_cotiler(kDomino, flat); }) == Errc::RankDeficient);
}

TEST_CASE("valid co-tilers are exactly those with f c = 1") {
  const std::vector<ClusterTile> tiles{kDomino, kTromino, ClusterTile({{0, 0}, {1, 1}}),
                                       ClusterTile({{0, 0}, {2, 0}, {1, 1}})};
  int valid_seen = 0;
  for (const auto& d : tiles)
    for (std::int64_t index = 1; index <= 6; ++index)
      for (const auto& lat : lattices_of_index(2, index)) {
        auto box = lat.fundamental_box().points();
        // Every residue set of size index / |D| (or a single residue otherwise).
        std::size_t k = index % static_cast<std::int64_t>(d.size()) ? 1 : index / d.size();
        std::vector<int> pick(box.size(), 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        do {
          PeriodicCoTiler c{lat, {}};
          for (std::size_t i = 0; i < box.size(); ++i)
            if (pick[i]) c.residues.push_back(box[i]);
          bool valid = verify_cotiler(d, c).valid();
          valid_seen += valid;
          auto fc = apply(tile_polynomial(d), cotiler_configuration(c), Window::box({-4, -4}, {4, 4}));
          CHECK(valid == fc.all_equal(1));
          CHECK(valid == tiles_box(d, c, 4));
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
  CHECK(valid_seen > 10);
}

TEST_CASE("lattice enumeration") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    auto ls = lattices_of_index(2, n);
    // sigma_1(n) sublattices of index n in Z^2.
    std::int64_t sigma = 0;
    for (std::int64_t k = 1; k <= n; ++k)
      if (n % k == 0) sigma += k;
    CHECK(static_cast<std::int64_t>(ls.size()) == sigma);
    std::set<std::vector<IntVector>> distinct;
    for (const auto& l : ls) {
      CHECK(l.index() == n);
      distinct.insert(l.hnf_columns());
    }
    CHECK(distinct.size() == ls.size());
  }
  CHECK(lattices_of_index(1, 6).size() == 1);
  CHECK(lattices_of_index(3, 2).size() == 7);
}

TEST_CASE("co-tiler search") {
  auto t = search_periodic_cotiler(kTromino, 3);
  REQUIRE(t);
  CHECK(t->lattice.index() == 3);
  CHECK(verify_cotiler(kTromino, *t).valid());

  auto a = search_periodic_cotiler(ClusterTile({{0}, {2}}), 4);
  REQUIRE(a);
  CHECK(a->lattice.hnf_columns() == std::vector<IntVector>{{4}});
  CHECK(a->residues == std::vector<IntVector>{{0}, {1}});

  // No periodic co-tiler of index <= 9 exists; the search over all such lattices is the oracle here.
  auto b = search_periodic_cotiler(ClusterTile({{0}, {1}, {3}}), 9);
  CHECK_FALSE(b);

  for (const auto& d : {kDomino, kTromino, ClusterTile({{0, 0}, {1, 0}, {2, 0}, {1, 1}})}) {
    auto c = search_periodic_cotiler(d, 8);
    REQUIRE(c);
    CHECK(verify_cotiler(d, *c).valid());
    CHECK(verify_cotiler(d.negated(), *c).valid());
  }
}

TEST_CASE("prime tiles force periods") {
  auto t = search_periodic_cotiler(kTromino, 12);
  REQUIRE(t);
  auto rep = prime_periodicity_check(kTromino, *t, Window::sized({60, 60}));
  CHECK(rep.p == 3);
  CHECK(rep.all_verified());
  std::set<IntVector> got;
  for (const auto& p : rep.periods) got.insert(p.vector);
  CHECK(got == std::set<IntVector>{{3, 0}, {0, 3}, {3, -3}});
  for (const auto& v : got) CHECK(t->lattice.contains(v));

  PeriodicCoTiler brick{Lattice({{2, 0}, {0, 1}}), {{0, 0}}};
  auto dom = prime_periodicity_check(kDomino, brick, Window::sized({10, 10}));
  REQUIRE(dom.periods.size() == 1);
  CHECK(dom.periods[0].vector == IntVector{2, 0});
  CHECK(dom.periods[0].verified);

  auto windowed = prime_periodicity_check(kTromino, cotiler_configuration(*t), Window::sized({30, 30}));
  CHECK(windowed.all_verified());

  ClusterTile square({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(oracle::errc_of([&] { prime_periodicity_check(square, brick, Window::sized({4, 4})); }) == Errc::NotPrime);
}
