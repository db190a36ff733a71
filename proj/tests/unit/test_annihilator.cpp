#include "doctest.h"
#include "nivatk/annihilator.hpp"
#include "nivatk/text_format.hpp"
#include "oracles.hpp"

using namespace nivatk;

namespace {

LaurentPolynomial P(const char* text, std::size_t dim = 2) { return parse_polynomial(text, dim); }

// True if f c = 0 at every point of the window, from the definition.
template <class F>
bool kills(const LaurentPolynomial& f, F&& value, const std::vector<IntVector>& points) {
  return std::all_of(points.begin(), points.end(), [&](const IntVector& u) { return oracle::apply_at(f, value, u) == 0; });
}

}  // namespace

TEST_CASE("nullspace annihilator of the checkerboard") {
  auto cb = oracle::checkerboard();
  auto r = find_annihilator(cb, Window::set({{0, 0}, {1, 0}, {0, 1}}), Window::sized({10, 10}), Window::sized({12, 12}));
  REQUIRE(r);
  CHECK(r->distinct_rows == 2);
  CHECK(r->constant == 0);
  CHECK(normalize(r->g) == P("x - y"));
  auto value = [&](const IntVector& v) { return cb.evaluate(v); };
  CHECK(kills(r->f, value, oracle::box_points({-6, -6}, {6, 6})));
  for (const auto& u : oracle::box_points({-4, -4}, {4, 4})) CHECK(oracle::apply_at(r->g, value, u) == r->constant);
}

TEST_CASE("constant configuration") {
  auto c = Configuration::constant(2, 5);
  auto r = find_annihilator(c, Window::set({{0, 0}}), Window::sized({4, 4}), Window::sized({6, 6}));
  REQUIRE(r);
  auto g_at = oracle::apply_at(r->g, [](const IntVector&) { return 5; }, IntVector{0, 0});
  CHECK(g_at == r->constant);
  CHECK(r->constant != 0);
  CHECK(annihilates(r->f, c, Window::sized({5, 5})).holds());
}

TEST_CASE("sturmian word has no annihilator from n+1 patterns") {
  auto s = oracle::sturmian();
  auto r = find_annihilator(s, Window::sized({3}), Window::sized({10000}), Window::sized({10000}));
  CHECK_FALSE(r);
  CHECK(pattern_complexity(s, Window::sized({3}), Window::sized({10000})).count == 4);
}

TEST_CASE("low complexity always yields a certificate") {
  oracle::Rng rng(8);
  int tested = 0;
  for (int t = 0; t < 60 && tested < 25; ++t) {
    auto c = oracle::random_periodic(rng, 2, 3, 3);
    std::vector<IntVector> pts;
    while (pts.size() < 6) {
      IntVector p{rng.uniform(0, 3), rng.uniform(0, 3)};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    Window shape = Window::set(pts);
    Window sample = Window::sized({12, 12});
    if (pattern_complexity(c, shape, sample).count > shape.size()) continue;
    ++tested;
    auto r = find_annihilator(c, shape, sample, Window::box({-8, -8}, {15, 15}));
    REQUIRE(r);
    CHECK_FALSE(r->f.is_zero());
    CHECK(r->distinct_rows <= shape.size());
    auto value = [&](const IntVector& v) { return c.evaluate(v); };
    CHECK(kills(r->f, value, oracle::box_points({-10, -10}, {10, 10})));
  }
  CHECK(tested > 5);
}

TEST_CASE("verification failures are reported") {
  // Zero on the sample, one far away: the sample's kernel vector fails the check.
  auto c = Configuration::finite(2, {{{30, 30}, 1}});
  CHECK(oracle::errc_of([&] {
          find_annihilator(c, Window::set({{0, 0}, {1, 0}}), Window::sized({5, 5}), Window::sized({40, 40}));
        }) == Errc::VerificationFailed);
  CHECK(oracle::errc_of([&] { find_annihilator(c, Window::sized({1, 1}), Window::empty(2), Window::sized({2, 2})); }) ==
        Errc::EmptySample);
}

TEST_CASE("expansion bound") {
  auto a = expansion_bound(P("x - y"), 1);
  CHECK(a.s == 2);
  CHECK(a.r == 2);
  auto b = expansion_bound(P("2*x + 3"), 1);
  CHECK(b.s == 5);
  CHECK(b.r == 120);
  auto z = expansion_bound(P("x - y"), 0);
  CHECK(z.s == 0);
  CHECK(z.r == 1);
  CHECK(oracle::errc_of([] { expansion_bound(P("1/2*x"), 1); }) == Errc::NonIntegerCoefficients);
}

TEST_CASE("expanded annihilators") {
  auto cb = oracle::checkerboard();
  auto rep = verify_expansion(P("x - y"), cb, {2, 3}, Window::sized({10, 10}));
  CHECK(rep.bound.s == 2);
  REQUIRE(rep.checks.size() == 2);
  CHECK_FALSE(rep.checks[0].above_bound);
  CHECK_FALSE(rep.checks[0].exact);
  CHECK(rep.checks[0].modular.holds);
  CHECK(rep.checks[1].above_bound);
  REQUIRE(rep.checks[1].exact);
  CHECK(rep.checks[1].exact->verdict == Annihilation::Yes);

  auto fs = oracle::floor_sum();
  auto fsum = verify_expansion(product_of_differences({{1, 0}, {0, 1}, {1, -1}}, 2), fs, {5, 7},
                              Window::sized({100, 100}));
  CHECK(fsum.bound.s == 6);  // six unit coefficients
  CHECK_FALSE(fsum.checks[0].above_bound);
  CHECK(fsum.checks[0].modular.holds);
  REQUIRE(fsum.checks[1].exact);
  CHECK(fsum.checks[1].exact->verdict == Annihilation::YesOnWindow);
  CHECK(oracle::errc_of([&] { verify_expansion(P("x - y"), cb, {4}, Window::sized({4, 4})); }) == Errc::NotPrime);
}

TEST_CASE("frobenius congruence for a prime tile") {
  // Tromino and its co-tiler with period lattice <(3,0),(1,1)>.
  auto c = Configuration::coset(IntVector{0, 0}, Lattice({{3, 0}, {1, 1}}), 1);
  auto f = P("1 + x + y");
  auto res = congruence_check(substitute_power(f, 3), c, 3, Window::box({-30, -30}, {29, 29}));
  CHECK(res.holds);
  auto bad = congruence_check(substitute_power(f, 3), c, 2, Window::sized({10, 10}));
  CHECK_FALSE(bad.holds);
}

TEST_CASE("radical witness") {
  auto g = build_radical_witness(P("x - y"), 2, {0, 1});
  CHECK(g == P("x*y*(x^2 - y^2)"));
  CHECK(build_radical_witness(P("3*x^2*y"), 5, {2, 1}) == P("x*y"));
  CHECK(build_radical_witness(P("x - y", 3), 1, {0, 1, 0}) == P("x*y*z*(x - y)", 3));
  CHECK(normalize(g) == normalize(P("x^2*y^-2 - 1")));
  CHECK(oracle::errc_of([] { build_radical_witness(P("x - y"), 2, {1, 1}); }) == Errc::V0NotInSupport);

  auto form = radical_witness_form(P("x - y"), 2, {0, 1});
  CHECK(form.expand() == g);
  REQUIRE(form.vectors.size() == 1);
  CHECK(form.vectors[0] == IntVector{2, -2});
}

TEST_CASE("difference forms") {
  auto g = P("3*x*(x^2*y - 1)*(y^3 - 1)");
  auto form = difference_form(g);
  REQUIRE(form);
  CHECK(form->expand() == g);
  CHECK(form->vectors.size() == 2);
  CHECK_FALSE(difference_form(P("x + y + 1")));
}

TEST_CASE("difference candidates") {
  auto c = difference_candidates(2, 1);
  CHECK(c == std::vector<IntVector>{{0, 1}, {1, -1}, {1, 0}, {1, 1}});
  CHECK(difference_candidates(3, 1).size() == 13);
}

TEST_CASE("search for products of differences") {
  auto cb = oracle::checkerboard();
  auto a = search_difference_annihilator(cb, 2, 1, Window::box({-6, -6}, {6, 6}));
  REQUIRE(a);
  // Lexicographic order meets (1,-1) before (1,1); both are periods.
  CHECK(*a == std::vector<IntVector>{{1, -1}});
  CHECK(annihilates(LaurentPolynomial::difference({1, 1}), cb, Window::sized({2, 2})).verdict == Annihilation::Yes);

  auto b = search_difference_annihilator(oracle::two_lines(3), 2, 1,
                                         Window::box(IntVector::filled(3, -8), IntVector::filled(3, 8)));
  REQUIRE(b);
  CHECK(*b == std::vector<IntVector>{{0, 1, 0}, {1, 0, 0}});

  auto c = search_difference_annihilator(oracle::floor_sum(), 3, 1, Window::sized({60, 60}));
  REQUIRE(c);
  CHECK(*c == std::vector<IntVector>{{0, 1}, {1, -1}, {1, 0}});
  auto again = search_difference_annihilator(oracle::floor_sum(), 3, 1, Window::sized({60, 60}));
  CHECK(again == c);

  CHECK_FALSE(search_difference_annihilator(oracle::floor_sum(), 2, 1, Window::sized({40, 40})));
  CHECK(oracle::errc_of([&] { search_difference_annihilator(cb, 3, 2, Window::sized({6, 6})); }) ==
        Errc::WindowTooSmall);
}
