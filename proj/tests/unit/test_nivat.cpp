#include "doctest.h"
#include "nivatk/annihilator.hpp"
#include "nivatk/nivat.hpp"
#include "nivatk/text_format.hpp"
#include "oracles.hpp"

using namespace nivatk;

namespace {

LaurentPolynomial P(const char* text) { return parse_polynomial(text, 2); }

// c(i,j) = 1 on the row j = 0, a one-periodic configuration.
Configuration row() { return Configuration::coset(IntVector{0, 0}, Lattice::spanned_by({{1, 0}}, 2), 1); }

}  // namespace

TEST_CASE("disjoint lines bound") {
  CHECK(bound_disjoint_lines(1, 1, 2, 2) == 5);
  CHECK(bound_disjoint_lines(1, 0, 3, 2) == 2);
  CHECK(oracle::errc_of([] { bound_disjoint_lines(0, 0, 2, 2); }) == Errc::DegenerateDirection);
}

TEST_CASE("line size bound") {
  CHECK(bound_line_size(1, 0, 4, 4, 1) == 4);
  CHECK(bound_line_size(1, 1, 2, 3, 2) == Rational(5, 2));
  CHECK(oracle::errc_of([] { bound_line_size(1, 1, 2, 2, 0); }) == Errc::ZeroArea);
}

TEST_CASE("two directions bound") {
  for (std::int64_t M = 0; M <= 10; ++M)
    for (std::int64_t N = 0; N <= 10; ++N) CHECK(bound_two_directions({1, 0}, {0, 1}, M, N) == M * N);
  CHECK(bound_two_directions({1, 0}, {1, -1}, 3, 3) == 18);
  CHECK(oracle::errc_of([] { bound_two_directions({1, 0}, {1, 0}, 3, 3); }) == Errc::ParallelDirections);
  CHECK(oracle::errc_of([] { bound_two_directions({1, 0}, {-1, 0}, 3, 3); }) == Errc::ParallelDirections);
  CHECK(oracle::errc_of([] { bound_two_directions({2, 0}, {0, 1}, 3, 3); }) == Errc::NonPrimitive);
  oracle::Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    IntVector a{rng.uniform(-3, 3), rng.uniform(-3, 3)}, b{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    if (!is_primitive(a) || !is_primitive(b) || parallel(a, b)) continue;
    std::int64_t M = rng.uniform(0, 9), N = rng.uniform(0, 9);
    CHECK(bound_two_directions(a, b, M, N) == bound_two_directions(b, a, M, N));
  }
  CHECK(two_direction_block({1, 1}, {1, -1}, 4, 4) == std::pair<std::int64_t, std::int64_t>{6, 6});
}

TEST_CASE("corollary report") {
  auto f = product_of_differences({{1, 0}, {0, 1}, {1, -1}}, 2);
  auto lf = line_factorization(f);
  auto rep = corollary_report(f, lf, 5, 5);
  CHECK(rep.m == 2);
  CHECK(rep.n == 2);
  REQUIRE(rep.find("cor-a"));
  CHECK(rep.find("cor-a")->value == 9);
  REQUIRE(rep.find("cor-c"));
  CHECK(rep.find("cor-c")->value == 18);
  CHECK(rep.find("cor-c")->conditional);
  CHECK(rep.best == 18);
  CHECK(oracle::errc_of([&] { corollary_report(f, lf, 1, 5); }) == Errc::BlockTooSmall);

  // Two diagonal directions: bbox(g) = (2,2), so the pairwise bound is taken at 4x4.
  auto g = P("(x*y - 1)*(x*y^-1 - 1)");
  auto rg = corollary_report(g, line_factorization(g), 6, 6);
  auto pair = rg.find("cor-b-pair");
  REQUIRE(pair);
  CHECK(pair->applicable);
  CHECK(pair->value == bound_two_directions({1, 1}, {1, -1}, 4, 4));
  CHECK(pair->value == 32);  // (4+4)(4+4)/(1+1)
  CHECK_FALSE(rg.find("cor-c"));
}

TEST_CASE("nivat scan") {
  auto rows = nivat_scan(oracle::floor_sum(), {2, 8}, {2, 8}, Window::sized({500, 500}));
  REQUIRE(rows.size() == 49);
  for (const auto& r : rows) {
    CHECK(r.verdict == ScanVerdict::ExceedsMN);
    CHECK(r.count > static_cast<std::size_t>(r.M * r.N));
  }
  auto cb = nivat_scan(oracle::checkerboard(), {2, 2}, {2, 2}, Window::sized({20, 20}));
  CHECK(cb[0].count == 2);
  CHECK(cb[0].verdict == ScanVerdict::Inconclusive);
  for (const auto& r : nivat_scan(Configuration::constant(2, 3), {1, 4}, {1, 4}, Window::sized({10, 10}))) {
    CHECK(r.count == 1);
    CHECK(r.verdict == ScanVerdict::Inconclusive);
  }
  auto csv = scan_csv(cb);
  CHECK(csv == "M,N,count,threshold,verdict\n2,2,2,4,Inconclusive\n");
}

TEST_CASE("scan counts are lower bounds that grow with the sample") {
  auto value = [](const IntVector& v) { return oracle::floor_sum_value(v[0], v[1]); };
  auto small = nivat_scan(oracle::floor_sum(), {1, 3}, {1, 3}, Window::sized({15, 15}));
  auto large = nivat_scan(oracle::floor_sum(), {1, 3}, {1, 3}, Window::sized({60, 60}));
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i].verdict == ScanVerdict::ExceedsMN) CHECK(large[i].verdict == ScanVerdict::ExceedsMN);
    auto brute = oracle::count_patterns(value, oracle::box_points({0, 0}, {small[i].M - 1, small[i].N - 1}),
                                        oracle::box_points({0, 0}, {14, 14}));
    CHECK(std::min(brute, static_cast<std::size_t>(small[i].threshold) + 1) ==
          std::min(small[i].count, static_cast<std::size_t>(small[i].threshold) + 1));
  }
}

TEST_CASE("line census") {
  auto r = line_pattern_census(row(), Window::sized({2, 2}), {1, 0}, Window::box({0, -4}, {9, 4}));
  for (const auto& l : r.lines) CHECK(l.distinct == 1);
  CHECK(r.anchor_lines == 9);

  auto cb = line_pattern_census(oracle::checkerboard(), Window::sized({1, 1}), {1, 0}, Window::sized({10, 1}));
  REQUIRE(cb.lines.size() == 1);
  CHECK(cb.lines[0].distinct == 2);

  auto k = line_pattern_census(Configuration::constant(2, 1), Window::sized({2, 2}), {0, 1}, Window::sized({5, 5}));
  for (const auto& l : k.lines) CHECK(l.distinct == 1);
  CHECK(oracle::errc_of([] {
          line_pattern_census(Configuration::constant(2, 1), Window::sized({2, 2}), {0, 0}, Window::sized({5, 5}));
        }) == Errc::ZeroVector);
}

TEST_CASE("census against the line bounds for a one-periodic configuration") {
  // Ann(c) is generated by x - 1, so m = 1, n = 0.
  auto c = row();
  for (std::int64_t M = 1; M <= 4; ++M)
    for (std::int64_t N = 1; N <= 4; ++N) {
      auto along = line_pattern_census(c, Window::sized({M + 1, N}), {1, 0}, Window::box({0, -12}, {6, 12}));
      CHECK(Integer(static_cast<long>(along.disjoint_lines)) >= bound_disjoint_lines(1, 0, M, N));
      // Transversal direction (0,1): every line of blocks sees more than (Mn + mN)/S patterns.
      auto across = line_pattern_census(c, Window::sized({M + 1, N}), {0, 1}, Window::box({0, -12}, {6, 12}));
      Rational lower = bound_line_size(1, 0, M, N, parallelogram_area({1, 0}, {0, 1}).get_si());
      for (const auto& l : across.lines) CHECK(Rational(static_cast<long>(l.distinct)) > lower);
    }
}

TEST_CASE("periodicity class") {
  auto cb = periodicity_class(std::vector<IntVector>{{1, 1}}, std::nullopt, {{2, 0}, {0, 2}});
  CHECK(cb.cls == PeriodicityClass::DoublyPeriodicCandidate);
  CHECK(cb.certain);

  auto f = product_of_differences({{1, 0}, {0, 1}, {1, -1}}, 2);
  auto fsum = periodicity_class(std::nullopt, line_factorization(f));
  CHECK(fsum.cls == PeriodicityClass::NonPeriodicCandidate);
  CHECK_FALSE(fsum.certain);
  CHECK(fsum.direction_count == 3u);

  auto one = periodicity_class(std::vector<IntVector>{{1, 0}}, std::nullopt);
  CHECK(one.cls == PeriodicityClass::OnePeriodicCandidate);
  CHECK(periodicity_class(std::nullopt, std::nullopt).cls == PeriodicityClass::Unknown);
}
