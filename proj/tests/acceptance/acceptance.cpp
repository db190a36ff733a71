// Acceptance run: one PASS/FAIL line per criterion. Values from the library
// are checked against brute-force oracles in oracles.hpp wherever one exists.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "nivatk/annihilator.hpp"
#include "nivatk/decomposition.hpp"
#include "nivatk/nivat.hpp"
#include "nivatk/tiling.hpp"
#include "oracles.hpp"

using namespace nivatk;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

Window cube(std::int64_t lo, std::int64_t hi) { return Window::box(IntVector::filled(3, lo), IntVector::filled(3, hi)); }

// 3D two-line configuration: P_c(3x3x3) = 2n^2 + 1 = 19 on [-12,9]^3.
Verdict two_lines_complexity() {
  const std::int64_t n = 3;
  auto r = pattern_complexity(oracle::two_lines(n), Window::sized({n, n, n}), cube(-12, 9));
  auto brute = oracle::count_patterns([&](const IntVector& v) { return oracle::two_lines_value(n, v); },
                                      oracle::box_points({0, 0, 0}, {2, 2, 2}),
                                      oracle::box_points({-12, -12, -12}, {9, 9, 9}));
  std::ostringstream d;
  d << "count=" << r.count << " brute=" << brute << " expected=" << 2 * n * n + 1;
  return {r.count == 19 && brute == 19, d.str()};
}

// The search finds {(1,0,0),(0,1,0)} for the two-line configuration.
Verdict two_lines_search() {
  auto c = oracle::two_lines(3);
  auto r = search_difference_annihilator(c, 2, 1, cube(-12, 12));
  if (!r) return {false, "search returned nothing"};
  std::set<IntVector> got(r->begin(), r->end());
  std::ostringstream d;
  d << "vectors=";
  for (const auto& v : *r) d << v.str();
  // Oracle: the product kills c by direct summation on the window.
  auto f = product_of_differences(*r, 3);
  bool kills = true;
  for (const auto& u : oracle::box_points({-6, -6, -6}, {6, 6, 6}))
    if (oracle::apply_at(f, [](const IntVector& v) { return oracle::two_lines_value(3, v); }, u) != 0) kills = false;
  return {got == std::set<IntVector>{{1, 0, 0}, {0, 1, 0}} && r->size() == 2 && kills, d.str()};
}

// (X^(1,0)-1)(X^(0,1)-1)(X^(1,-1)-1) kills the floor-sum configuration cell by cell on 200x200.
Verdict floor_sum_annihilated() {
  auto c = oracle::floor_sum();
  auto f = product_of_differences({{1, 0}, {0, 1}, {1, -1}}, 2);
  Window w = Window::sized({200, 200});
  auto p = apply(f, c, w);
  std::size_t mismatches = 0, nonzero = 0;
  auto value = [](const IntVector& v) { return oracle::floor_sum_value(v[0], v[1]); };
  for (const auto& u : w.points()) {
    auto expect = oracle::apply_at(f, value, u);
    if (p.at(u) != expect) ++mismatches;
    if (p.at(u) != 0) ++nonzero;
  }
  bool binary = true;
  for (const auto& u : oracle::box_points({-2, -2}, {201, 201})) {
    auto v = c.evaluate(u);
    if (v != oracle::floor_sum_value(u[0], u[1]) || (v != 0 && v != 1)) binary = false;
  }
  std::ostringstream d;
  d << "cells=" << w.size() << " nonzero=" << nonzero << " oracle_mismatches=" << mismatches
    << " values_in_{0,1}=" << (binary ? "yes" : "no");
  return {mismatches == 0 && nonzero == 0 && binary, d.str()};
}

// Tromino: co-tiler valid, periods 3(v-u) exact, f(X^3) c == 0 mod 3 on 60x60.
Verdict tromino_prime() {
  ClusterTile d({{0, 0}, {1, 0}, {0, 1}});
  auto c = search_periodic_cotiler(d, 12);
  if (!c) return {false, "no co-tiler"};
  bool valid = verify_cotiler(d, *c).valid();
  Window w = Window::sized({60, 60});
  auto rep = prime_periodicity_check(d, *c, w);
  // Oracles: cover count and the congruence straight from lattice membership.
  auto in_c = [&](const IntVector& v) {
    return std::any_of(c->residues.begin(), c->residues.end(), [&](const IntVector& r) { return c->lattice.contains(v - r); }) ? 1 : 0;
  };
  bool cover = true, congruent = true, periods = true;
  auto f3 = substitute_power(tile_polynomial(d), 3);
  for (const auto& u : w.points()) {
    int hits = 0;
    for (const auto& cell : d.cells()) hits += in_c(u - cell);
    if (hits != 1) cover = false;
    Rational s = oracle::apply_at(f3, in_c, u);
    if (s.get_num() % 3 != 0) congruent = false;
    for (const auto& a : d.cells())
      for (const auto& b : d.cells())
        if (in_c(u) != in_c(u + (b - a) * 3)) periods = false;
  }
  std::ostringstream det;
  det << "cotiler index=" << c->lattice.index() << " valid=" << valid << " periods=" << rep.periods.size()
      << " all_verified=" << rep.all_verified() << " oracle(cover=" << cover << " periods=" << periods
      << " mod3=" << congruent << ")";
  return {valid && rep.all_verified() && rep.congruence.holds && cover && congruent && periods, det.str()};
}

// Nullspace certificates on 50 random periodic configurations with low sampled complexity.
Verdict nullspace_soundness() {
  oracle::Rng rng(20240601);
  int cases = 0, certified = 0, attempts = 0;
  while (cases < 50 && attempts < 100000) {
    ++attempts;
    auto c = oracle::random_periodic(rng, 2, 5, 3);
    std::size_t size = static_cast<std::size_t>(rng.uniform(1, 9));
    std::vector<IntVector> pts;
    while (pts.size() < size) {
      IntVector p{rng.uniform(0, 3), rng.uniform(0, 3)};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    Window shape = Window::set(pts);
    Window sample = Window::sized({20, 20});
    if (pattern_complexity(c, shape, sample).count > shape.size()) continue;
    ++cases;
    try {
      auto r = find_annihilator(c, shape, sample, Window::box({-10, -10}, {29, 29}));
      if (!r || r->f.is_zero()) continue;
      bool ok = true;
      for (const auto& u : oracle::box_points({-12, -12}, {12, 12}))
        if (oracle::apply_at(r->f, [&](const IntVector& v) { return c.evaluate(v); }, u) != 0) ok = false;
      certified += ok;
    } catch (const Error&) {
    }
  }
  std::ostringstream d;
  d << "certified " << certified << "/" << cases << " (attempts " << attempts << ")";
  return {cases == 50 && certified == 50, d.str()};
}

// 100 random sums of up to three periodic parts, decomposed on 30x30 cores.
Verdict decomposition_roundtrip() {
  oracle::Rng rng(99);
  int ok = 0;
  const int total = 100;
  for (int t = 0; t < total; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<Configuration::Term> parts;
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < m; ++i) {
      auto p = oracle::random_periodic(rng, 2, 4, 5);
      parts.push_back({1, p});
      const auto& cols = std::get<PeriodicNode>(p.node().v).lattice.hnf_columns();
      vs.push_back(cols[static_cast<std::size_t>(rng.uniform(0, 1))]);
    }
    auto c = Configuration::sum(parts);
    Window core = Window::sized({30, 30});
    try {
      auto d = decompose(c, vs, core, core.expanded({12, 12}, {12, 12}));
      // Oracle: both invariants, cell by cell.
      bool sum_ok = true, periodic_ok = true;
      for (const auto& u : core.points()) {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) {
          s += d.components[i].at(u);
          if (core.contains(u + vs[i]) && d.components[i].at(u) != d.components[i].at(u + vs[i])) periodic_ok = false;
        }
        if (s != Rational(c.evaluate(u))) sum_ok = false;
      }
      if (sum_ok && periodic_ok && d.residual_check) ++ok;
    } catch (const Error&) {
    }
  }
  std::ostringstream d;
  d << ok << "/" << total << " decompositions verified";
  return {ok == total, d.str()};
}

oracle::Terms reduce_terms(const oracle::Terms& t, long p) {
  oracle::Terms out;
  for (const auto& [e, c] : t) {
    Integer r = c.get_num() % p;
    if (r < 0) r += p;
    if (r != 0) out[e] = Rational(r);
  }
  return out;
}

// f^p == f(X^p) mod p for 200 random integer polynomials and p up to 13.
Verdict frobenius() {
  oracle::Rng rng(1234);
  int ok = 0, total = 0;
  for (int t = 0; t < 200; ++t) {
    LaurentPolynomial f(2);
    int terms = static_cast<int>(rng.uniform(1, 6));
    for (int k = 0; k < terms; ++k)
      f.add_term({rng.uniform(-3, 3), rng.uniform(-3, 3)}, Rational(rng.uniform(-9, 9)));
    for (long p : {2, 3, 5, 7, 11, 13}) {
      ++total;
      auto lhs = reduce_mod(pow(f, static_cast<unsigned>(p)), p);
      auto rhs = reduce_mod(substitute_power(f, p), p);
      // Oracle: repeated schoolbook products, reduced by hand.
      oracle::Terms power{{{0, 0}, Rational(1)}};
      for (long k = 0; k < p; ++k) power = oracle::multiply(power, oracle::terms_of(f));
      oracle::Terms frob;
      for (const auto& [e, c] : f.terms()) frob[{e[0] * p, e[1] * p}] = c;
      bool oracle_ok = reduce_terms(power, p) == reduce_terms(frob, p);
      if (lhs == rhs && oracle::terms_of(lhs) == reduce_terms(power, p) && oracle_ok) ++ok;
    }
  }
  std::ostringstream d;
  d << ok << "/" << total << " (polynomial, prime) pairs";
  return {ok == total, d.str()};
}

// Planted line factors in distinct directions are recovered exactly.
Verdict line_factors() {
  oracle::Rng rng(555);
  std::vector<IntVector> dirs;
  for (std::int64_t a = 0; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b) {
      IntVector v{a, b};
      if (is_primitive(v) && canonical_sign(v) == v) dirs.push_back(v);
    }
  int ok = 0;
  const int total = 100;
  for (int t = 0; t < total; ++t) {
    std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
    std::set<IntVector> planted;
    while (planted.size() < k) planted.insert(dirs[static_cast<std::size_t>(rng.uniform(0, dirs.size() - 1))]);
    // A trinomial with non-collinear support: its Newton polygon is a
    // triangle, which has no segment as a Minkowski summand, so it has no
    // line factor.
    LaurentPolynomial h(2);
    IntVector a{0, 0}, b, c;
    do {
      b = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
      c = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
    } while ((b[0] * c[1] - b[1] * c[0]) == 0);
    for (const auto& e : {a, b, c}) {
      std::int64_t coef = 0;
      while (coef == 0) coef = rng.uniform(-5, 5);
      h.add_term(e, coef);
    }
    LaurentPolynomial f = h;
    for (const auto& v : planted) {
      LaurentPolynomial phi(2);
      std::int64_t deg = rng.uniform(1, 3);
      for (std::int64_t j = 0; j <= deg; ++j) {
        std::int64_t coef = rng.uniform(-3, 3);
        if ((j == 0 || j == deg) && coef == 0) coef = 1;
        phi.add_term(v * j, coef);
      }
      f *= phi;
    }
    auto lf = line_factorization(f);
    auto got = lf.directions();
    if (std::set<IntVector>(got.begin(), got.end()) == planted && got.size() == planted.size() &&
        lf.reconstruct() == f)
      ++ok;
  }
  std::ostringstream d;
  d << ok << "/" << total << " factorizations recovered";
  return {ok == total, d.str()};
}

// Nivat scan of the floor-sum configuration: every (M,N) in [2,8]^2 exceeds MN.
Verdict nivat_scan_rows() {
  auto rows = nivat_scan(oracle::floor_sum(), {2, 8}, {2, 8}, Window::sized({500, 500}));
  std::size_t exceeds = 0;
  for (const auto& r : rows) exceeds += r.verdict == ScanVerdict::ExceedsMN && r.count > static_cast<std::size_t>(r.M * r.N);
  // Oracle on the two corner cells: distinct blocks by direct enumeration,
  // stopping once MN is exceeded.
  bool oracle_ok = true;
  for (std::int64_t s : {2, 8}) {
    std::set<std::vector<Integer>> seen;
    for (std::int64_t j = 0; j < 500 && seen.size() <= static_cast<std::size_t>(s * s); ++j)
      for (std::int64_t i = 0; i < 500 && seen.size() <= static_cast<std::size_t>(s * s); ++i) {
        std::vector<Integer> block;
        for (std::int64_t y = 0; y < s; ++y)
          for (std::int64_t x = 0; x < s; ++x) block.push_back(oracle::floor_sum_value(i + x, j + y));
        seen.insert(block);
      }
    if (seen.size() <= static_cast<std::size_t>(s * s)) oracle_ok = false;
  }
  std::ostringstream d;
  d << exceeds << "/" << rows.size() << " rows ExceedsMN, corner oracle " << (oracle_ok ? "agrees" : "disagrees");
  return {rows.size() == 49 && exceeds == 49 && oracle_ok, d.str()};
}

// Sturmian word: n+1 factors of each length n <= 15 and no nullspace certificate.
Verdict sturmian_boundary() {
  auto s = oracle::sturmian();
  auto value = [](const IntVector& v) -> Integer { return oracle::floor_k_sqrt2(v[0] + 1) - oracle::floor_k_sqrt2(v[0]); };
  auto anchors = oracle::box_points(IntVector{0}, IntVector{9999});
  int ok = 0;
  std::ostringstream d;
  for (std::int64_t n = 1; n <= 15; ++n) {
    Window shape = Window::sized({n});
    Window sample = Window::sized({10000});
    auto r = pattern_complexity(s, shape, sample);
    auto brute = oracle::count_patterns(value, shape.points(), anchors);
    auto ann = find_annihilator(s, shape, sample, sample);
    if (r.count == static_cast<std::size_t>(n + 1) && brute == r.count && !ann) ++ok;
    else d << "n=" << n << " count=" << r.count << " brute=" << brute << " annihilator=" << (ann ? "found " : "absent ");
  }
  d << ok << "/15 lengths with count n+1 and no annihilator";
  return {ok == 15, d.str()};
}

// Bound calculators.
Verdict bounds() {
  int bad = 0;
  for (std::int64_t M = 0; M <= 10; ++M)
    for (std::int64_t N = 0; N <= 10; ++N)
      if (bound_two_directions({1, 0}, {0, 1}, M, N) != Rational(M * N)) ++bad;
  auto f = product_of_differences({{1, 0}, {0, 1}, {1, -1}}, 2);
  auto lf = line_factorization(f);
  auto rep = corollary_report(f, lf, 5, 5);
  auto a = rep.find("cor-a");
  auto c = rep.find("cor-c");
  std::ostringstream d;
  d << "two-direction mismatches=" << bad << " bbox=(" << rep.m << "," << rep.n << ") directions=" << lf.line_direction_count()
    << " cor-a=" << (a ? to_string(a->value) : "-") << " cor-c=" << (c ? to_string(c->value) : "-");
  return {bad == 0 && rep.m == 2 && rep.n == 2 && lf.line_direction_count() == 3 && a && a->value == 9 && c &&
              c->value == 18,
          d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;  // 0: no runtime bound
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"two-lines-3d-complexity", 10, two_lines_complexity},
      {"two-lines-difference-search", 30, two_lines_search},
      {"floor-sum-annihilator-200x200", 10, floor_sum_annihilated},
      {"tromino-prime-periods", 5, tromino_prime},
      {"nullspace-certificates-50", 0, nullspace_soundness},
      {"decomposition-roundtrip-100", 60, decomposition_roundtrip},
      {"frobenius-200", 0, frobenius},
      {"line-factorization-100", 0, line_factors},
      {"nivat-scan-2..8", 120, nivat_scan_rows},
      {"sturmian-boundary", 0, sturmian_boundary},
      {"bound-calculators", 0, bounds},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    bool pass = v.pass && in_time;
    failures += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << ' ' << (index < 10 ? "0" : "") << index << ' ' << c.name << ": "
              << v.detail << " [" << timing;
    if (c.limit_seconds > 0) std::cout << " < " << c.limit_seconds << "s";
    std::cout << "]" << (in_time ? "" : " too slow") << '\n';
  }
  return failures ? 1 : 0;
}
