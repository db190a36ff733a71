#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "nivatk/annihilator.hpp"
#include "nivatk/configuration.hpp"
#include "nivatk/decomposition.hpp"
#include "nivatk/laurent.hpp"
#include "nivatk/nivat.hpp"
#include "nivatk/text_format.hpp"
#include "nivatk/tiling.hpp"

namespace nivatk::cli {
namespace {

// A path if one exists, otherwise the argument is the text itself.
std::string load(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Configuration load_config(const std::string& arg) { return parse_config_file(load(arg)).config; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

const char* annihilation_name(Annihilation a) {
  switch (a) {
    case Annihilation::Yes: return "yes";
    case Annihilation::YesOnWindow: return "yes-on-window";
    case Annihilation::No: return "no";
  }
  return "no";
}

const char* cover_name(CoverVerdict v) {
  switch (v) {
    case CoverVerdict::Valid: return "Valid";
    case CoverVerdict::Overlap: return "Overlap";
    case CoverVerdict::Gap: return "Gap";
  }
  return "Gap";
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(Errc::SyntaxError, "expected an integer, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<IntVector>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + v.str();
  return s;
}

struct Options {
  std::string config, shape, sample = "64", window, verify, poly, vectors, core, halo, direction;
  std::string primes, tile, cotiler, M = "2..8", N = "2..8", v1, v2, box;
  int max_factors = 2;
  std::int64_t bound = 1, max_index = 12, area = 0;
  bool prime_check = false, per_line = false;
  std::vector<std::string> also;
};

int cmd_complexity(const Options& o, std::ostream& out) {
  auto c = load_config(o.config);
  auto r = pattern_complexity(c, parse_window(o.shape, c.dim()), parse_window(o.sample, c.dim()));
  out << "count=" << r.count << " exact=" << yes_no(r.exact) << '\n';
  return 0;
}

int cmd_annihilate(const Options& o, std::ostream& out) {
  auto c = load_config(o.config);
  Window sample = parse_window(o.sample, c.dim());
  Window verify = o.verify.empty() ? sample : parse_window(o.verify, c.dim());
  auto r = find_annihilator(c, parse_window(o.shape, c.dim()), sample, verify);
  if (!r) {
    out << "annihilator=none\n";
    return 0;
  }
  out << "g=" << r->g << '\n'
      << "constant=" << to_string(r->constant) << '\n'
      << "f=" << r->f << '\n'
      << "distinct_rows=" << r->distinct_rows << '\n'
      << "verified_on=" << r->verified_on.str() << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto c = load_config(o.config);
  auto f = parse_polynomial(load(o.poly), c.dim());
  Window w = parse_window(o.window.empty() ? "64" : o.window, c.dim());
  auto r = annihilates(f, c, w);
  out << "annihilates=" << annihilation_name(r.verdict) << " checked=" << r.checked.str();
  if (r.witness) out << " witness=" << r.witness->str() << " value=" << to_string(r.witness_value);
  out << '\n';
  bool ok = r.holds();
  if (!o.primes.empty()) {
    auto rep = verify_expansion(f, c, parse_int_list(o.primes), w);
    out << "c_max=" << to_string(rep.c_max) << " s=" << to_string(rep.bound.s) << '\n';
    for (const auto& ch : rep.checks) {
      out << "p=" << ch.p << " modular=" << (ch.modular.holds ? "holds" : "fails");
      if (ch.modular.witness) out << " witness=" << ch.modular.witness->str();
      out << " exact=";
      if (ch.exact)
        out << annihilation_name(ch.exact->verdict);
      else
        out << "skipped";
      out << '\n';
      ok = ok && ch.modular.holds && (!ch.exact || ch.exact->holds());
    }
  }
  return ok ? 0 : 1;
}

int cmd_search(const Options& o, std::ostream& out) {
  auto c = load_config(o.config);
  Window w = parse_window(o.window.empty() ? "-12..12" : o.window, c.dim());
  auto r = search_difference_annihilator(c, o.max_factors, o.bound, w);
  if (!r) {
    out << "vectors=none\n";
    return 0;
  }
  out << "vectors=" << join(*r) << '\n' << "product=" << product_of_differences(*r, c.dim()) << '\n';
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  auto c = load_config(o.config);
  auto vs = parse_vector_list(o.vectors);
  Window core = parse_window(o.core, c.dim());
  Window halo;
  if (o.halo.empty()) {
    IntVector pad(c.dim());
    for (const auto& v : vs)
      for (std::size_t i = 0; i < c.dim(); ++i) pad[i] += std::abs(v[i]);
    halo = core.expanded(pad, pad);
  } else {
    halo = parse_window(o.halo, c.dim());
  }
  auto d = decompose(c, vs, core, halo);
  bool checked = check_decomposition(c, d);
  out << "core=" << d.core.str() << " unknowns=" << d.unknowns << " rank=" << d.rank << '\n';
  for (std::size_t i = 0; i < d.vectors.size(); ++i) {
    const auto& vals = d.components[i].values();
    auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
    std::set<Rational> distinct(vals.begin(), vals.end());
    out << "component " << d.vectors[i].str() << " min=" << to_string(*lo) << " max=" << to_string(*hi)
        << " distinct=" << distinct.size() << '\n';
  }
  out << "residual_check=" << yes_no(d.residual_check && checked) << " integral=" << yes_no(d.integral) << '\n';
  return d.residual_check && checked ? 0 : 1;
}

int cmd_lines(const Options& o, std::ostream& out) {
  if (!o.poly.empty()) {
    auto f = parse_polynomial(load(o.poly));
    auto lf = line_factorization(f);
    out << "monomial=" << lf.monomial.str() << '\n';
    for (const auto& fac : lf.factors) out << "direction=" << fac.direction.str() << " phi=" << fac.phi << '\n';
    out << "remainder=" << lf.remainder << '\n';
    out << "line_directions=" << lf.line_direction_count() << '\n';
    out << "class=" << class_name(periodicity_class(std::nullopt, lf).cls) << '\n';
    if (!o.also.empty()) {
      std::vector<LineFactorization> all{lf};
      for (const auto& g : o.also) all.push_back(line_factorization(parse_polynomial(load(g), f.dim())));
      out << "common_directions=" << join(common_line_directions(all)) << '\n';
    }
    return lf.reconstruct() == f ? 0 : 1;
  }
  if (o.config.empty() || o.direction.empty() || o.shape.empty())
    throw CLI::ValidationError("lines needs --poly, or --config with --shape and --direction");
  auto c = load_config(o.config);
  auto rep = line_pattern_census(c, parse_window(o.shape, c.dim()), parse_vector(o.direction),
                                 parse_window(o.sample, c.dim()));
  out << "anchor_lines=" << rep.anchor_lines << " distinct_sets=" << rep.distinct_sets
      << " disjoint_lines=" << rep.disjoint_lines << '\n';
  if (o.per_line)
    for (const auto& l : rep.lines)
      out << "line " << l.id.str() << " anchors=" << l.anchors << " distinct=" << l.distinct << '\n';
  return 0;
}

int cmd_nivat_scan(const Options& o, std::ostream& out) {
  auto c = load_config(o.config);
  auto rows = nivat_scan(c, parse_range(o.M), parse_range(o.N), parse_window(o.sample, c.dim()));
  out << scan_csv(rows);
  return 0;
}

std::int64_t single(const std::string& text, const char* flag) {
  auto [a, b] = parse_range(text);
  if (a != b) throw CLI::ValidationError(std::string(flag) + " must be a single integer here");
  return a;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  std::int64_t M = single(o.M, "--M"), N = single(o.N, "--N");
  if (!o.poly.empty()) {
    auto f = parse_polynomial(load(o.poly), 2);
    auto rep = corollary_report(f, line_factorization(f), M, N);
    out << "M=" << rep.M << " N=" << rep.N << " m=" << rep.m << " n=" << rep.n
        << " directions=" << join(rep.directions) << '\n';
    for (const auto& e : rep.entries) {
      out << e.label;
      if (!e.pair.empty()) out << ' ' << join(e.pair);
      if (e.applicable) {
        out << " value=" << to_string(e.value);
        if (e.alpha) out << " alpha=" << to_string(*e.alpha);
      } else {
        out << " not-applicable";
      }
      if (e.conditional) out << " conditional";
      if (!e.note.empty()) out << " note=\"" << e.note << '"';
      out << '\n';
    }
    out << "best=" << to_string(rep.best) << '\n';
    return 0;
  }
  if (!o.v1.empty() || !o.v2.empty()) {
    auto v1 = parse_vector(o.v1), v2 = parse_vector(o.v2);
    auto value = bound_two_directions(v1, v2, M, N);
    auto [bm, bn] = two_direction_block(v1, v2, M, N);
    out << "bound=" << to_string(value) << " block=" << bm << 'x' << bn << '\n';
    return 0;
  }
  if (!o.box.empty()) {
    auto b = parse_vector(o.box);
    if (b.dim() != 2) throw Error(Errc::DimensionMismatch, "--box takes (m,n)");
    out << "disjoint_lines=" << to_string(bound_disjoint_lines(b[0], b[1], M, N)) << '\n';
    if (o.area) out << "line_size>" << to_string(bound_line_size(b[0], b[1], M, N, o.area)) << '\n';
    return 0;
  }
  throw CLI::ValidationError("bounds needs --poly, --v1/--v2 or --box");
}

int cmd_tile_verify(const Options& o, std::ostream& out) {
  auto d = parse_tile(load(o.tile));
  auto c = parse_cotiler(load(o.cotiler));
  auto chk = verify_cotiler(d, c);
  out << "verdict=" << cover_name(chk.verdict);
  if (chk.witness) out << " witness=" << chk.witness->str();
  out << '\n';
  bool ok = chk.valid();
  if (o.prime_check) {
    auto rep = prime_periodicity_check(d, c, parse_window(o.window.empty() ? "60" : o.window, d.dim()));
    for (const auto& p : rep.periods)
      out << "period " << p.vector.str() << ' ' << (p.verified ? "verified" : "fails") << '\n';
    out << "congruence mod " << rep.p << ' ' << (rep.congruence.holds ? "holds" : "fails");
    if (rep.congruence.witness) out << " witness=" << rep.congruence.witness->str();
    out << '\n';
    ok = ok && rep.all_verified();
  }
  return ok ? 0 : 1;
}

int cmd_tile_search(const Options& o, std::ostream& out) {
  auto d = parse_tile(load(o.tile));
  auto c = search_periodic_cotiler(d, o.max_index);
  if (!c) {
    out << "cotiler=none\n";
    return 0;
  }
  out << format_cotiler(*c) << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for low-complexity configurations and their annihilators", "nivatk"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&, fn] { action = [&, fn] { return fn(o, out); }; });
    return s;
  };
  auto config = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--config", o.config, "configuration file or inline text");
    if (required) opt->required();
  };

  auto* s = sub("complexity", "count distinct patterns of a shape", cmd_complexity);
  config(s);
  s->add_option("--shape", o.shape, "shape window, e.g. 2x2 or 0..2")->required();
  s->add_option("--sample", o.sample, "anchor window (default 64: the box [0,64)^d)");

  s = sub("annihilate", "annihilator from the pattern nullspace", cmd_annihilate);
  config(s);
  s->add_option("--shape", o.shape, "shape window")->required();
  s->add_option("--sample", o.sample, "anchor window");
  s->add_option("--verify", o.verify, "window to re-verify on (default: the sample)");

  s = sub("verify", "check that a polynomial annihilates a configuration", cmd_verify);
  config(s);
  s->add_option("--poly", o.poly, "polynomial file or inline text")->required();
  s->add_option("--window", o.window, "window (default 64)");
  s->add_option("--primes", o.primes, "comma-separated primes for the f(X^p) checks");

  s = sub("search", "shortest product of differences annihilating a configuration", cmd_search);
  config(s);
  s->add_option("--max-factors", o.max_factors, "at most this many factors")->check(CLI::PositiveNumber);
  s->add_option("--bound", o.bound, "coordinate bound for the vectors")->check(CLI::PositiveNumber);
  s->add_option("--window", o.window, "verification box (default -12..12)");

  s = sub("decompose", "split a configuration into periodic components on a core", cmd_decompose);
  config(s);
  s->add_option("--vectors", o.vectors, "periods, e.g. \"(1,0)(0,1)(1,-1)\"")->required();
  s->add_option("--core", o.core, "core box")->required();
  s->add_option("--halo", o.halo, "box on which the product is checked (default: core padded)");

  s = sub("lines", "line factorization of a polynomial, or a line-of-patterns census", cmd_lines);
  config(s, false);
  s->add_option("--poly", o.poly, "polynomial to factor");
  s->add_option("--also", o.also, "further annihilators; prints the directions common to all");
  s->add_option("--shape", o.shape, "census shape");
  s->add_option("--direction", o.direction, "census direction");
  s->add_option("--sample", o.sample, "census anchors");
  s->add_flag("--per-line", o.per_line, "print every line of anchors");

  s = sub("nivat-scan", "CSV of sampled P_c(M,N) against MN", cmd_nivat_scan);
  config(s);
  s->add_option("--M", o.M, "range a..b");
  s->add_option("--N", o.N, "range a..b");
  s->add_option("--sample", o.sample, "anchor window");

  s = sub("bounds", "complexity lower bounds for two-dimensional annihilators", cmd_bounds);
  s->add_option("--poly", o.poly, "annihilator: report every applicable bound");
  s->add_option("--v1", o.v1, "first direction");
  s->add_option("--v2", o.v2, "second direction");
  s->add_option("--box", o.box, "(m,n) for the disjoint-lines bound");
  s->add_option("--area", o.area, "parallelogram area for the line-size bound");
  s->add_option("--M", o.M, "block width")->required();
  s->add_option("--N", o.N, "block height")->required();

  s = sub("tile-verify", "check that a periodic set co-tiles a tile", cmd_tile_verify);
  s->add_option("--tile", o.tile, "tile file or inline text")->required();
  s->add_option("--cotiler", o.cotiler, "co-tiler file or inline text")->required();
  s->add_flag("--prime-check", o.prime_check, "also check the prime-size periods and congruence");
  s->add_option("--window", o.window, "window for the congruence (default 60)");

  s = sub("tile-search", "first periodic co-tiler in canonical lattice order", cmd_tile_search);
  s->add_option("--tile", o.tile, "tile file or inline text")->required();
  s->add_option("--max-index", o.max_index, "largest lattice index to try")->check(CLI::PositiveNumber);

  auto* ex = app.add_subcommand("examples", "run the worked examples");
  ex->callback([&] { action = [&] { return run_examples(out) ? 1 : 0; }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action();
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::SyntaxError || e.code() == Errc::NonSquarefreeRadicand ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace nivatk::cli
