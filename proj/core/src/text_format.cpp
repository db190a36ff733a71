#include "nivatk/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nivatk {
namespace {

std::string normalize_minus(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      s.push_back('-');
      i += 2;
    } else {
      s.push_back(text[i]);
    }
  }
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(normalize_minus(text)) {}

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept(std::string_view token) {
    skip();
    if (s_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (b == pos_) fail("expected a keyword");
    return s_.substr(b, pos_ - b);
  }

  bool accept_word(std::string_view w) {
    skip();
    std::size_t save = pos_;
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    pos_ += w.size();
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      pos_ = save;
      return false;
    }
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Integer integer() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    if (!at_digit()) fail("expected an integer");
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Integer v(s_.substr(b, pos_ - b));
    return neg ? Integer(-v) : v;
  }

  std::int64_t small() {
    Integer v = integer();
    if (!v.fits_slong_p()) fail("integer out of range");
    return v.get_si();
  }

  Rational rational() {
    Integer num = integer();
    if (!accept('/')) return Rational(num);
    Integer den = integer();
    if (den == 0) fail("zero denominator");
    return make_rational(num, den);
  }

  IntVector tuple() {
    expect('(');
    std::vector<std::int64_t> c{small()};
    while (accept(',')) c.push_back(small());
    expect(')');
    if (c.size() > IntVector::kMaxDim) fail("at most " + std::to_string(IntVector::kMaxDim) + " coordinates");
    return IntVector(std::span<const std::int64_t>(c));
  }

  std::vector<IntVector> tuple_list() {
    expect('{');
    std::vector<IntVector> out;
    while (!accept('}')) {
      if (peek() != '(') fail("expected a tuple or '}'");
      out.push_back(tuple());
      accept(',');
    }
    return out;
  }

  std::string rest_of_line() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
    std::string out = s_.substr(b, pos_ - b);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing text");
  }

  const std::string& text() const { return s_; }
  std::size_t pos() const { return pos_; }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

QuadraticReal parse_real(Parser& p) {
  if (p.accept_word("sqrt")) {
    p.expect('(');
    Integer n = p.integer();
    p.expect(')');
    return QuadraticReal::sqrt(n);
  }
  if (p.accept_word("quad")) {
    p.expect('(');
    Integer a = p.integer();
    p.expect(',');
    Integer b = p.integer();
    p.expect(',');
    Integer n = p.integer();
    p.expect(',');
    Integer q = p.integer();
    p.expect(')');
    if (q == 0) p.fail("zero denominator");
    return QuadraticReal(a, b, n, q);
  }
  return QuadraticReal::rational(p.rational());
}

Configuration parse_desc(Parser& p) {
  std::string kind = p.word();
  if (kind == "periodic") {
    p.expect_word("lattice");
    auto gens = p.tuple_list();
    if (gens.empty()) p.fail("lattice needs generators");
    p.expect_word("values");
    p.expect('{');
    std::map<IntVector, Integer> values;
    while (!p.accept('}')) {
      IntVector at = p.tuple();
      p.expect(':');
      values[at] = p.integer();
      p.accept(',');
    }
    return Configuration::periodic(Lattice(gens), values);
  }
  if (kind == "coset") {
    p.expect_word("offset");
    IntVector off = p.tuple();
    p.expect_word("gens");
    auto gens = p.tuple_list();
    p.expect_word("value");
    Integer v = p.integer();
    return Configuration::coset(off, gens.empty() ? Lattice::spanned_by({}, off.dim()) : Lattice(gens), v);
  }
  if (kind == "mechanical") {
    p.expect_word("weights");
    IntVector w = p.tuple();
    p.expect_word("alpha");
    return Configuration::mechanical(w, parse_real(p));
  }
  if (kind == "finite") {
    std::size_t dim = 0;
    if (p.accept_word("dim")) {
      auto d = p.small();
      if (d < 1 || d > static_cast<std::int64_t>(IntVector::kMaxDim)) p.fail("bad dimension");
      dim = static_cast<std::size_t>(d);
    }
    p.expect('{');
    std::map<IntVector, Integer> values;
    while (!p.accept('}')) {
      IntVector at = p.tuple();
      p.expect(':');
      values[at] = p.integer();
      p.accept(',');
      if (dim == 0) dim = at.dim();
    }
    if (dim == 0) p.fail("empty finite configuration needs 'dim'");
    return Configuration::finite(dim, std::move(values));
  }
  if (kind == "sum") {
    p.expect('{');
    std::vector<Configuration::Term> terms;
    while (!p.accept('}')) {
      Integer coef = 1;
      if (p.accept('-'))
        coef = -1;
      else
        p.accept('+');
      if (p.at_digit()) {
        coef *= p.integer();
        p.expect('*');
      }
      terms.push_back({coef, parse_desc(p)});
    }
    if (terms.empty()) p.fail("empty sum");
    return Configuration::sum(std::move(terms));
  }
  if (kind == "valuemap") {
    p.expect_word("default");
    Integer fallback = p.integer();
    p.expect_word("map");
    p.expect('{');
    std::map<Integer, Integer> map;
    while (!p.accept('}')) {
      Integer from = p.integer();
      p.expect(':');
      map[from] = p.integer();
      p.accept(',');
    }
    p.expect('{');
    Configuration inner = parse_desc(p);
    p.expect('}');
    return Configuration::value_map(inner, std::move(map), fallback);
  }
  if (kind == "shift") {
    p.expect_word("offset");
    IntVector off = p.tuple();
    p.expect('{');
    Configuration inner = parse_desc(p);
    p.expect('}');
    return Configuration::shift(inner, off);
  }
  p.fail("unknown configuration kind '" + kind + "'");
}

std::string join_tuples(const std::vector<IntVector>& vs) {
  std::string s;
  for (const auto& v : vs) s += v.str();
  return s;
}

void format_desc(std::ostringstream& os, const Configuration& c);

struct DescPrinter {
  std::ostringstream& os;

  void operator()(const PeriodicNode& n) const {
    os << "periodic lattice{" << join_tuples(n.lattice.hnf_columns()) << "} values{";
    bool first = true;
    for (const auto& r : n.lattice.fundamental_box().points()) {
      os << (first ? "" : " ") << r.str() << ':' << n.values[n.lattice.residue_index(r)];
      first = false;
    }
    os << '}';
  }
  void operator()(const CosetNode& n) const {
    os << "coset offset" << n.offset.str() << " gens{" << join_tuples(n.lattice.generators()) << "} value "
       << n.value;
  }
  void operator()(const MechanicalNode& n) const {
    os << "mechanical weights" << n.weights.str() << " alpha " << n.alpha.str();
  }
  void operator()(const FiniteNode& n) const {
    if (n.values.empty()) {
      os << "finite dim " << n.values.size() << " {}";
      return;
    }
    os << "finite{";
    bool first = true;
    for (const auto& [at, v] : n.values) {
      os << (first ? "" : " ") << at.str() << ':' << v;
      first = false;
    }
    os << '}';
  }
  void operator()(const SumNode& n) const {
    os << "sum {";
    for (const auto& t : n.terms) {
      os << ' ' << (t.coefficient < 0 ? '-' : '+');
      Integer a = abs(t.coefficient);
      if (a != 1) os << a << '*';
      format_desc(os, t.config);
    }
    os << " }";
  }
  void operator()(const ValueMapNode& n) const {
    os << "valuemap default " << n.fallback << " map{";
    bool first = true;
    for (const auto& [a, b] : n.map) {
      os << (first ? "" : " ") << a << ':' << b;
      first = false;
    }
    os << "} { ";
    format_desc(os, n.inner);
    os << " }";
  }
  void operator()(const ShiftNode& n) const {
    os << "shift offset" << n.offset.str() << " { ";
    format_desc(os, n.inner);
    os << " }";
  }
};

void format_desc(std::ostringstream& os, const Configuration& c) {
  if (const auto* f = std::get_if<FiniteNode>(&c.node().v); f && f->values.empty()) {
    os << "finite dim " << c.dim() << " {}";
    return;
  }
  std::visit(DescPrinter{os}, c.node().v);
}

// Polynomial expressions.
class PolyParser {
 public:
  PolyParser(Parser& p, std::size_t dim) : p_(p), dim_(dim) {}

  LaurentPolynomial expr() {
    LaurentPolynomial acc(dim_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (p_.accept('-'))
        sign = -1;
      else if (!p_.accept('+') && !first)
        break;
      LaurentPolynomial t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }

 private:
  bool starts_factor() {
    char c = p_.peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' || c == 'z' || c == 'X';
  }

  LaurentPolynomial term() {
    LaurentPolynomial t = factor();
    while (true) {
      if (p_.accept('*')) {
        t *= factor();
      } else if (starts_factor()) {
        t *= factor();
      } else {
        break;
      }
    }
    return t;
  }

  LaurentPolynomial factor() {
    LaurentPolynomial b = base();
    if (!p_.accept('^')) return b;
    std::int64_t e = p_.small();
    if (e >= 0) return pow(b, static_cast<unsigned>(e));
    if (!b.is_monomial()) p_.fail("negative power of a non-monomial");
    const auto& [v, a] = *b.terms().begin();
    return pow(LaurentPolynomial::monomial(-v, 1 / a), static_cast<unsigned>(-e));
  }

  LaurentPolynomial variable(std::size_t axis) {
    if (axis >= dim_) p_.fail("variable beyond dimension " + std::to_string(dim_));
    return LaurentPolynomial::monomial(IntVector::unit(dim_, axis));
  }

  LaurentPolynomial base() {
    if (p_.accept('(')) {
      LaurentPolynomial e = expr();
      p_.expect(')');
      return e;
    }
    if (p_.at_digit()) return LaurentPolynomial::constant(dim_, p_.rational());
    if (p_.accept('x')) return variable(0);
    if (p_.accept('y')) return variable(1);
    if (p_.accept('z')) return variable(2);
    if (p_.accept('X')) {
      p_.expect('^');
      IntVector e = p_.tuple();
      if (e.dim() != dim_)
        throw Error(Errc::DimensionMismatch, "exponent " + e.str() + " in dimension " + std::to_string(dim_));
      return LaurentPolynomial::monomial(e);
    }
    p_.fail("expected a term");
  }

  Parser& p_;
  std::size_t dim_;
};

std::size_t infer_poly_dim(const std::string& s) {
  auto x = s.find("X^(");
  if (x != std::string::npos) {
    auto close = s.find(')', x);
    return static_cast<std::size_t>(std::count(s.begin() + static_cast<std::ptrdiff_t>(x),
                                               s.begin() + static_cast<std::ptrdiff_t>(close), ',')) +
           1;
  }
  if (s.find('z') != std::string::npos) return 3;
  return 2;
}

std::string monomial_text(const IntVector& e) {
  std::string s;
  if (e.dim() > 3) return e.is_zero() ? "" : "X^" + e.str();
  static const char vars[] = {'x', 'y', 'z'};
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

bool graded_lex_greater(const IntVector& a, const IntVector& b) {
  std::int64_t da = 0, db = 0;
  for (auto x : a.coords()) da += x;
  for (auto x : b.coords()) db += x;
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

ConfigFile parse_config_file(std::string_view text) {
  Parser p(text);
  ConfigFile f;
  if (p.accept_word("name")) f.name = p.rest_of_line();
  f.config = parse_desc(p);
  p.finish();
  return f;
}

Configuration parse_config(std::string_view text) { return parse_config_file(text).config; }

std::string format_config(const Configuration& c) {
  std::ostringstream os;
  format_desc(os, c);
  return os.str();
}

std::string format_config_file(const ConfigFile& f) {
  std::string out;
  if (!f.name.empty()) out += "name " + f.name + "\n";
  return out + format_config(f.config) + "\n";
}

LaurentPolynomial parse_polynomial(std::string_view text, std::size_t dim) {
  Parser p(text);
  if (dim == 0) dim = infer_poly_dim(p.text());
  if (dim > IntVector::kMaxDim) throw Error(Errc::DimensionMismatch, "too many variables");
  PolyParser pp(p, dim);
  LaurentPolynomial f = pp.expr();
  p.finish();
  return f;
}

std::string format_polynomial(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<IntVector, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_lex_greater(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, a] : terms) {
    bool neg = a < 0;
    Rational mag = neg ? Rational(-a) : a;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = monomial_text(e);
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
    first = false;
  }
  return out;
}

std::string LaurentPolynomial::str() const { return format_polynomial(*this); }

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f) { return os << f.str(); }

ClusterTile parse_tile(std::string_view text) {
  Parser p(text);
  p.expect_word("tile");
  auto cells = p.tuple_list();
  p.finish();
  if (cells.empty()) throw Error(Errc::EmptyShape, "tile has no cells");
  return ClusterTile(std::move(cells));
}

std::string format_tile(const ClusterTile& d) {
  std::string s = "tile {";
  for (const auto& c : d.cells()) s += " " + c.str();
  return s + " }";
}

PeriodicCoTiler parse_cotiler(std::string_view text) {
  Parser p(text);
  p.expect_word("cotiler");
  p.expect_word("lattice");
  auto gens = p.tuple_list();
  p.expect_word("residues");
  auto res = p.tuple_list();
  p.finish();
  if (gens.empty()) p.fail("lattice needs generators");
  return PeriodicCoTiler{Lattice(gens), res};
}

std::string format_cotiler(const PeriodicCoTiler& c) {
  std::string s = "cotiler lattice{" + join_tuples(c.lattice.hnf_columns()) + "} residues{";
  for (std::size_t i = 0; i < c.residues.size(); ++i) s += (i ? " " : "") + c.residues[i].str();
  return s + "}";
}

IntVector parse_vector(std::string_view text) {
  Parser p(text);
  IntVector v = p.tuple();
  p.finish();
  return v;
}

std::vector<IntVector> parse_vector_list(std::string_view text) {
  Parser p(text);
  std::vector<IntVector> out;
  bool braced = p.accept('{');
  while (!p.at_end() && !(braced && p.peek() == '}')) {
    out.push_back(p.tuple());
    p.accept(',');
  }
  if (braced) p.expect('}');
  p.finish();
  return out;
}

Window parse_window(std::string_view text, std::size_t dim) {
  Parser p(text);
  if (p.peek() == '{') {
    auto pts = p.tuple_list();
    p.finish();
    for (const auto& v : pts)
      if (v.dim() != dim) throw Error(Errc::DimensionMismatch, "window point " + v.str());
    return Window::set(std::move(pts));
  }
  if (p.peek() == '(') {
    IntVector lo = p.tuple();
    if (!p.accept("..")) p.fail("expected '..'");
    IntVector hi = p.tuple();
    p.finish();
    if (lo.dim() != dim || hi.dim() != dim) throw Error(Errc::DimensionMismatch, "window corners");
    return Window::box(lo, hi);
  }
  std::int64_t first = p.small();
  if (p.accept("..")) {
    std::int64_t last = p.small();
    p.finish();
    return Window::box(IntVector::filled(dim, first), IntVector::filled(dim, last));
  }
  std::vector<std::int64_t> ext{first};
  while (p.accept('x')) ext.push_back(p.small());
  p.finish();
  if (ext.size() == 1) ext.assign(dim, first);
  if (ext.size() != dim)
    throw Error(Errc::DimensionMismatch, std::to_string(ext.size()) + " extents for dimension " + std::to_string(dim));
  for (auto e : ext)
    if (e < 0) throw Error(Errc::InvalidArgument, "negative extent");
  return Window::sized(std::span<const std::int64_t>(ext));
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  Parser p(text);
  std::int64_t a = p.small();
  std::int64_t b = a;
  if (p.accept("..")) b = p.small();
  p.finish();
  if (a > b) throw Error(Errc::InvalidArgument, "empty range");
  return {a, b};
}

}  // namespace nivatk
