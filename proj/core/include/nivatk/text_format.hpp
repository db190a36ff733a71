#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nivatk/configuration.hpp"
#include "nivatk/laurent.hpp"
#include "nivatk/tiling.hpp"
#include "nivatk/window.hpp"

// Text forms. Whitespace is free, `#` starts a comment, and both `-` and the
// Unicode minus sign are accepted.
//
//   periodic lattice{(2,0)(0,2)} values{(0,0):0 (1,0):1 (0,1):1 (1,1):0}
//   coset offset(0,0,3) gens{(0,1,0)} value 1
//   mechanical weights(1,1) alpha sqrt(2)          # also p/q, quad(a,b,n,q)
//   finite{(0,0):5}                                # finite dim 2 {} when empty
//   sum { +desc -desc +3*desc }
//   valuemap default 0 map{2:1} { desc }
//   shift offset(1) { desc }
//
// A configuration file may start with `name <rest of line>`.
// Polynomials: 3*x^2*y - x + 1/2, X^(1,-1) - 1, (x - 1)*(y - 1), x^-1.
// Tiles: tile { (0,0) (1,0) }; co-tilers: cotiler lattice{(3,0)(1,1)} residues{(0,0)}.

namespace nivatk {

struct ConfigFile {
  std::string name;
  Configuration config;
};

ConfigFile parse_config_file(std::string_view text);
Configuration parse_config(std::string_view text);
std::string format_config(const Configuration& c);
std::string format_config_file(const ConfigFile& f);

// dim = 0 infers the dimension: from X^(...) tuples, else 3 if z occurs, else 2.
LaurentPolynomial parse_polynomial(std::string_view text, std::size_t dim = 0);
std::string format_polynomial(const LaurentPolynomial& f);

ClusterTile parse_tile(std::string_view text);
std::string format_tile(const ClusterTile& d);
PeriodicCoTiler parse_cotiler(std::string_view text);
std::string format_cotiler(const PeriodicCoTiler& c);

IntVector parse_vector(std::string_view text);
std::vector<IntVector> parse_vector_list(std::string_view text);

// `12x12`, `(lo)..(hi)`, `a..b` (the cube [a,b]^dim) or `n` (the box [0,n)^dim).
Window parse_window(std::string_view text, std::size_t dim);
// `a..b` or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

}  // namespace nivatk
