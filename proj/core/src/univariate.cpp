#include "nivatk/univariate.hpp"

#include <sstream>

namespace nivatk {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  Rational inv = 1 / lead();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UniPoly UniPoly::without_t_power() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return UniPoly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return UniPoly(std::move(c));
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << to_string(coeffs_[i]);
    if (i) os << "*t^" << i;
    first = false;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const auto& bc = b.coeffs();
  Rational inv = 1 / b.lead();
  for (long i = a.degree() - b.degree(); i >= 0; --i) {
    auto top = static_cast<std::size_t>(i) + bc.size() - 1;
    Rational q = rem[top] * inv;
    quo[static_cast<std::size_t>(i)] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= q * bc[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace nivatk
