#include "nivatk/quadratic_real.hpp"

namespace nivatk {
namespace {

// Sign of x + y*sqrt(n).
int sign_of_surd(const Integer& x, const Integer& y, const Integer& n) {
  int sx = sgn(x), sy = (n == 0) ? 0 : sgn(y);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Opposite signs: compare magnitudes x^2 vs y^2 n.
  Integer lhs = x * x, rhs = y * y * n;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

}  // namespace

Integer floor_of_surd(const Integer& x, const Integer& y, const Integer& n) {
  if (y == 0 || n == 0) return x;
  Integer t = y * y * n;
  Integer r = isqrt(t);
  if (y > 0) return x + r;
  // y*sqrt(n) = -sqrt(t): floor is -ceil(sqrt(t)).
  return x - (r * r == t ? r : r + 1);
}

QuadraticReal::QuadraticReal(Integer a, Integer b, Integer n, Integer q)
    : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)), q_(std::move(q)) {
  if (q_ == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  if (n_ < 0) throw Error(Errc::InvalidArgument, "negative radicand");
  if (!is_squarefree(n_)) throw Error(Errc::NonSquarefreeRadicand, n_.get_str());
  canonicalize();
}

QuadraticReal QuadraticReal::rational(const Rational& r) { return {r.get_num(), 0, 0, r.get_den()}; }

QuadraticReal QuadraticReal::sqrt(const Integer& n) { return {0, 1, n, 1}; }

void QuadraticReal::canonicalize() {
  if (q_ < 0) {
    a_ = -a_;
    b_ = -b_;
    q_ = -q_;
  }
  if (n_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0 || n_ <= 1) {
    b_ = 0;
    n_ = 0;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q_.get_mpz_t());
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    q_ /= g;
  }
}

Integer QuadraticReal::floor_times(const Integer& m) const {
  Integer f = floor_of_surd(m * a_, m * b_, n_);
  Integer out;
  // floor(floor(y) / q) == floor(y / q) for positive integer q.
  mpz_fdiv_q(out.get_mpz_t(), f.get_mpz_t(), q_.get_mpz_t());
  return out;
}

int QuadraticReal::compare(const Rational& r) const {
  // (a + b sqrt n)/q - num/den  ~  (a den - num q) + (b den) sqrt n
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  return sign_of_surd(a_ * den - num * q_, b_ * den, n_);
}

std::string QuadraticReal::str() const {
  if (b_ == 0) {
    if (q_ == 1) return a_.get_str();
    return a_.get_str() + "/" + q_.get_str();
  }
  if (a_ == 0 && b_ == 1 && q_ == 1) return "sqrt(" + n_.get_str() + ")";
  return "quad(" + a_.get_str() + "," + b_.get_str() + "," + n_.get_str() + "," + q_.get_str() + ")";
}

}  // namespace nivatk
