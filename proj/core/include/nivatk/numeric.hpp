#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "nivatk/error.hpp"

namespace nivatk {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

// Floor division for signed 64-bit values (rounds toward negative infinity).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "int64 addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "int64 subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "int64 multiplication");
  return r;
}

inline Integer to_integer(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(Errc::Overflow, "integer " + v.get_str() + " exceeds int64");
  return static_cast<std::int64_t>(v.get_si());
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Integer isqrt(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline bool is_squarefree(const Integer& n) {
  if (n <= 0) return n == 0;
  Integer m = n;
  for (Integer d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      m /= d;
      if (m % d == 0) return false;
    }
  }
  return true;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace nivatk
