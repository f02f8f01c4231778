#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace adjmono {

// Exponents are fixed-width and checked; every polyhedral coefficient is
// arbitrary-precision, since hull and pivot coefficients can grow far past
// the range of the input exponents.
using Int = std::int64_t;
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// A monomial x^e stored as its exponent vector; entries are >= 0.
using Exponent = std::vector<Int>;

/// Thrown when a computed result contradicts an identity that is guaranteed
/// to hold. Signals a defect in this library, never bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Int checked_add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow in multiplication");
  return r;
}

inline Int to_int64(const Integer& z, const char* what = "value") {
  if (z < std::numeric_limits<Int>::min() || z > std::numeric_limits<Int>::max())
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  return z.convert_to<Int>();
}

inline Integer floor_rational(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);  // always > 0
  Integer quo = num / den;             // truncates toward zero
  if (num < 0 && quo * den != num) --quo;
  return quo;
}

inline Integer ceil_rational(const Rational& q) { return -floor_rational(-q); }

}  // namespace adjmono
