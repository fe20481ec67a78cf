#pragma once

#include <mipoly/rational.hpp>

#include <boost/multiprecision/mpfr.hpp>

namespace mipoly {

/// Variable-precision binary float; precision follows the thread default.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;

/// Sets the default precision (decimal digits) for new Reals in this scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rational& q);
Real pi_real();

/// Decimal digits from $MIPOLY_DIGITS, else kDefaultDigits.
unsigned default_digits_from_env();

}  // namespace mipoly
