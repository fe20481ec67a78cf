#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mipoly {

/// Exact rational number. Values built with the two-integer constructor must be
/// canonicalized before comparison; parse_rational and arithmetic do this.
using Rational = mpq_class;

/// Parses "p", "p/q" or a finite decimal such as "-2.75".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

inline Rational half() { return Rational(1, 2); }

/// Greatest integer strictly less than `a`.
mpz_class floor_strict(const Rational& a);

bool is_integer(const Rational& q);

/// q^k for integer k (k may be negative when q != 0).
Rational pow(const Rational& q, long k);

}  // namespace mipoly
