#pragma once

#include <mipoly/rational.hpp>
#include <mipoly/real.hpp>

#include <json.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace mipoly {

/// Dense univariate polynomial in eta over the rationals.
///
/// Coefficients are stored lowest degree first and trimmed so the leading
/// coefficient is nonzero; the zero polynomial has no coefficients and
/// degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  /// The identity polynomial eta.
  static Poly eta();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of eta^k; zero outside [0, degree].
  Rational coeff(int k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  Real operator()(const Real& x) const;
  double eval_double(double x) const;

  Poly derivative() const;
  /// p(eta) -> p(-eta).
  Poly reflected() const;
  /// p / leading(p); the zero polynomial maps to itself.
  Poly monic() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "-3/2 - eta".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, unsigned k);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws InvalidInput when `divisor` is zero.
DivMod divmod(const Poly& dividend, const Poly& divisor);

/// Division that must be exact; throws NotInSpan with `what` on a nonzero
/// remainder.
Poly exact_div(const Poly& dividend, const Poly& divisor, const std::string& what = "exact division");

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// If a = s * b for some nonzero rational s, returns s.
std::optional<Rational> proportionality(const Poly& a, const Poly& b);

/// Number of distinct real roots of `p` in the open interval (lo, hi), counted
/// exactly with a Sturm sequence. A missing `lo` means -infinity, a missing
/// `hi` means +infinity. Throws InvalidInput for the zero polynomial.
int sturm_count(const Poly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

/// JSON form: array of ["numerator","denominator"] decimal-string pairs,
/// index = degree.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace mipoly

namespace mipoly {

/// Inverse of `a` modulo `m` in Q[eta]/(m), if gcd(a, m) = 1.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& m);

/// Multiplicity of the rational root r in p (0 if not a root); p nonzero.
int root_multiplicity(const Poly& p, const Rational& r);

}  // namespace mipoly
