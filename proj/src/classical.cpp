#include <mipoly/classical.hpp>
#include <mipoly/error.hpp>

#include <boost/multiprecision/mpfr.hpp>

namespace mipoly {

namespace {

// Generalized binomial coefficient C(x, m) for rational x.
Rational binomial(const Rational& x, int m) {
  Rational r(1);
  for (int i = 0; i < m; ++i) r *= (x - i) / Rational(i + 1);
  return r;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::string to_string(Family f) { return f == Family::L ? "L" : "J"; }

std::string ParamSet::str() const {
  if (is_jacobi()) return "J(g=" + to_string(g) + ", h=" + to_string(h) + ")";
  return "L(g=" + to_string(g) + ")";
}

bool base_range_ok(const ParamSet& p) {
  if (p.g <= half()) return false;
  return !p.is_jacobi() || p.h > half();
}

ShiftVector delta(Family) { return {1, 1}; }
ShiftVector delta_I(Family f) { return f == Family::L ? ShiftVector{-1, 0} : ShiftVector{-1, 1}; }
ShiftVector delta_II(Family f) { return f == Family::L ? ShiftVector{1, 0} : ShiftVector{1, -1}; }

Rational c_F(Family f) { return f == Family::L ? Rational(2) : Rational(-4); }

Poly laguerre(int n, const Rational& alpha) {
  if (n < 0) throw InvalidInput("polynomial degree must be nonnegative");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational term = binomial(Rational(n) + alpha, n - k) / factorial(k);
    c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? term : Rational(-term);
  }
  return Poly(std::move(c));
}

Poly jacobi(int n, const Rational& alpha, const Rational& beta) {
  if (n < 0) throw InvalidInput("polynomial degree must be nonnegative");
  const Poly minus{Rational(-1, 2), Rational(1, 2)};  // (eta-1)/2
  const Poly plus{Rational(1, 2), Rational(1, 2)};    // (eta+1)/2
  Poly sum;
  for (int s = 0; s <= n; ++s) {
    const Rational c = binomial(Rational(n) + alpha, n - s) * binomial(Rational(n) + beta, s);
    if (c == 0) continue;
    sum += c * (pow(minus, static_cast<unsigned>(s)) * pow(plus, static_cast<unsigned>(n - s)));
  }
  return sum;
}

Poly classical_P(int n, const ParamSet& lambda) {
  if (lambda.is_jacobi()) return jacobi(n, lambda.g - half(), lambda.h - half());
  return laguerre(n, lambda.g - half());
}

Rational energy(int n, const ParamSet& lambda) {
  if (n < 0) throw InvalidInput("energy level must be nonnegative");
  if (lambda.is_jacobi()) return Rational(4 * n) * (Rational(n) + lambda.g + lambda.h);
  return Rational(4 * n);
}

Real norm_constant(int n, const ParamSet& lambda) {
  if (n < 0) throw InvalidInput("norm undefined: negative level");
  using boost::multiprecision::tgamma;
  auto gamma_of = [](const Rational& a) {
    if (a <= 0) throw InvalidInput("norm undefined: nonpositive gamma argument " + to_string(a));
    return tgamma(to_real(a));
  };
  const Real n_fact = to_real(factorial(n));
  if (!lambda.is_jacobi()) return gamma_of(Rational(n) + lambda.g + half()) / (2 * n_fact);
  const Rational g_plus_h = lambda.g + lambda.h;
  const Rational twice_plus = Rational(2 * n) + g_plus_h;
  if (twice_plus <= 0) throw InvalidInput("norm undefined: 2n+g+h nonpositive");
  return gamma_of(Rational(n) + lambda.g + half()) * gamma_of(Rational(n) + lambda.h + half()) /
         (2 * n_fact * to_real(twice_plus) * gamma_of(Rational(n) + g_plus_h));
}

Real weight_density(const Real& eta, const ParamSet& lambda) {
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;
  if (!lambda.is_jacobi()) {
    if (eta <= 0) throw InvalidInput("weight_density: eta outside (0, inf)");
    return exp(-eta) * pow(eta, to_real(lambda.g - half())) / 2;
  }
  if (eta <= -1 || eta >= 1) throw InvalidInput("weight_density: eta outside (-1, 1)");
  const Real one(1);
  return pow(one - eta, to_real(lambda.g - half())) * pow(one + eta, to_real(lambda.h - half())) /
         pow(Real(2), to_real(lambda.g + lambda.h + 1));
}

HypergeomCoeffs hypergeom_coeffs(const ParamSet& lambda) {
  if (!lambda.is_jacobi()) return {Poly{lambda.g + half(), Rational(-1)}, Poly::eta()};
  return {Poly{lambda.h - lambda.g, -(lambda.g + lambda.h + 1)}, Poly{Rational(1), Rational(0), Rational(-1)}};
}

Domain base_domain(Family f) {
  if (f == Family::L) return {Rational(0), std::nullopt};
  return {Rational(-1), Rational(1)};
}

}  // namespace mipoly
