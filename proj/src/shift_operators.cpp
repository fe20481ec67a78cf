#include <mipoly/error.hpp>
#include <mipoly/shift_operators.hpp>

namespace mipoly {

Rational forward_factor(int n, const ParamSet& lambda) {
  if (!lambda.is_jacobi()) return -2;
  return -2 * (Rational(n) + lambda.g + lambda.h);
}

Rational backward_factor(int n, const ParamSet&) { return Rational(-2 * n); }

ShiftOperators::ShiftOperators(MultiIndexedFamily fam)
    : fam_(std::move(fam)),
      raised_(build_family(fam_.params + delta(fam_.params.family), fam_.deletion, fam_.options)),
      c1_(hypergeom_coeffs(fam_.shifted).c1),
      c1_lower_(hypergeom_coeffs(fam_.shifted - delta(fam_.params.family)).c1),
      c2_(hypergeom_coeffs(fam_.shifted).c2),
      dxi_(fam_.xi.derivative()),
      d2xi_(dxi_.derivative()),
      dxi_raised_(raised_.xi.derivative()) {}

Poly ShiftOperators::forward(const Poly& p) const {
  const Poly num = raised_.xi * p.derivative() - dxi_raised_ * p;
  return fam_.c_F * exact_div(num, fam_.xi, "forward shift: not in family span");
}

Poly ShiftOperators::backward(const Poly& p) const {
  const Poly num = c2_ * fam_.xi * p.derivative() + c1_ * fam_.xi * p - c2_ * dxi_ * p;
  return (Rational(-4) / fam_.c_F) * exact_div(num, raised_.xi, "backward shift: not in family span");
}

Poly ShiftOperators::second_order(const Poly& p) const {
  const Poly dp = p.derivative();
  const Poly num = c2_ * fam_.xi * dp.derivative() + (c1_ * fam_.xi - Rational(2) * (c2_ * dxi_)) * dp +
                   (c2_ * d2xi_ - c1_lower_ * dxi_) * p;
  return Rational(-4) * exact_div(num, fam_.xi, "second-order operator: not in family span");
}

FuchsReport exponents_at_xi_zeros(const MultiIndexedFamily& fam) {
  FuchsReport report;
  const auto hc = hypergeom_coeffs(fam.shifted);
  const Poly c1 = hc.c1;
  const Poly c2 = hc.c2;
  const Poly c1_lower = hypergeom_coeffs(fam.shifted - delta(fam.params.family)).c1;
  const Poly& xi = fam.xi;
  const Poly dxi = xi.derivative();
  const Poly d2xi = dxi.derivative();
  const Rational quarter_e = energy(1, fam.params) / 4;

  // (H~ - E) p = 0  <=>  A2 p'' + A1 p' + A0 p = 0.
  const Poly A2 = c2 * xi;
  const Poly A1 = c1 * xi - Rational(2) * (c2 * dxi);
  const Poly A0 = c2 * d2xi - c1_lower * dxi + quarter_e * xi;

  if (xi.degree() >= 1) {
    const Poly common = gcd(xi, dxi);
    if (common.degree() >= 1) {
      report.xi_squarefree = false;
      throw IdentityFailure("exponent claim violated: Xi_D has a repeated zero (gcd with Xi' = " + common.str() + ")");
    }
    if (gcd(xi, c2).degree() >= 1)
      throw IdentityFailure("exponent claim violated: Xi_D shares a zero with c2");
    report.distinct_xi_zeros = xi.degree();

    // Residue of A1/A2 at every zero at once: A1 * (c2 Xi')^{-1} mod Xi.
    const auto inv = inverse_mod(c2 * dxi, xi);
    if (!inv) throw IdentityFailure("exponent claim violated: c2 Xi' not invertible modulo Xi");
    const Poly residue = divmod(A1 * *inv, xi).remainder;
    if (residue.degree() > 0)
      throw IdentityFailure("exponent claim violated: residue of the first-order coefficient varies over the zeros");
    const Rational p0 = residue.coeff(0);
    if (!is_integer(p0)) throw IdentityFailure("exponent claim violated: non-integral residue " + to_string(p0));
    // A0/A2 has at most a simple pole at a simple zero of Xi, so q0 = 0 and the
    // indicial equation is rho(rho - 1) + p0 rho = 0.
    const int second = 1 - static_cast<int>(p0.get_num().get_si());
    report.exponents.assign(static_cast<std::size_t>(report.distinct_xi_zeros), {0, second});
    report.regular_singular_points += report.distinct_xi_zeros;
  }

  // Remaining finite singular points: the rational zeros of c2.
  const std::vector<Rational> c2_roots =
      fam.params.is_jacobi() ? std::vector<Rational>{-1, 1} : std::vector<Rational>{0};
  for (const auto& r : c2_roots) {
    const int m2 = root_multiplicity(A2, r);
    const int pole_p = m2 - (A1.is_zero() ? m2 : root_multiplicity(A1, r));
    const int pole_q = m2 - (A0.is_zero() ? m2 : root_multiplicity(A0, r));
    if (pole_p <= 0 && pole_q <= 0) continue;
    if (pole_p <= 1 && pole_q <= 2)
      ++report.regular_singular_points;
    else
      report.notes.push_back("irregular singular point at eta = " + to_string(r));
  }

  // Infinity: regular singular iff eta*P and eta^2*Q stay bounded.
  const int dp = A1.degree() - A2.degree();
  const int dq = A0.is_zero() ? -1000 : A0.degree() - A2.degree();
  report.infinity_regular = dp <= -1 && dq <= -2;
  if (report.infinity_regular)
    ++report.regular_singular_points;
  else
    report.notes.push_back("irregular singular point at infinity (confluent case)");
  return report;
}

}  // namespace mipoly
