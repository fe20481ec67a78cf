#include <mipoly/classical.hpp>
#include <mipoly/error.hpp>

#include <doctest.h>

using namespace mipoly;

namespace {

double to_d(const Real& r) { return r.convert_to<double>(); }

}  // namespace

TEST_CASE("classical polynomials from explicit sums") {
  CHECK(classical_P(0, ParamSet::laguerre(Rational(7, 3))) == Poly::constant(1));
  CHECK(classical_P(1, ParamSet::laguerre(Rational(3, 2))) == Poly{2, -1});
  CHECK(classical_P(1, ParamSet::jacobi(1, 1)) == Poly{0, Rational(3, 2)});
  // L_2^(a) = (a+1)(a+2)/2 - (a+2) eta + eta^2/2 at a = 1/3.
  const Rational a(1, 3);
  CHECK(laguerre(2, a) == Poly{(a + 1) * (a + 2) / 2, -(a + 2), Rational(1, 2)});
  // P_2^(0,0) is the Legendre polynomial.
  CHECK(jacobi(2, 0, 0) == Poly{Rational(-1, 2), 0, Rational(3, 2)});
}

TEST_CASE("Jacobi parity relation") {
  for (int n = 0; n <= 5; ++n) {
    const Poly p = jacobi(n, Rational(2, 3), Rational(-5, 7));
    const Poly q = jacobi(n, Rational(-5, 7), Rational(2, 3));
    CHECK(p.reflected() == (n % 2 ? Rational(-1) : Rational(1)) * q);
  }
}

TEST_CASE("energies") {
  CHECK(energy(3, ParamSet::laguerre(5)) == 12);
  CHECK(energy(0, ParamSet::laguerre(5)) == 0);
  CHECK(energy(0, ParamSet::jacobi(2, 3)) == 0);
  CHECK(energy(2, ParamSet::jacobi(2, 3)) == 56);
}

TEST_CASE("norm constants") {
  CHECK(to_d(norm_constant(0, ParamSet::laguerre(Rational(1, 2)))) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(to_d(norm_constant(0, ParamSet::laguerre(Rational(3, 2)))) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(to_d(norm_constant(0, ParamSet::jacobi(1, 1))) == doctest::Approx(0.19634954084936207).epsilon(1e-15));
  const Real pi16 = pi_real() / 16;
  CHECK(abs(norm_constant(0, ParamSet::jacobi(1, 1)) - pi16) < Real("1e-45"));
  CHECK_THROWS_WITH_AS(norm_constant(0, ParamSet::laguerre(Rational(-1))), doctest::Contains("norm undefined"),
                       InvalidInput);
}

TEST_CASE("weight densities") {
  CHECK(to_d(weight_density(Real(1), ParamSet::laguerre(Rational(1, 2)))) ==
        doctest::Approx(0.18393972058572117).epsilon(1e-15));
  CHECK(to_d(weight_density(Real(0), ParamSet::jacobi(Rational(1, 2), Rational(1, 2)))) ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK(to_d(weight_density(Real("1e-30"), ParamSet::laguerre(2))) < 1e-40);
  CHECK_THROWS_AS(weight_density(Real(-1), ParamSet::laguerre(2)), InvalidInput);
  CHECK_THROWS_AS(weight_density(Real(1), ParamSet::jacobi(2, 2)), InvalidInput);
}

TEST_CASE("hypergeometric coefficients") {
  const auto l = hypergeom_coeffs(ParamSet::laguerre(1));
  CHECK(l.c1 == Poly{Rational(3, 2), -1});
  CHECK(l.c2 == Poly{0, 1});
  const auto j = hypergeom_coeffs(ParamSet::jacobi(1, 2));
  CHECK(j.c1 == Poly{1, -4});
  CHECK(j.c2 == Poly{1, 0, -1});
  CHECK(hypergeom_coeffs(ParamSet::jacobi(Rational(5, 3), Rational(5, 3))).c1.coeff(0) == 0);
}

TEST_CASE("classical polynomials solve the hypergeometric equation") {
  for (const ParamSet& p : {ParamSet::laguerre(Rational(7, 3)), ParamSet::jacobi(Rational(5, 2), Rational(4, 7))}) {
    const auto hc = hypergeom_coeffs(p);
    for (int n = 0; n <= 6; ++n) {
      const Poly P = classical_P(n, p);
      CHECK(Rational(-4) * (hc.c2 * P.derivative().derivative() + hc.c1 * P.derivative()) == energy(n, p) * P);
    }
  }
}

TEST_CASE("classical forward shift and node counts") {
  const ParamSet l = ParamSet::laguerre(Rational(9, 4));
  const ParamSet j = ParamSet::jacobi(Rational(9, 4), Rational(13, 5));
  for (int n = 1; n <= 6; ++n) {
    CHECK(c_F(Family::L) * classical_P(n, l).derivative() == Rational(-2) * classical_P(n - 1, l + delta(Family::L)));
    CHECK(c_F(Family::J) * classical_P(n, j).derivative() ==
          Rational(-2) * (Rational(n) + j.g + j.h) * classical_P(n - 1, j + delta(Family::J)));
  }
  for (int n = 0; n <= 8; ++n) {
    CHECK(sturm_count(classical_P(n, l), Rational(0), std::nullopt) == n);
    CHECK(sturm_count(classical_P(n, j), Rational(-1), Rational(1)) == n);
  }
}

TEST_CASE("shift vectors and base data") {
  CHECK(delta(Family::L).dg == 1);
  CHECK(delta(Family::J) == ShiftVector{1, 1});
  CHECK(delta_I(Family::J) == ShiftVector{-1, 1});
  CHECK(delta_II(Family::J) == ShiftVector{1, -1});
  CHECK(c_F(Family::L) == 2);
  CHECK(c_F(Family::J) == -4);
  CHECK(ParamSet::jacobi(2, 3) + 2 * delta_I(Family::J) == ParamSet::jacobi(0, 5));
  CHECK(base_range_ok(ParamSet::laguerre(Rational(3, 5))));
  CHECK_FALSE(base_range_ok(ParamSet::jacobi(1, Rational(1, 2))));
}
