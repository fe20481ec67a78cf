#include <mipoly/builder.hpp>
#include <mipoly/error.hpp>
#include <mipoly/exceptional.hpp>

#include <doctest.h>

#include <string>
#include <vector>

using namespace mipoly;

namespace {

Poly coeffs(std::initializer_list<const char*> list) {
  std::vector<Rational> c;
  for (const char* s : list) c.push_back(parse_rational(s));
  return Poly(c);
}

Rational R(const char* s) { return parse_rational(s); }

}  // namespace

// Reference coefficients come from tests/oracles/wronskian_oracle.py, which
// evaluates the Wronskian formulas symbolically.
TEST_CASE("denominator and multi-indexed polynomials match the symbolic oracle") {
  const auto L3 = build_family(ParamSet::laguerre(3), IndexSet({}, {1}));
  CHECK(L3.ell == 1);
  CHECK(L3.xi == coeffs({"-3/2", "-1"}));
  CHECK(build_P(L3, 0) == coeffs({"-15/4", "-3/2"}));
  CHECK(build_P(L3, 1) == coeffs({"-105/8", "0", "5/2"}));
  CHECK(build_P(L3, 2) == coeffs({"-945/32", "189/16", "63/8", "-7/4"}));

  const auto J1 = build_family(ParamSet::jacobi(R("7/3"), 4), IndexSet({1}, {}));
  CHECK(J1.xi == coeffs({"8/3", "1/6"}));
  const Poly p2 = build_P(J1, 2);
  CHECK(p2 == coeffs({"-805/96", "315/64", "2275/32", "175/48"}));
  CHECK(sturm_count(p2, Rational(-1), Rational(1)) == 2);

  const auto L4 = build_family(ParamSet::laguerre(4), IndexSet({1}, {1}));
  CHECK(L4.xi == coeffs({"315/8", "135/4", "21/2", "1"}));
  CHECK(build_P(L4, 3) == coeffs({"-2297295/256", "0", "109395/64", "1683/8", "-1309/16", "-11/2", "11/12"}));

  const auto Jm = build_family(ParamSet::jacobi(R("16/3"), R("38/7")), IndexSet({1}, {2}));
  CHECK(Jm.xi == coeffs({"1541691265/12446784", "-189632585/3111696", "14775545/1037232", "-306475/1555848",
                         "-321425/777924"}));
  CHECK(build_P(Jm, 1) == coeffs({"4189033152025/29274835968", "-390601414471775/58549671936",
                                  "40087435259975/14637417984", "-7882843258225/14637417984",
                                  "46174069175/7318708992", "41998354775/3659354496"}));

  const auto Lm = build_family(ParamSet::laguerre(R("31/5")), IndexSet({2}, {1, 3}));
  CHECK(Lm.xi == coeffs({"216311860611/20000000", "32216660091/2000000", "2088419949/200000", "15167229/4000",
                         "324717/400", "20033/200", "389/60", "1/6"}));
}

TEST_CASE("degree offsets and shifted parameters") {
  CHECK(degree_offset(IndexSet({2, 3}, {})) == 4);
  CHECK(degree_offset(IndexSet()) == 0);
  CHECK(degree_offset(IndexSet({1}, {1})) == 3);
  CHECK(shifted_params(ParamSet::laguerre(5), 1, 2).g == 4);
  const auto fam = build_family(ParamSet::laguerre(5), IndexSet({1}, {1, 2}));
  CHECK(fam.shifted == ParamSet::laguerre(4));
  CHECK(fam.xi.degree() == fam.ell);
}

TEST_CASE("empty deletion reproduces the classical polynomials") {
  for (const ParamSet& p : {ParamSet::laguerre(3), ParamSet::jacobi(R("5/2"), R("7/3"))}) {
    const auto fam = build_family(p, IndexSet());
    CHECK(fam.xi == Poly::constant(1));
    for (int n = 0; n <= 5; ++n) CHECK(build_P(fam, n) == classical_P(n, p));
  }
}

TEST_CASE("build errors") {
  CHECK_THROWS_WITH_AS(build_family(ParamSet::laguerre(2), IndexSet({}, {1, 2})), doctest::Contains("g > 7/2"),
                       InvalidInput);
  CHECK_THROWS_AS(build_family(ParamSet::laguerre(R("1/2")), IndexSet()), InvalidInput);
  BuildOptions relaxed;
  relaxed.override_bounds = true;
  CHECK(build_family(ParamSet::laguerre(R("1/2")), IndexSet(), relaxed).xi == Poly::constant(1));
  // g - h = -2 makes the leading coefficient of xi_1^I vanish.
  CHECK_THROWS_WITH_AS(build_family(ParamSet::jacobi(2, 4), IndexSet({1}, {})), doctest::Contains("degree anomaly"),
                       InternalInvariant);
}

TEST_CASE("reordering columns only flips the sign") {
  const ParamSet p = ParamSet::jacobi(R("37/6"), R("43/7"));
  const Poly a = denominator_polynomial(p, {{1, 3}, {2}});
  const Poly b = denominator_polynomial(p, {{3, 1}, {2}});
  CHECK(a == -b);
  CHECK(multi_indexed_polynomial(p, {{1, 3}, {2}}, 2) == -multi_indexed_polynomial(p, {{3, 1}, {2}}, 2));
  const Poly c = denominator_polynomial(p, {{1, 3}, {2, 4}});
  CHECK(c == -denominator_polynomial(p, {{1, 3}, {4, 2}}));
}

TEST_CASE("P_{D,0} is proportional to the raised denominator") {
  CHECK(check_plusdelta(build_family(ParamSet::laguerre(3), IndexSet({}, {1}))) == R("3/2"));
  CHECK(check_plusdelta(build_family(ParamSet::laguerre(2), IndexSet({2}, {}))) == -1);
  CHECK(plusdelta_factor(ParamSet::jacobi(2, 4), IndexSet({1}, {})) == R("5/4"));
  CHECK(check_plusdelta(build_family(ParamSet::jacobi(R("7/3"), 4), IndexSet({1}, {}))) == R("5/4"));
  CHECK(check_plusdelta(build_family(ParamSet::jacobi(R("16/3"), R("38/7")), IndexSet({1}, {2}))) ==
        plusdelta_factor(ParamSet::jacobi(R("16/3"), R("38/7")), IndexSet({1}, {2})));
}

TEST_CASE("level-0 deletions reduce to smaller index sets") {
  const auto a = check_level0(ParamSet::laguerre(R("7/3")), VirtualType::I, {}, 2);
  CHECK(a.factor == -1);
  CHECK(a.reduced_params == ParamSet::laguerre(R("10/3")));
  CHECK(a.reduced.M() == 0);

  const auto b = check_level0(ParamSet::laguerre(R("7/2")), VirtualType::II, {{1}, {}}, 1);
  CHECK(b.factor == -8);
  CHECK(b.reduced.type_I == std::vector<int>{2});

  CHECK(check_level0(ParamSet::jacobi(2, 4), VirtualType::I, {}, 0).factor == R("7/4"));
  for (int n = 0; n <= 3; ++n) {
    check_level0(ParamSet::jacobi(R("37/6"), R("43/7")), VirtualType::II, {{2}, {1}}, n);
    check_level0(ParamSet::jacobi(R("37/6"), R("43/7")), VirtualType::I, {{1, 3}, {2}}, n);
    check_level0(ParamSet::laguerre(R("37/6")), VirtualType::I, {{2}, {1, 3}}, n);
  }
}

TEST_CASE("equivalent denominators") {
  const auto k1 = check_consecutive_equivalence(ParamSet::jacobi(R("37/6"), R("43/7")), 1);
  CHECK(k1.lhs_set == IndexSet({1}, {}));
  CHECK(k1.rhs_set == IndexSet({}, {1}));

  const auto k2 = check_consecutive_equivalence(ParamSet::laguerre(6), 2);
  CHECK(k2.lhs_params == ParamSet::laguerre(5));
  CHECK(k2.rhs_params == ParamSet::laguerre(8));
  CHECK(k2.scale == 1);

  const auto blk = check_block_equivalence(ParamSet::jacobi(R("41/6"), 7), 1, 1);
  CHECK(blk.lhs_params == ParamSet::jacobi(R("35/6"), 8));
  CHECK(blk.rhs_params == ParamSet::jacobi(R("53/6"), 5));
  CHECK(blk.scale == R("11/12"));

  const auto dual = check_block_equivalence(ParamSet::jacobi(R("68/9"), R("82/11")), 2, 2, VirtualType::II);
  CHECK(dual.lhs_set == IndexSet({}, {2, 3, 4}));
  CHECK(dual.rhs_set == IndexSet({3, 4}, {}));
}

TEST_CASE("single deletions reduce to the exceptional polynomials") {
  CHECK(xell_factor(3, VirtualType::I, ParamSet::laguerre(2)) == -1);
  CHECK(xell_factor(1, VirtualType::II, ParamSet::laguerre(2)) == R("2/7"));
  CHECK(xell_factor(2, VirtualType::I, ParamSet::jacobi(2, 3)) == R("4/11"));
  CHECK(xell_factor(0, VirtualType::II, ParamSet::jacobi(2, 3)) == R("-4/5"));
  for (int ell = 1; ell <= 3; ++ell) {
    for (VirtualType t : {VirtualType::I, VirtualType::II}) {
      const auto lx = xell_reduction(ell, t, ParamSet::laguerre(R("12/5")), 4);
      CHECK(lx.P.size() == 5);
      xell_reduction(ell, t, ParamSet::jacobi(R("12/5"), R("19/7")), 4);
    }
  }
  // X_1 of type I and type II coincide up to sign.
  for (const ParamSet& p : {ParamSet::laguerre(R("12/5")), ParamSet::jacobi(R("12/5"), R("19/7"))})
    CHECK(proportionality(exceptional_xi(1, VirtualType::I, p), exceptional_xi(1, VirtualType::II, p)) == Rational(-1));
}
