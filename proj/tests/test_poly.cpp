#include <mipoly/error.hpp>
#include <mipoly/poly.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace mipoly;

namespace {

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-20, 20), den(1, 9);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Poly(c);
}

}  // namespace

TEST_CASE("rationals are canonical and parse in all accepted forms") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("-2.75") == Rational(-11, 4));
  CHECK(to_string(parse_rational("10/-4")) == "-5/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
  CHECK(floor_strict(Rational(5, 2)) == 2);
  CHECK(floor_strict(Rational(3)) == 2);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("ring arithmetic") {
  const Poly eta = Poly::eta();
  const Poly one = Poly::constant(1);
  CHECK((eta + one) + (eta - one) == Poly{0, 2});
  CHECK((Poly{1, 2, 3} * Poly()).is_zero());
  CHECK((eta - one) * (eta + one) == Poly{-1, 0, 1});
  CHECK(Poly().degree() == -1);
  CHECK(Poly{1, 0, 0}.degree() == 0);
}

TEST_CASE("formal derivative") {
  CHECK(Poly::monomial(1, 3).derivative() == Poly::monomial(3, 2));
  CHECK(Poly::constant(5).derivative().is_zero());
  CHECK(Poly{-1, 0, 1}.derivative() == Poly{0, 2});
}

TEST_CASE("Leibniz rule on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_poly(rng, 8), b = random_poly(rng, 8);
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
}

TEST_CASE("division, gcd and modular inverse") {
  const Poly a{-1, 0, 1};  // (eta-1)(eta+1)
  const Poly b{1, 1};
  const DivMod qr = divmod(a, b);
  CHECK(qr.quotient == Poly{-1, 1});
  CHECK(qr.remainder.is_zero());
  CHECK_THROWS_AS(exact_div(a, Poly{2, 1}), NotInSpan);
  CHECK_THROWS_AS(divmod(a, Poly()), InvalidInput);
  CHECK(gcd(a * Poly{3, 1}, Poly{1, 1} * Poly{5, 1}) == Poly{1, 1});
  const auto inv = inverse_mod(Poly{2, 1}, a);
  REQUIRE(inv.has_value());
  CHECK(divmod(*inv * Poly{2, 1}, a).remainder == Poly::constant(1));
  CHECK_FALSE(inverse_mod(b, a).has_value());
  CHECK(root_multiplicity(a * a * Poly{1, 1}, -1) == 3);
  CHECK(root_multiplicity(a, 2) == 0);
  CHECK(proportionality(Poly{2, 4}, Poly{1, 2}) == Rational(2));
  CHECK_FALSE(proportionality(Poly{2, 4}, Poly{1, 3}).has_value());
}

TEST_CASE("Sturm counts on open intervals") {
  const Poly p{-1, 0, 1};
  CHECK(sturm_count(p, Rational(-1), Rational(1)) == 0);
  CHECK(sturm_count(p, Rational(-2), Rational(2)) == 2);
  CHECK(sturm_count(Poly{Rational(3, 2), 1}, Rational(0), std::nullopt) == 0);
  CHECK(sturm_count(p, std::nullopt, std::nullopt) == 2);
  CHECK(sturm_count(p * p, std::nullopt, Rational(0)) == 1);
  CHECK_THROWS_WITH_AS(sturm_count(Poly(), std::nullopt, std::nullopt), doctest::Contains("indeterminate root count"),
                       InvalidInput);
}

TEST_CASE("Sturm counts agree with products of known linear factors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 7), count(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> roots;
    const int k = count(rng);
    Poly p = Poly::constant(Rational(num(rng) == 0 ? 1 : 3, 2));
    for (int i = 0; i < k; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      roots.push_back(r);
      p *= Poly{-r, 1};
    }
    // An irreducible quadratic adds no real roots.
    p *= Poly{1, 0, 1};
    Rational lo(num(rng), den(rng)), width(1 + std::abs(num(rng)), den(rng));
    lo.canonicalize();
    width.canonicalize();
    const Rational hi = lo + width;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const auto inside = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return r > lo && r < hi; });
    const auto above = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return r > lo; });
    CHECK(sturm_count(p, lo, hi) == inside);
    CHECK(sturm_count(p, lo, std::nullopt) == above);
  }
}

TEST_CASE("JSON round trip is exact") {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Poly p = random_poly(rng, 12);
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(poly_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
  }
  CHECK(to_json(Poly{Rational(-3, 2), 1}) == nlohmann::json::parse(R"([["-3","2"],["1","1"]])"));
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"([["1"]])")), InvalidInput);
}

TEST_CASE("evaluation is exact at rational points") {
  const Poly p{Rational(1, 3), -2, Rational(5, 7)};
  CHECK(p(Rational(3, 2)) == Rational(1, 3) - 3 + Rational(5, 7) * Rational(9, 4));
  CHECK(p.reflected() == Poly{Rational(1, 3), 2, Rational(5, 7)});
  CHECK(p.monic().leading() == 1);
}
