#include <mipoly/error.hpp>
#include <mipoly/virtual_states.hpp>

#include <doctest.h>

using namespace mipoly;

TEST_CASE("virtual state polynomials") {
  CHECK(xi({VirtualType::I, 0}, ParamSet::laguerre(3)) == Poly::constant(1));
  CHECK(xi({VirtualType::II, 0}, ParamSet::jacobi(3, 4)) == Poly::constant(1));
  CHECK(xi({VirtualType::I, 1}, ParamSet::laguerre(Rational(3, 2))) == Poly{2, 1});
  CHECK(xi({VirtualType::II, 1}, ParamSet::laguerre(3)) == Poly{Rational(-3, 2), -1});
  CHECK_THROWS_WITH_AS(xi({VirtualType::II, 3}, ParamSet::laguerre(3)),
                       doctest::Contains("virtual state does not exist at these parameters"), InvalidInput);
  CHECK_THROWS_AS(xi({VirtualType::I, 4}, ParamSet::jacobi(3, 4)), InvalidInput);
  CHECK(xi({VirtualType::I, 3}, ParamSet::jacobi(3, 4)).degree() == 3);
}

TEST_CASE("type-I Laguerre virtual states admit any degree") {
  CHECK_FALSE(max_virtual_degree(VirtualType::I, ParamSet::laguerre(2)).has_value());
  CHECK(xi({VirtualType::I, 12}, ParamSet::laguerre(2)).degree() == 12);
  CHECK(max_virtual_degree(VirtualType::II, ParamSet::laguerre(Rational(7, 2))) == 2);
  CHECK(max_virtual_degree(VirtualType::I, ParamSet::jacobi(2, Rational(9, 2))) == 3);
}

TEST_CASE("virtual energies") {
  CHECK(virtual_energy({VirtualType::I, 1}, ParamSet::laguerre(Rational(3, 2))) == -12);
  CHECK(virtual_energy({VirtualType::II, 1}, ParamSet::laguerre(3)) == -6);
  CHECK(virtual_energy({VirtualType::I, 1}, ParamSet::jacobi(2, 3)) == -21);
  CHECK(virtual_energy({VirtualType::II, 1}, ParamSet::jacobi(3, 2)) == -21);
  CHECK_THROWS_WITH_AS(virtual_energy({VirtualType::II, 3}, ParamSet::laguerre(3)),
                       doctest::Contains("not a virtual state"), InvalidInput);
}

TEST_CASE("parameter bounds") {
  const IndexSet d({}, {1, 2});
  CHECK(check_bounds(d, ParamSet::laguerre(4)).ok);
  const auto bad = check_bounds(d, ParamSet::laguerre(3));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].find("g > 7/2") != std::string::npos);
  CHECK(check_bounds(IndexSet({2}, {}), ParamSet::jacobi(1, 4)).ok);
  CHECK_FALSE(check_bounds(IndexSet({2}, {}), ParamSet::jacobi(1, 3)).ok);
  CHECK_FALSE(check_bounds(IndexSet(), ParamSet::laguerre(Rational(1, 2))).ok);
  CHECK(parameter_bounds(IndexSet({1, 3}, {2}), Family::J).g == 3);
  CHECK(parameter_bounds(IndexSet({1, 3}, {2}), Family::J).h == 4);
}

TEST_CASE("twists") {
  CHECK(twist(VirtualType::II, ParamSet::laguerre(3)) == ParamSet::laguerre(-2));
  CHECK(twist(VirtualType::I, ParamSet::jacobi(2, 3)) == ParamSet::jacobi(2, -2));
  const ParamSet j = ParamSet::jacobi(Rational(7, 3), Rational(11, 5));
  CHECK(twist(VirtualType::II, twist(VirtualType::II, j)) == j);
  CHECK(twist(VirtualType::I, twist(VirtualType::I, j)) == j);
  CHECK_THROWS_WITH_AS(twist(VirtualType::I, ParamSet::laguerre(3)), doctest::Contains("no type-I twist"),
                       InvalidInput);
}

TEST_CASE("virtual states are twisted eigenpolynomials and have no nodes in the domain") {
  const ParamSet j = ParamSet::jacobi(Rational(37, 6), Rational(43, 7));
  const ParamSet l = ParamSet::laguerre(Rational(37, 6));
  for (int v = 1; v <= 5; ++v) {
    CHECK(xi({VirtualType::I, v}, j) == classical_P(v, twist(VirtualType::I, j)));
    CHECK(xi({VirtualType::II, v}, j) == classical_P(v, twist(VirtualType::II, j)));
    // Type I and II of J are mirror images under g <-> h and eta -> -eta.
    const ParamSet swapped = ParamSet::jacobi(j.h, j.g);
    const Rational sign = v % 2 ? Rational(-1) : Rational(1);
    CHECK(xi({VirtualType::I, v}, j).reflected() == sign * xi({VirtualType::II, v}, swapped));
    CHECK(sturm_count(xi({VirtualType::I, v}, j), Rational(-1), Rational(1)) == 0);
    CHECK(sturm_count(xi({VirtualType::II, v}, j), Rational(-1), Rational(1)) == 0);
    CHECK(sturm_count(xi({VirtualType::I, v}, l), Rational(0), std::nullopt) == 0);
    CHECK(sturm_count(xi({VirtualType::II, v}, l), Rational(0), std::nullopt) == 0);
  }
}

TEST_CASE("index sets") {
  const IndexSet d({3, 1}, {2});
  CHECK(d.type_I() == std::vector<int>{1, 3});
  CHECK(d.M() == 2);
  CHECK(d.N() == 1);
  CHECK(index_set_from_json(to_json(d)) == d);
  CHECK_THROWS_AS(IndexSet({1, 1}, {}), InvalidInput);
  CHECK_THROWS_AS(IndexSet({0}, {}), InvalidInput);
  CHECK_THROWS_AS(index_set_from_json(nlohmann::json::parse(R"({"I":["a"]})")), InvalidInput);
}
