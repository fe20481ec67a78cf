#include <mipoly/descriptor.hpp>
#include <mipoly/error.hpp>
#include <mipoly/verify_suite.hpp>

#include <doctest.h>

#include <sstream>

using namespace mipoly;

TEST_CASE("descriptor round trip") {
  const auto j = nlohmann::json::parse(R"({"family":"J","g":"16/3","h":"38/7","D":{"I":[1],"II":[2]},"n":1})");
  const FamilyDescriptor d = descriptor_from_json(j);
  CHECK(d.params == ParamSet::jacobi(Rational(16, 3), Rational(38, 7)));
  CHECK(d.deletion == IndexSet({1}, {2}));
  CHECK(d.n == 1);
  CHECK(descriptor_from_json(to_json(d)).params == d.params);
  CHECK_THROWS_AS(descriptor_from_json(nlohmann::json::parse(R"({"family":"Q","g":"1"})")), InvalidInput);
  CHECK_THROWS_AS(descriptor_from_json(nlohmann::json::parse(R"({"family":"J","g":"3"})")), InvalidInput);
}

TEST_CASE("build output") {
  FamilyDescriptor d{ParamSet::laguerre(3), IndexSet({}, {1}), 0};
  const auto out = build_output(d);
  CHECK(out["ell"] == 1);
  CHECK(poly_from_json(out["Xi"]) == Poly{Rational(-3, 2), -1});
  CHECK(poly_from_json(out["P"]) == Poly{Rational(-15, 4), Rational(-3, 2)});
  CHECK(out["shifted"]["g"] == "2");
  const auto classical = build_output({ParamSet::laguerre(3), IndexSet(), 2});
  CHECK(poly_from_json(classical["P"]) == classical_P(2, ParamSet::laguerre(3)));
}

TEST_CASE("eta CSV is monotone") {
  const auto fam = build_family(ParamSet::jacobi(2, 3), IndexSet());
  std::ostringstream os;
  write_eta_csv(os, fam, 2, 50);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "eta,Xi,P");
  double prev = -2;
  int rows = 0;
  while (std::getline(in, line)) {
    double eta = 0, xi = 0, p = 0;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &eta, &xi, &p) == 3);
    CHECK(eta > prev);
    CHECK(xi == 1);
    prev = eta;
    ++rows;
  }
  CHECK(rows == 50);
}

TEST_CASE("sweep enumeration and seeded parameters") {
  SweepOptions opts;
  opts.param_choices = 1;
  const auto cases = sweep_cases(Family::J, opts);
  CHECK(cases.size() == 92);
  for (const auto& c : cases) CHECK(check_bounds(c.deletion, c.params).ok);
  CHECK(seeded_offsets(5, 20) == seeded_offsets(5, 20));
  CHECK(seeded_offsets(5, 20) != seeded_offsets(6, 20));
  for (const auto& q : seeded_offsets(9, 100)) {
    CHECK(q > 0);
    CHECK(q < 2);
  }
}

TEST_CASE("small suite passes and is deterministic") {
  SweepOptions opts;
  opts.max_size = 2;
  opts.max_entry = 2;
  opts.param_choices = 1;
  opts.n_max = 3;
  opts.structural_samples = 2;
  const auto a = run_suite(opts);
  CHECK(a.pass());
  for (const auto& name : identity_names()) {
    REQUIRE(a.find(name) != nullptr);
    CHECK(a.find(name)->checks > 0);
  }
  opts.threads = 1;
  const auto b = run_suite(opts);
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("mutation is detected") {
  const Poly p{1, 2, 3};
  CHECK(mutate_poly(p) != p);
  SweepOptions opts;
  opts.mutate = true;
  opts.n_max = 3;
  const auto r = run_family_checks({ParamSet::laguerre(3), IndexSet({}, {1})}, opts);
  CHECK_FALSE(r.pass());
  CHECK(r.find("fuchs")->failures > 0);
  CHECK(r.find("ladder")->failures > 0);
  opts.mutate = false;
  CHECK(run_family_checks({ParamSet::laguerre(3), IndexSet({}, {1})}, opts).pass());
}

TEST_CASE("targeted equivalence") {
  SweepOptions opts;
  opts.identities = {"equiv"};
  opts.k = 2;
  const auto r = run_suite(opts);
  CHECK(r.pass());
  CHECK(r.find("equiv")->checks > 0);
}
