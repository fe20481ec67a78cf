#pragma once

#include <mipoly/builder.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mipoly {

/// Identity names accepted by the suite.
inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"fuchs",  "ladder", "plusdelta", "level0",
                                                 "equiv",  "xell",   "degree",    "sturm"};
  return names;
}

struct SweepOptions {
  std::uint64_t seed = 1;
  /// Highest n for the per-family checks.
  int n_max = 5;
  /// Parameter choices per deletion set in the family sweep.
  int param_choices = 3;
  /// Parameter samples for the fixed-shape identities (equivalences, X_ell).
  int structural_samples = 12;
  /// Largest M+N and largest entry of the swept deletion sets.
  int max_size = 3;
  int max_entry = 4;
  /// Perturb one coefficient of P_{D,n} before the fuchs and ladder checks.
  bool mutate = false;
  /// Restrict to these identities (all when empty).
  std::vector<std::string> identities;
  /// Targeted equivalence: k alone selects the consecutive form, k with m the block form.
  std::optional<int> k;
  std::optional<int> m;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct IdentityResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> failure_details;  // first few
};

struct SuiteReport {
  std::uint64_t seed = 0;
  bool mutate = false;
  std::vector<IdentityResult> identities;
  long cases = 0;
  bool pass() const;
  const IdentityResult* find(const std::string& name) const;
};

nlohmann::json to_json(const SuiteReport& r);

/// One swept case: a family at sampled parameters.
struct SweepCase {
  ParamSet params;
  IndexSet deletion;
};

/// Every deletion set with M+N <= max_size and entries <= max_entry (the
/// empty set excluded), each at `param_choices` seeded parameter values
/// strictly above the parameter bounds.
std::vector<SweepCase> sweep_cases(Family f, const SweepOptions& options);

/// Seeded rational offset in (0, 2) with a denominator in {3, 5, 7, 9, 11, 13}.
std::vector<Rational> seeded_offsets(std::uint64_t seed, std::size_t count);

/// Runs the selected identity checks over both families. Deterministic for
/// a fixed seed regardless of thread scheduling.
SuiteReport run_suite(const SweepOptions& options);

/// The per-family checks (fuchs, ladder, plusdelta, level0, degree,
/// sturm) for one family.
SuiteReport run_family_checks(const SweepCase& c, const SweepOptions& options);

/// The perturbation used by the mutation smoke test.
Poly mutate_poly(const Poly& p);

}  // namespace mipoly
