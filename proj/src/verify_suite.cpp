#include <mipoly/analytic_verifier.hpp>
#include <mipoly/error.hpp>
#include <mipoly/exceptional.hpp>
#include <mipoly/shift_operators.hpp>
#include <mipoly/verify_suite.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <thread>

namespace mipoly {
namespace {

constexpr std::size_t kMaxDetails = 10;

struct Outcome {
  std::string identity;
  bool ok = true;
  std::string detail;
};

using Outcomes = std::vector<Outcome>;

// Runs one check, turning any library error into a recorded failure.
void record(Outcomes& out, const std::string& identity, const std::string& where, const std::function<bool()>& check,
            const std::string& what = "identity does not hold") {
  Outcome o{identity, true, {}};
  try {
    if (!check()) {
      o.ok = false;
      o.detail = where + ": " + what;
    }
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = where + ": " + e.what();
  }
  out.push_back(std::move(o));
}

bool selected(const SweepOptions& opt, const std::string& name) {
  return opt.identities.empty() || std::find(opt.identities.begin(), opt.identities.end(), name) != opt.identities.end();
}

std::vector<IndexSet> deletion_sets(int max_size, int max_entry) {
  // Bit v-1 selects v^I, bit max_entry+v-1 selects v^II.
  std::vector<IndexSet> all;
  const int full = 1 << (2 * max_entry);
  for (int mask = 1; mask < full; ++mask) {
    std::vector<int> I, II;
    for (int v = 1; v <= max_entry; ++v) {
      if (mask & (1 << (v - 1))) I.push_back(v);
      if (mask & (1 << (max_entry + v - 1))) II.push_back(v);
    }
    if (static_cast<int>(I.size() + II.size()) <= max_size) all.emplace_back(I, II);
  }
  std::stable_sort(all.begin(), all.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.M() + a.N() < b.M() + b.N();
  });
  return all;
}

Rational max_or(const std::vector<int>& v, const Rational& fallback, const Rational& shift) {
  Rational out = fallback;
  for (int x : v) out = std::max(out, Rational(Rational(x) + shift));
  return out;
}

// Bounds of the form g > max{N+3/2 (L) or N+2 (J), d^II+1/2} and, for J,
// h > max{M+2, d^I+1/2}, imposed with every term present.
ParamSet literal_bound(Family f, const IndexSet& d) {
  const Rational half(1, 2);
  if (f == Family::L) return ParamSet::laguerre(max_or(d.type_II(), Rational(d.N()) + Rational(3, 2), half));
  return ParamSet::jacobi(max_or(d.type_II(), Rational(d.N() + 2), half), max_or(d.type_I(), Rational(d.M() + 2), half));
}

class OffsetSource {
 public:
  explicit OffsetSource(std::uint64_t seed) : rng_(seed) {}
  Rational next() {
    static constexpr long kDen[] = {3, 5, 7, 9, 11, 13};
    std::uniform_int_distribution<int> pick(0, 5);
    const long q = kDen[pick(rng_)];
    std::uniform_int_distribution<long> num(1, 2 * q - 1);
    for (;;) {
      const long p = num(rng_);
      if (std::gcd(p, q) == 1) return Rational(p, q);
    }
  }
  // An offset pair whose difference is not an integer.
  std::pair<Rational, Rational> pair() {
    for (;;) {
      Rational a = next(), b = next();
      if (!is_integer(a - b)) return {a, b};
    }
  }

 private:
  std::mt19937_64 rng_;
};

ParamSet offset_params(Family f, const ParamSet& base, const std::pair<Rational, Rational>& off) {
  if (f == Family::L) return ParamSet::laguerre(base.g + off.first);
  return ParamSet::jacobi(base.g + off.first, base.h + off.second);
}

std::string where(const ParamSet& p, const IndexSet& d, const std::string& extra = {}) {
  return p.str() + " D=" + d.str() + (extra.empty() ? "" : " " + extra);
}

Outcomes family_checks(const SweepCase& c, const SweepOptions& opt) {
  Outcomes out;
  std::optional<MultiIndexedFamily> fam;
  std::string build_id = "degree";
  for (const char* name : {"degree", "sturm", "plusdelta", "fuchs", "ladder", "level0"})
    if (selected(opt, name)) {
      build_id = name;
      break;
    }
  record(out, build_id, where(c.params, c.deletion, "build"), [&] {
    fam = build_family(c.params, c.deletion);
    return fam->xi.degree() == fam->ell && fam->ell == degree_offset(c.deletion);
  }, "deg Xi_D differs from ell");
  if (!fam) return out;
  const ParamSet& p = c.params;

  if (selected(opt, "degree"))
    for (int n = 0; n <= opt.n_max; ++n)
      record(out, "degree", where(p, c.deletion, "n=" + std::to_string(n)), [&] {
        return multi_indexed_polynomial(p, OrderedDeletion::from(c.deletion), n).degree() == fam->ell + n;
      }, "deg P_{D,n} differs from ell+n");

  if (selected(opt, "sturm"))
    record(out, "sturm", where(p, c.deletion), [&] {
      node_certificate(*fam, opt.n_max);
      return true;
    });

  if (selected(opt, "plusdelta"))
    record(out, "plusdelta", where(p, c.deletion), [&] { return check_plusdelta(*fam) == plusdelta_factor(p, c.deletion); });

  const bool want_fuchs = selected(opt, "fuchs"), want_ladder = selected(opt, "ladder");
  if (want_fuchs || want_ladder) {
    std::optional<ShiftOperators> ops;
    record(out, want_fuchs ? "fuchs" : "ladder", where(p, c.deletion, "operators"), [&] {
      ops.emplace(*fam);
      return true;
    });
    if (ops) {
      std::vector<Poly> P, Praised;
      for (int n = 0; n <= opt.n_max; ++n) P.push_back(build_P(*fam, n));
      for (int n = 0; n < opt.n_max; ++n) Praised.push_back(build_P(ops->raised(), n));
      auto input = [&](const Poly& q) { return opt.mutate ? mutate_poly(q) : q; };
      if (want_fuchs) {
        for (int n = 0; n <= opt.n_max; ++n)
          record(out, "fuchs", where(p, c.deletion, "n=" + std::to_string(n)), [&] {
            const Poly in = input(P[n]);
            return ops->second_order(in) == energy(n, p) * in;
          }, "H~ P_{D,n} != E_n P_{D,n}");
        record(out, "fuchs", where(p, c.deletion, "exponents"), [&] {
          const FuchsReport f = exponents_at_xi_zeros(*fam);
          const bool pairs = std::all_of(f.exponents.begin(), f.exponents.end(),
                                         [](const auto& e) { return e.first == 0 && e.second == 3; });
          if (p.is_jacobi()) return pairs && f.regular_singular_points == 3 + fam->ell;
          return pairs && !f.infinity_regular;
        }, "exponents or singular-point count differ from the claim");
      }
      if (want_ladder) {
        for (int n = 1; n <= opt.n_max; ++n) {
          const std::string at = where(p, c.deletion, "n=" + std::to_string(n));
          record(out, "ladder", at + " forward", [&] {
            return ops->forward(input(P[n])) == forward_factor(n, p) * Praised[n - 1];
          }, "F_D P_{D,n} != f_n P_{D,n-1}(lambda+delta)");
          record(out, "ladder", at + " backward", [&] {
            return ops->backward(input(Praised[n - 1])) == backward_factor(n, p) * P[n];
          }, "B_D P_{D,n-1}(lambda+delta) != b_{n-1} P_{D,n}");
          record(out, "ladder", at + " factorization", [&] {
            return forward_factor(n, p) * backward_factor(n, p) == energy(n, p);
          }, "f_n b_{n-1} != E_n");
        }
        record(out, "ladder", where(p, c.deletion, "n=0 forward"), [&] {
          return ops->forward(input(P[0])).is_zero();
        }, "F_D does not annihilate P_{D,0}");
      }
    }
  }

  if (selected(opt, "level0") && c.deletion.M() + c.deletion.N() <= 2)
    for (VirtualType t : {VirtualType::I, VirtualType::II})
      for (int n = 0; n <= std::min(opt.n_max, 2); ++n)
        record(out, "level0", where(p, c.deletion, "zero=" + to_string(t) + " n=" + std::to_string(n)), [&] {
          check_level0(p, t, OrderedDeletion::from(c.deletion), n);
          return true;
        });
  return out;
}

Outcomes equivalence_checks(const ParamSet& lambda, const SweepOptions& opt) {
  Outcomes out;
  std::vector<int> ks = {1, 2, 3};
  std::vector<std::pair<int, int>> blocks = {{1, 1}, {1, 2}, {2, 1}};
  if (opt.k && !opt.m) {
    ks = {*opt.k};
    blocks.clear();
  } else if (opt.k && opt.m) {
    ks.clear();
    blocks = {{*opt.k, *opt.m}};
  }
  for (VirtualType t : {VirtualType::I, VirtualType::II}) {
    for (int k : ks)
      record(out, "equiv", lambda.str() + " consecutive k=" + std::to_string(k) + " lhs=" + to_string(t), [&] {
        check_consecutive_equivalence(lambda, k, t);
        return true;
      });
    for (const auto& [k, m] : blocks)
      record(out, "equiv",
             lambda.str() + " block k=" + std::to_string(k) + " m=" + std::to_string(m) + " lhs=" + to_string(t), [&] {
               check_block_equivalence(lambda, k, m, t);
               return true;
             });
  }
  return out;
}

Outcomes xell_checks(const ParamSet& lambda, const SweepOptions& opt) {
  Outcomes out;
  for (VirtualType t : {VirtualType::I, VirtualType::II}) {
    for (int ell = 1; ell <= 3; ++ell)
      record(out, "xell", lambda.str() + " ell=" + std::to_string(ell) + " type=" + to_string(t), [&] {
        const XellCheck x = xell_reduction(ell, t, lambda, opt.n_max);
        for (int n = 0; n <= opt.n_max; ++n)
          if (x.factors[n] != xell_factor(n, t, lambda)) return false;
        return true;
      });
  }
  return out;
}

void run_parallel(std::vector<std::function<Outcomes()>>& tasks, std::vector<Outcomes>& results, unsigned threads) {
  results.assign(tasks.size(), {});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<Rational> seeded_offsets(std::uint64_t seed, std::size_t count) {
  OffsetSource src(seed);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(src.next());
  return out;
}

std::vector<SweepCase> sweep_cases(Family f, const SweepOptions& options) {
  OffsetSource src(options.seed * 2 + (f == Family::J ? 1 : 0));
  std::vector<SweepCase> cases;
  for (const IndexSet& d : deletion_sets(options.max_size, options.max_entry)) {
    const ParamSet base = literal_bound(f, d);
    for (int i = 0; i < options.param_choices; ++i) cases.push_back({offset_params(f, base, src.pair()), d});
  }
  return cases;
}

Poly mutate_poly(const Poly& p) {
  std::vector<Rational> c = p.coeffs();
  if (c.empty()) return Poly::constant(Rational(1, 1009));
  const std::size_t i = c.size() / 2;
  c[i] += c[i] == 0 ? Rational(1, 1009) : c[i] / 1009;
  return Poly(std::move(c));
}

bool SuiteReport::pass() const {
  return !identities.empty() && std::all_of(identities.begin(), identities.end(), [](const IdentityResult& r) {
    return r.failures == 0 && r.checks > 0;
  });
}

const IdentityResult* SuiteReport::find(const std::string& name) const {
  for (const auto& r : identities)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

SuiteReport assemble(const SweepOptions& opt, const std::vector<Outcomes>& results, long cases) {
  SuiteReport report;
  report.seed = opt.seed;
  report.mutate = opt.mutate;
  report.cases = cases;
  std::map<std::string, IdentityResult> by_name;
  for (const auto& outcomes : results)
    for (const auto& o : outcomes) {
      IdentityResult& r = by_name[o.identity];
      r.name = o.identity;
      ++r.checks;
      if (!o.ok) {
        ++r.failures;
        if (r.failure_details.size() < kMaxDetails) r.failure_details.push_back(o.detail);
      }
    }
  for (const auto& name : identity_names())
    if (auto it = by_name.find(name); it != by_name.end()) report.identities.push_back(it->second);
  return report;
}

void validate(const SweepOptions& opt) {
  for (const auto& name : opt.identities)
    if (std::find(identity_names().begin(), identity_names().end(), name) == identity_names().end())
      throw InvalidInput("unknown identity \"" + name + "\"");
  if (opt.n_max < 0 || opt.param_choices < 1 || opt.structural_samples < 1)
    throw InvalidInput("sweep sizes must be positive");
}

}  // namespace

SuiteReport run_family_checks(const SweepCase& c, const SweepOptions& opt) {
  validate(opt);
  return assemble(opt, {family_checks(c, opt)}, 1);
}

SuiteReport run_suite(const SweepOptions& opt) {
  validate(opt);

  std::vector<std::function<Outcomes()>> tasks;
  long cases = 0;
  const bool per_family = selected(opt, "fuchs") || selected(opt, "ladder") || selected(opt, "plusdelta") ||
                          selected(opt, "level0") || selected(opt, "degree") || selected(opt, "sturm");
  for (Family f : {Family::L, Family::J}) {
    if (per_family)
      for (const SweepCase& c : sweep_cases(f, opt)) {
        tasks.emplace_back([c, &opt] { return family_checks(c, opt); });
        ++cases;
      }
    OffsetSource src(opt.seed * 7919 + (f == Family::J ? 1 : 0));
    for (int s = 0; s < opt.structural_samples; ++s) {
      const auto off = src.pair();
      if (selected(opt, "equiv")) {
        const ParamSet lambda = offset_params(f, f == Family::L ? ParamSet::laguerre(9) : ParamSet::jacobi(9, 9), off);
        tasks.emplace_back([lambda, &opt] { return equivalence_checks(lambda, opt); });
        ++cases;
      }
      if (selected(opt, "xell")) {
        const ParamSet lambda = offset_params(f, f == Family::L ? ParamSet::laguerre(2) : ParamSet::jacobi(2, 2), off);
        tasks.emplace_back([lambda, &opt] { return xell_checks(lambda, opt); });
        ++cases;
      }
    }
  }

  std::vector<Outcomes> results;
  run_parallel(tasks, results, opt.threads);

  return assemble(opt, results, cases);
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json ids = nlohmann::json::object();
  for (const auto& i : r.identities)
    ids[i.name] = {{"checks", i.checks}, {"failures", i.failures}, {"failure_details", i.failure_details},
                   {"pass", i.failures == 0 && i.checks > 0}};
  return {{"seed", r.seed}, {"mutate", r.mutate}, {"cases", r.cases}, {"identities", ids}, {"pass", r.pass()}};
}

}  // namespace mipoly
