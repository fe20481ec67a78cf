#include <mipoly/analytic_verifier.hpp>
#include <mipoly/descriptor.hpp>
#include <mipoly/error.hpp>
#include <mipoly/spectral_verifier.hpp>
#include <mipoly/verify_suite.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mipoly;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
  std::string family;
  std::string g;
  std::string h;
  std::vector<int> d_I;
  std::vector<int> d_II;
  std::string descriptor;
  int n = 0;
  int n_max = 5;
  unsigned digits = default_digits_from_env();
  int nodes = 200;
  int grid = 4000;
  int levels = 6;
  std::uint64_t seed = 1;
  bool override_bounds = false;
  std::string out;
  std::vector<std::string> identities;
  std::optional<int> k;
  std::optional<int> m;
  bool mutate = false;
  int max_size = 3;
  int max_entry = 4;
  int param_choices = 3;
  unsigned threads = 0;
  double offdiag_tol = 1e-10;
  double diag_tol = 1e-8;
  double spectral_tol = 1e-4;
};

void add_family_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--family", cfg.family, "L (radial oscillator) or J (Darboux-Poeschl-Teller)")
      ->check(CLI::IsMember({"L", "J"}));
  cmd->add_option("--g", cfg.g, "parameter g as p/q");
  cmd->add_option("--h", cfg.h, "parameter h as p/q (J only)");
  cmd->add_option("--D-I", cfg.d_I, "type-I degrees, comma separated")->delimiter(',');
  cmd->add_option("--D-II", cfg.d_II, "type-II degrees, comma separated")->delimiter(',');
  cmd->add_option("--descriptor", cfg.descriptor, "JSON family descriptor file (overrides the flags)");
  cmd->add_flag("--override-bounds", cfg.override_bounds, "build outside the parameter bounds");
  cmd->add_option("--out", cfg.out, "output path (stdout when omitted)");
}

FamilyDescriptor descriptor_of(const RunConfig& cfg) {
  if (!cfg.descriptor.empty()) {
    std::ifstream in(cfg.descriptor);
    if (!in) throw InvalidInput("cannot read descriptor " + cfg.descriptor);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("descriptor is not valid JSON: ") + e.what());
    }
    return descriptor_from_json(j);
  }
  if (cfg.family.empty()) throw InvalidInput("--family is required");
  if (cfg.g.empty()) throw InvalidInput("--g is required");
  FamilyDescriptor d;
  if (cfg.family == "L") {
    if (!cfg.h.empty()) throw InvalidInput("--h applies to the J family only");
    d.params = ParamSet::laguerre(parse_rational(cfg.g));
  } else {
    if (cfg.h.empty()) throw InvalidInput("--h is required for the J family");
    d.params = ParamSet::jacobi(parse_rational(cfg.g), parse_rational(cfg.h));
  }
  d.deletion = IndexSet(cfg.d_I, cfg.d_II);
  d.n = cfg.n;
  return d;
}

BuildOptions build_options(const RunConfig& cfg) {
  BuildOptions o;
  o.override_bounds = cfg.override_bounds;
  return o;
}

// Writes through a temporary file so a reader never sees a partial result.
void emit(const RunConfig& cfg, const std::string& text, const std::string& suffix = "") {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target = cfg.out + suffix;
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw InvalidInput("cannot write " + tmp.string());
    os << text;
  }
  std::filesystem::rename(tmp, target);
}

int cmd_build(const RunConfig& cfg) {
  emit(cfg, build_output(descriptor_of(cfg), build_options(cfg)).dump(2) + "\n");
  return kExitPass;
}

SweepOptions sweep_options(const RunConfig& cfg) {
  SweepOptions o;
  o.seed = cfg.seed;
  o.n_max = cfg.n_max;
  o.mutate = cfg.mutate;
  o.identities = cfg.identities;
  o.k = cfg.k;
  o.m = cfg.m;
  o.max_size = cfg.max_size;
  o.max_entry = cfg.max_entry;
  o.param_choices = cfg.param_choices;
  o.threads = cfg.threads;
  return o;
}

int report_suite(const RunConfig& cfg, const SuiteReport& r) {
  emit(cfg, to_json(r).dump(2) + "\n");
  for (const auto& i : r.identities)
    std::cerr << i.name << ": " << i.checks - i.failures << "/" << i.checks << " passed\n";
  return r.pass() ? kExitPass : kExitFailure;
}

int cmd_verify(const RunConfig& cfg) {
  const SweepOptions o = sweep_options(cfg);
  if (!cfg.family.empty() || !cfg.descriptor.empty()) {
    const FamilyDescriptor d = descriptor_of(cfg);
    return report_suite(cfg, run_family_checks({d.params, d.deletion}, o));
  }
  return report_suite(cfg, run_suite(o));
}

int cmd_ortho(const RunConfig& cfg) {
  const FamilyDescriptor d = descriptor_of(cfg);
  const MultiIndexedFamily fam = build_family(d.params, d.deletion, build_options(cfg));
  OrthoOptions o;
  o.digits = cfg.digits;
  o.nodes = cfg.nodes;
  const OrthoReport r = ortho_gram(fam, cfg.n_max, o);
  const NodeCertificate cert = node_certificate(fam, cfg.n_max);
  const bool pass = r.max_offdiag_rel < cfg.offdiag_tol && r.max_diag_rel_err < cfg.diag_tol;
  nlohmann::json j = to_json(r);
  j["node_certificate"] = {{"xi_roots", cert.xi_roots}, {"P_roots", cert.P_roots}};
  j["tolerances"] = {{"offdiag", cfg.offdiag_tol}, {"diag", cfg.diag_tol}};
  j["pass"] = pass;
  emit(cfg, j.dump(2) + "\n");
  return pass ? kExitPass : kExitFailure;
}

int cmd_spectrum(const RunConfig& cfg) {
  const FamilyDescriptor d = descriptor_of(cfg);
  const MultiIndexedFamily fam = build_family(d.params, d.deletion, build_options(cfg));
  GridConfig g;
  g.points = cfg.grid;
  const SpectrumReport s = isospectrality_check(fam, cfg.levels, g, cfg.spectral_tol);
  const NormCheck nc = norm_product_check(fam, cfg.n_max);
  const bool pass = s.pass && nc.pass;
  nlohmann::json j = {{"spectrum", to_json(s)}, {"norms", to_json(nc)}, {"pass", pass}};
  emit(cfg, j.dump(2) + "\n");
  return pass ? kExitPass : kExitFailure;
}

int cmd_export(const RunConfig& cfg) {
  const FamilyDescriptor d = descriptor_of(cfg);
  const MultiIndexedFamily fam = build_family(d.params, d.deletion, build_options(cfg));
  GridConfig g;
  g.points = cfg.grid;
  std::ostringstream eta, x;
  write_eta_csv(eta, fam, d.n);
  write_potential_csv(x, build_deformed_potential(fam, cfg.grid, g), fam, d.n);
  if (cfg.out.empty()) {
    std::cout << eta.str() << "\n" << x.str();
  } else {
    emit(cfg, eta.str(), "_eta.csv");
    emit(cfg, x.str(), "_x.csv");
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-indexed Laguerre and Jacobi polynomials: construction and verification"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  RunConfig cfg;

  auto* build = app.add_subcommand("build", "exact coefficients of Xi_D and P_{D,n}");
  add_family_flags(build, cfg);
  build->add_option("--n", cfg.n, "degree label n")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "exact identity suite (one family, or the seeded sweep)");
  auto* sweep = app.add_subcommand("sweep", "exact identity suite over a configurable seeded sweep");
  for (auto* cmd : {verify, sweep}) {
    add_family_flags(cmd, cfg);
    cmd->add_option("--identity", cfg.identities, "restrict to these identities")
        ->check(CLI::IsMember(identity_names()));
    cmd->add_option("--k", cfg.k, "equivalence block length")->check(CLI::PositiveNumber);
    cmd->add_option("--m", cfg.m, "block start of the two-parameter equivalence")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "sweep seed");
    cmd->add_option("--n-max", cfg.n_max, "highest n checked")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--mutate", cfg.mutate, "perturb one coefficient of P_{D,n} (falsifiability smoke test)");
    cmd->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  }
  sweep->add_option("--max-size", cfg.max_size, "largest M+N")->check(CLI::PositiveNumber);
  sweep->add_option("--max-entry", cfg.max_entry, "largest deleted degree")->check(CLI::PositiveNumber);
  sweep->add_option("--param-choices", cfg.param_choices, "parameter values per deletion set")
      ->check(CLI::PositiveNumber);

  auto* ortho = app.add_subcommand("ortho", "Gram matrix by high-precision quadrature");
  add_family_flags(ortho, cfg);
  ortho->add_option("--n-max", cfg.n_max, "highest n")->check(CLI::NonNegativeNumber);
  ortho->add_option("--digits", cfg.digits, "decimal digits (default $MIPOLY_DIGITS or 50)")->check(CLI::Range(10u, 2000u));
  ortho->add_option("--nodes", cfg.nodes, "initial quadrature nodes")->check(CLI::PositiveNumber);
  ortho->add_option("--offdiag-tol", cfg.offdiag_tol, "relative off-diagonal tolerance")->check(CLI::PositiveNumber);
  ortho->add_option("--diag-tol", cfg.diag_tol, "relative diagonal tolerance")->check(CLI::PositiveNumber);

  auto* spectrum = app.add_subcommand("spectrum", "finite-difference spectrum of the deformed Hamiltonian");
  add_family_flags(spectrum, cfg);
  spectrum->add_option("--grid", cfg.grid, "coarse grid points (fine grid doubles it)")->check(CLI::Range(10, 1000000));
  spectrum->add_option("--levels", cfg.levels, "levels compared with E_n")->check(CLI::PositiveNumber);
  spectrum->add_option("--n-max", cfg.n_max, "highest n of the norm check")->check(CLI::NonNegativeNumber);
  spectrum->add_option("--tol", cfg.spectral_tol, "relative eigenvalue tolerance")->check(CLI::PositiveNumber);

  auto* exp = app.add_subcommand("export", "CSV samples for plotting (writes <out>_eta.csv and <out>_x.csv)");
  add_family_flags(exp, cfg);
  exp->add_option("--n", cfg.n, "degree label n")->check(CLI::NonNegativeNumber);
  exp->add_option("--grid", cfg.grid, "x-grid points")->check(CLI::Range(10, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*build) return cmd_build(cfg);
    if (*verify || *sweep) return cmd_verify(cfg);
    if (*ortho) return cmd_ortho(cfg);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*exp) return cmd_export(cfg);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalInvariant& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
