#pragma once

#include <mipoly/builder.hpp>
#include <mipoly/real.hpp>

#include <json.hpp>

#include <iosfwd>
#include <vector>

namespace mipoly {

struct GridConfig {
  /// Interior points of the coarse grid; the fine grid has 2 * points.
  int points = 4000;
  /// The grid ends where the groundstate amplitude drops below this
  /// fraction of its maximum (singular ends).
  double amplitude_cut = 1e-12;
  /// Same, for the Gaussian tail of the radial oscillator.
  double tail_cut = 1e-20;
  unsigned digits = 30;
};

/// Deformed potential U^{[M,N]} sampled on the interior points of a uniform
/// grid over [x_lo, x_hi] with Dirichlet ends.
struct PotentialGrid {
  ParamSet params;
  IndexSet deletion;
  double x_lo = 0;
  double x_hi = 0;
  std::vector<double> x;
  std::vector<Real> U;
};

/// Spacing of the uniform grid.
double grid_step(const PotentialGrid& pot);

/// U = (d^2/dx^2 phi_{D,0}) / phi_{D,0} with
/// phi_{D,0} ~ phi_0(x; lambda^{[M,N]}) Xi_D(eta; lambda+delta) / Xi_D(eta; lambda),
/// differentiated analytically through eta(x). Throws InternalInvariant if
/// either Xi vanishes at a sampled point.
Real deformed_potential_at(const MultiIndexedFamily& fam, const MultiIndexedFamily& raised, const Real& x);

/// Base potential of the undeformed system at x.
Real base_potential_at(const ParamSet& lambda, const Real& x);

/// Interval [x_lo, x_hi] outside which the groundstate amplitude is
/// negligible per `cfg`.
std::pair<double, double> grid_interval(const MultiIndexedFamily& fam, const MultiIndexedFamily& raised,
                                        const GridConfig& cfg);

PotentialGrid build_deformed_potential(const MultiIndexedFamily& fam, int points, const GridConfig& cfg = {});

/// Lowest k eigenvalues of -d^2/dx^2 + U by 3-point finite differences.
std::vector<double> eigen_spectrum(const PotentialGrid& pot, int k);

struct SpectrumReport {
  ParamSet params;
  IndexSet deletion;
  int points = 0;
  double x_lo = 0;
  double x_hi = 0;
  std::vector<double> coarse;
  std::vector<double> fine;
  std::vector<double> extrapolated;
  std::vector<double> exact;
  std::vector<double> rel_err;
  /// Largest change of the coarse eigenvalues when the amplitude cut is
  /// relaxed by two decades.
  double cut_sensitivity = 0;
  double tolerance = 0;
  bool spurious_free = false;
  bool pass = false;
};

nlohmann::json to_json(const SpectrumReport& r);

/// Computes k+1 levels on grids of N and 2N points, Richardson-extrapolates
/// and compares the lowest k with E_0..E_{k-1}. The extra level must lie
/// above E_{k-1}: no spurious bound state is created by the deletion.
SpectrumReport isospectrality_check(const MultiIndexedFamily& fam, int k, const GridConfig& cfg = {},
                                    double tolerance = 1e-4);

/// phi_{D,n}(x) = c_F^{M+N} phi_0(x; lambda^{[M,N]}) P_{D,n}(eta) / Xi_D(eta) in double.
double eigenfunction_at(const MultiIndexedFamily& fam, const Poly& P, double x);

struct NormCheck {
  std::vector<double> integral;  // x-space norm of phi_{D,n}
  std::vector<double> expected;  // prod (E_n - E~_d) h_n
  std::vector<double> rel_err;
  /// prod (E_n - E~_d) == c_F^{2(M+N)} * eta-space norm product, exactly.
  bool factors_agree = true;
  double tolerance = 0;
  bool pass = false;
};

nlohmann::json to_json(const NormCheck& r);

/// Integrates phi_{D,n}^2 over x for n = 0..n_max and compares with the
/// product over deleted virtual energies times h_n.
NormCheck norm_product_check(const MultiIndexedFamily& fam, int n_max, double tolerance = 1e-8);

struct VirtualWave {
  VirtualLabel label;
  std::vector<double> x;
  std::vector<double> values;
  bool one_signed = false;
  /// Vanishes toward one end and grows monotonically toward the other.
  bool boundary_ok = false;
};

/// Samples phi~_v(x) on `points` interior points of the base x-domain.
VirtualWave virtual_wave(const VirtualLabel& label, const ParamSet& lambda, int points = 2000);

/// CSV with header "x,U,phi" for n-th eigenfunction samples on the grid.
void write_potential_csv(std::ostream& os, const PotentialGrid& pot, const MultiIndexedFamily& fam, int n);

}  // namespace mipoly
