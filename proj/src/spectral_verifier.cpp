#include <mipoly/analytic_verifier.hpp>
#include <mipoly/error.hpp>
#include <mipoly/spectral_verifier.hpp>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace mipoly {
namespace {

constexpr double kHalfPi = 1.57079632679489661923;

struct Derivs {
  Poly p, d1, d2;
  explicit Derivs(const Poly& q) : p(q), d1(q.derivative()), d2(d1.derivative()) {}
};

// Evaluates U = w'' + w'^2 for w = log phi_0(x; lambda') + log Xi_+ - log Xi.
class PotentialEvaluator {
 public:
  PotentialEvaluator(const MultiIndexedFamily& fam, const MultiIndexedFamily& raised)
      : jacobi_(fam.params.is_jacobi()),
        g_(to_real(fam.shifted.g)),
        h_(to_real(fam.shifted.h)),
        xi_(fam.xi),
        xi_plus_(raised.xi) {}

  Real operator()(const Real& x) const {
    Real eta, eta_x, eta_xx, w0p, w0pp;
    if (jacobi_) {
      const Real s = sin(x), c = cos(x);
      eta = cos(2 * x);
      eta_x = -2 * sin(2 * x);
      eta_xx = -4 * eta;
      w0p = g_ * c / s - h_ * s / c;
      w0pp = -g_ / (s * s) - h_ / (c * c);
    } else {
      eta = x * x;
      eta_x = 2 * x;
      eta_xx = 2;
      w0p = -x + g_ / x;
      w0pp = -1 - g_ / (x * x);
    }
    const Real q = xi_.p(eta), q1 = xi_.d1(eta), q2 = xi_.d2(eta);
    const Real s = xi_plus_.p(eta), s1 = xi_plus_.d1(eta), s2 = xi_plus_.d2(eta);
    if (q == 0 || s == 0) throw InternalInvariant("deformed potential: Xi_D vanishes at a sampled point");
    const Real lq = q1 / q, ls = s1 / s;
    const Real r = ls - lq;
    const Real r_eta = s2 / s - ls * ls - q2 / q + lq * lq;
    const Real wp = w0p + eta_x * r;
    const Real wpp = w0pp + eta_xx * r + eta_x * eta_x * r_eta;
    return wpp + wp * wp;
  }

 private:
  bool jacobi_;
  Real g_, h_;
  Derivs xi_, xi_plus_;
};

double eta_of(bool jacobi, double x) { return jacobi ? std::cos(2 * x) : x * x; }

double log_phi0(const ParamSet& p, double x) {
  const double g = p.g.get_d();
  if (p.is_jacobi()) return g * std::log(std::sin(x)) + p.h.get_d() * std::log(std::cos(x));
  return g * std::log(x) - 0.5 * x * x;
}

double log_groundstate(const MultiIndexedFamily& fam, const MultiIndexedFamily& raised, double x) {
  const double eta = eta_of(fam.params.is_jacobi(), x);
  return log_phi0(fam.shifted, x) + std::log(std::abs(raised.xi.eval_double(eta))) -
         std::log(std::abs(fam.xi.eval_double(eta)));
}

MultiIndexedFamily raise(const MultiIndexedFamily& fam) {
  return build_family(fam.params + delta(fam.params.family), fam.deletion, fam.options);
}

std::vector<double> lowest_eigenvalues(const std::vector<double>& x, const std::vector<Real>& U, double h, int k) {
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n) throw InvalidInput("eigenvalue count must be between 1 and the number of grid points");
  Eigen::VectorXd diag(n), sub(n - 1);
  const double inv_h2 = 1.0 / (h * h);
  for (int i = 0; i < n; ++i) diag(i) = 2 * inv_h2 + U[i].convert_to<double>();
  sub.setConstant(-inv_h2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("finite-difference eigensolve did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + k};
}

}  // namespace

double grid_step(const PotentialGrid& pot) { return (pot.x_hi - pot.x_lo) / (static_cast<double>(pot.x.size()) + 1); }

Real deformed_potential_at(const MultiIndexedFamily& fam, const MultiIndexedFamily& raised, const Real& x) {
  return PotentialEvaluator(fam, raised)(x);
}

Real base_potential_at(const ParamSet& lambda, const Real& x) {
  const Real g = to_real(lambda.g);
  if (!lambda.is_jacobi()) return x * x + g * (g - 1) / (x * x) - (1 + 2 * g);
  const Real h = to_real(lambda.h);
  const Real s = sin(x), c = cos(x);
  return g * (g - 1) / (s * s) + h * (h - 1) / (c * c) - (g + h) * (g + h);
}

std::pair<double, double> grid_interval(const MultiIndexedFamily& fam, const MultiIndexedFamily& raised,
                                        const GridConfig& cfg) {
  const bool jacobi = fam.params.is_jacobi();
  const double span = jacobi ? kHalfPi : 60.0;
  const int samples = 200000;
  std::vector<double> xs(samples), la(samples);
  double peak = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    xs[i] = span * (i + 1) / (samples + 1);
    la[i] = log_groundstate(fam, raised, xs[i]);
    peak = std::max(peak, la[i]);
  }
  const double lo_level = peak + std::log(cfg.amplitude_cut);
  const double hi_level = peak + std::log(jacobi ? cfg.amplitude_cut : cfg.tail_cut);
  int lo = 0, hi = samples - 1;
  while (lo < samples - 1 && la[lo] < lo_level) ++lo;
  while (hi > 0 && la[hi] < hi_level) --hi;
  if (hi <= lo) throw InternalInvariant("groundstate support not resolved on the scan grid");
  return {xs[std::max(lo - 1, 0)], xs[std::min(hi + 1, samples - 1)]};
}

PotentialGrid build_deformed_potential(const MultiIndexedFamily& fam, int points, const GridConfig& cfg) {
  if (points < 10) throw InvalidInput("grid needs at least 10 points");
  const MultiIndexedFamily raised = raise(fam);
  PrecisionScope scope(cfg.digits);
  const PotentialEvaluator U(fam, raised);
  PotentialGrid pot;
  pot.params = fam.params;
  pot.deletion = fam.deletion;
  std::tie(pot.x_lo, pot.x_hi) = grid_interval(fam, raised, cfg);
  const double h = (pot.x_hi - pot.x_lo) / (points + 1);
  pot.x.reserve(points);
  pot.U.reserve(points);
  for (int i = 1; i <= points; ++i) {
    const double x = pot.x_lo + i * h;
    pot.x.push_back(x);
    pot.U.push_back(U(Real(x)));
  }
  return pot;
}

std::vector<double> eigen_spectrum(const PotentialGrid& pot, int k) {
  return lowest_eigenvalues(pot.x, pot.U, grid_step(pot), k);
}

SpectrumReport isospectrality_check(const MultiIndexedFamily& fam, int k, const GridConfig& cfg, double tolerance) {
  if (k < 1) throw InvalidInput("level count must be positive");
  SpectrumReport r;
  r.params = fam.params;
  r.deletion = fam.deletion;
  r.points = cfg.points;
  r.tolerance = tolerance;

  const PotentialGrid coarse = build_deformed_potential(fam, cfg.points, cfg);
  const PotentialGrid fine = build_deformed_potential(fam, 2 * cfg.points, cfg);
  r.x_lo = coarse.x_lo;
  r.x_hi = coarse.x_hi;
  r.coarse = eigen_spectrum(coarse, k + 1);
  r.fine = eigen_spectrum(fine, k + 1);
  const double h1 = grid_step(coarse), h2 = grid_step(fine);
  const double a = h1 * h1, b = h2 * h2;
  for (int i = 0; i <= k; ++i) r.extrapolated.push_back((a * r.fine[i] - b * r.coarse[i]) / (a - b));

  GridConfig relaxed = cfg;
  relaxed.amplitude_cut *= 100;
  const auto moved = eigen_spectrum(build_deformed_potential(fam, cfg.points, relaxed), k);
  const double e1 = energy(1, fam.params).get_d();
  for (int i = 0; i < k; ++i)
    r.cut_sensitivity = std::max(r.cut_sensitivity, std::abs(moved[i] - r.coarse[i]) / std::max(r.coarse[i], e1));

  r.pass = true;
  for (int n = 0; n < k; ++n) {
    const double exact = energy(n, fam.params).get_d();
    const double scale = std::max(std::abs(exact), e1);
    r.exact.push_back(exact);
    r.rel_err.push_back(std::abs(r.extrapolated[n] - exact) / scale);
    if (r.rel_err.back() > tolerance) r.pass = false;
  }
  const double top = r.exact.back();
  r.spurious_free = r.extrapolated[k] > top + tolerance * std::max(top, e1);
  r.pass = r.pass && r.spurious_free;
  return r;
}

nlohmann::json to_json(const SpectrumReport& r) {
  nlohmann::json fam = {{"family", to_string(r.params.family)}, {"g", to_string(r.params.g)}, {"D", to_json(r.deletion)}};
  if (r.params.is_jacobi()) fam["h"] = to_string(r.params.h);
  return {{"family", fam},
          {"grid", {{"points", r.points}, {"x_lo", r.x_lo}, {"x_hi", r.x_hi}}},
          {"coarse", r.coarse},
          {"fine", r.fine},
          {"extrapolated", r.extrapolated},
          {"exact", r.exact},
          {"rel_err", r.rel_err},
          {"cut_sensitivity", r.cut_sensitivity},
          {"tolerance", r.tolerance},
          {"spurious_free", r.spurious_free},
          {"pass", r.pass}};
}

double eigenfunction_at(const MultiIndexedFamily& fam, const Poly& P, double x) {
  const double eta = eta_of(fam.params.is_jacobi(), x);
  const double scale = std::pow(fam.c_F.get_d(), fam.deletion.M() + fam.deletion.N());
  const double lp = log_phi0(fam.shifted, x);
  // Far in the Gaussian tail the polynomial ratio would overflow first.
  if (lp < -800) return 0.0;
  return scale * std::exp(lp) * P.eval_double(eta) / fam.xi.eval_double(eta);
}

NormCheck norm_product_check(const MultiIndexedFamily& fam, int n_max, double tolerance) {
  NormCheck r;
  r.tolerance = tolerance;
  r.pass = true;
  const bool jacobi = fam.params.is_jacobi();
  const double upper = jacobi ? kHalfPi : std::numeric_limits<double>::infinity();
  boost::math::quadrature::tanh_sinh<double> integrator;
  const int k = fam.deletion.M() + fam.deletion.N();
  const Rational cf2 = pow(fam.c_F, 2 * k);
  for (int n = 0; n <= n_max; ++n) {
    const Poly P = build_P(fam, n);
    auto f = [&](double x) {
      const double v = eigenfunction_at(fam, P, x);
      return v * v;
    };
    const double value = integrator.integrate(f, 0.0, upper, 1e-13);

    Rational factor = 1;
    const Rational En = energy(n, fam.params);
    for (int v : fam.deletion.type_I()) factor *= En - virtual_energy({VirtualType::I, v}, fam.params);
    for (int v : fam.deletion.type_II()) factor *= En - virtual_energy({VirtualType::II, v}, fam.params);
    if (factor != cf2 * norm_product(fam.params, fam.deletion, n)) r.factors_agree = false;

    PrecisionScope scope(30);
    const double expected = (norm_constant(n, fam.params) * to_real(factor)).convert_to<double>();
    r.integral.push_back(value);
    r.expected.push_back(expected);
    r.rel_err.push_back(std::abs(value - expected) / std::abs(expected));
    if (r.rel_err.back() > tolerance) r.pass = false;
  }
  r.pass = r.pass && r.factors_agree;
  return r;
}

nlohmann::json to_json(const NormCheck& r) {
  return {{"integral", r.integral}, {"expected", r.expected},   {"rel_err", r.rel_err},
          {"factors_agree", r.factors_agree}, {"tolerance", r.tolerance}, {"pass", r.pass}};
}

VirtualWave virtual_wave(const VirtualLabel& label, const ParamSet& lambda, int points) {
  if (points < 20) throw InvalidInput("virtual wave needs at least 20 points");
  const Poly q = xi(label, lambda);
  const bool jacobi = lambda.is_jacobi();
  const double g = lambda.g.get_d(), h = lambda.h.get_d();
  const bool type_I = label.type == VirtualType::I;
  const double span = jacobi ? kHalfPi : 8.0;

  VirtualWave w;
  w.label = label;
  int sign = 0;
  w.one_signed = true;
  for (int i = 1; i <= points; ++i) {
    const double x = span * i / (points + 1);
    double lp;
    if (jacobi)
      lp = type_I ? g * std::log(std::sin(x)) + (1 - h) * std::log(std::cos(x))
                  : (1 - g) * std::log(std::sin(x)) + h * std::log(std::cos(x));
    else
      lp = type_I ? 0.5 * x * x + g * std::log(x) : -0.5 * x * x + (1 - g) * std::log(x);
    const double pv = q.eval_double(eta_of(jacobi, x));
    const int s = (pv > 0) - (pv < 0);
    if (s == 0 || (sign != 0 && s != sign)) w.one_signed = false;
    if (sign == 0) sign = s;
    w.x.push_back(x);
    w.values.push_back(std::exp(lp) * pv);
  }

  // One end small, the other growing monotonically over its last tenth.
  const std::size_t n = w.values.size();
  const double first = std::abs(w.values.front()), last = std::abs(w.values.back());
  const double mid = std::abs(w.values[n / 2]);
  const std::size_t tenth = n / 10;
  bool monotone = true;
  if (last > first) {
    for (std::size_t i = n - tenth; i < n; ++i) monotone = monotone && std::abs(w.values[i]) > std::abs(w.values[i - 1]);
    w.boundary_ok = monotone && first < mid;
  } else {
    for (std::size_t i = 1; i <= tenth; ++i) monotone = monotone && std::abs(w.values[i - 1]) > std::abs(w.values[i]);
    w.boundary_ok = monotone && last < mid;
  }
  return w;
}

void write_potential_csv(std::ostream& os, const PotentialGrid& pot, const MultiIndexedFamily& fam, int n) {
  const Poly P = build_P(fam, n);
  os << "x,U,phi\n";
  os.precision(17);
  for (std::size_t i = 0; i < pot.x.size(); ++i)
    os << pot.x[i] << ',' << pot.U[i].convert_to<double>() << ',' << eigenfunction_at(fam, P, pot.x[i]) << '\n';
}

}  // namespace mipoly
