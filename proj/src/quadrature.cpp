#include <mipoly/error.hpp>
#include <mipoly/quadrature.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace mipoly {
namespace {

// Value and derivative of the degree-n orthogonal polynomial at x.
using Evaluator = std::function<std::pair<Real, Real>(const Real&)>;

std::vector<double> jacobi_matrix_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InternalInvariant("Golub-Welsch eigensolve failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Refines double-precision guesses to the current Real precision.
std::vector<Real> newton_refine(const std::vector<double>& guesses, const Evaluator& eval) {
  const Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) + 10);
  std::vector<Real> nodes;
  nodes.reserve(guesses.size());
  for (double g : guesses) {
    Real x = g;
    bool done = false;
    for (int it = 0; it < 100 && !done; ++it) {
      const auto [p, dp] = eval(x);
      const Real step = p / dp;
      x -= step;
      done = abs(step) <= tol * (1 + abs(x));
    }
    if (!done) throw InternalInvariant("quadrature node Newton iteration did not converge");
    nodes.push_back(std::move(x));
  }
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i] > nodes[i - 1])) throw InternalInvariant("quadrature nodes not strictly increasing after refinement");
  return nodes;
}

}  // namespace

GaussRule gauss_jacobi(int n, const Real& alpha, const Real& beta) {
  if (n < 1) throw InvalidInput("quadrature needs at least one node");
  if (!(alpha > -1) || !(beta > -1)) throw InvalidInput("Gauss-Jacobi exponents must exceed -1");
  const double a = alpha.convert_to<double>();
  const double b = beta.convert_to<double>();
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    diag(k) = (k == 0) ? (b - a) / (a + b + 2) : (b * b - a * a) / (s * (s + 2));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    const double v = (k == 1) ? 4.0 * (1 + a) * (1 + b) / ((2 + a + b) * (2 + a + b) * (3 + a + b))
                              : 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1));
    sub(k - 1) = std::sqrt(v);
  }

  // P_n^(a,b) and its derivative from the three-term recurrence.
  const Evaluator eval = [&](const Real& x) {
    Real p0 = 1;
    Real p1 = (alpha + 1) + (alpha + beta + 2) * (x - 1) / 2;
    if (n == 1) return std::pair<Real, Real>{p1, (alpha + beta + 2) / 2};
    for (int k = 2; k <= n; ++k) {
      const Real s = 2 * k + alpha + beta;
      const Real c0 = 2 * k * (k + alpha + beta) * (s - 2);
      const Real c1 = (s - 1) * (s * (s - 2) * x + alpha * alpha - beta * beta);
      const Real c2 = 2 * (k + alpha - 1) * (k + beta - 1) * s;
      Real p2 = (c1 * p1 - c2 * p0) / c0;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    const Real s = 2 * n + alpha + beta;
    const Real dp = (n * ((alpha - beta) - s * x) * p1 + 2 * (n + alpha) * (n + beta) * p0) / (s * (1 - x * x));
    return std::pair<Real, Real>{p1, dp};
  };

  GaussRule rule{"gauss-jacobi", newton_refine(jacobi_matrix_eigenvalues(diag, sub), eval), {}};
  using boost::multiprecision::lgamma;
  const Real logc = lgamma(Real(n) + alpha + 1) + lgamma(Real(n) + beta + 1) - lgamma(Real(n) + alpha + beta + 1) -
                    lgamma(Real(n) + 1) + (alpha + beta + 1) * log(Real(2));
  const Real c = exp(logc);
  rule.weights.reserve(rule.nodes.size());
  for (const auto& x : rule.nodes) {
    const Real dp = eval(x).second;
    rule.weights.push_back(c / ((1 - x * x) * dp * dp));
  }
  return rule;
}

GaussRule gauss_laguerre(int n, const Real& alpha) {
  if (n < 1) throw InvalidInput("quadrature needs at least one node");
  if (!(alpha > -1)) throw InvalidInput("Gauss-Laguerre exponent must exceed -1");
  const double a = alpha.convert_to<double>();
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + a + 1;
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k * (k + a));

  const Evaluator eval = [&](const Real& x) {
    Real p0 = 1;
    Real p1 = 1 + alpha - x;
    for (int k = 2; k <= n; ++k) {
      Real p2 = ((2 * k - 1 + alpha - x) * p1 - (k - 1 + alpha) * p0) / k;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    if (n == 1) return std::pair<Real, Real>{p1, Real(-1)};
    const Real dp = (n * p1 - (n + alpha) * p0) / x;
    return std::pair<Real, Real>{p1, dp};
  };

  GaussRule rule{"gauss-laguerre", newton_refine(jacobi_matrix_eigenvalues(diag, sub), eval), {}};
  using boost::multiprecision::lgamma;
  const Real c = exp(lgamma(Real(n) + alpha + 1) - lgamma(Real(n) + 1));
  rule.weights.reserve(rule.nodes.size());
  for (const auto& x : rule.nodes) {
    const Real dp = eval(x).second;
    rule.weights.push_back(c / (x * dp * dp));
  }
  return rule;
}

}  // namespace mipoly
