#pragma once

#include <mipoly/builder.hpp>
#include <mipoly/real.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace mipoly {

struct OrthoOptions {
  unsigned digits = kDefaultDigits;
  /// Initial node count; raised to at least ell + n_max + margin.
  int nodes = 200;
  int margin = 40;
  int max_nodes = 3200;
  /// Two successive node counts must agree to this, relative to the
  /// geometric mean of the diagonal entries involved.
  double convergence_tol = 1e-14;
};

struct OrthoReport {
  ParamSet params;
  IndexSet deletion;
  int n_max = 0;
  std::vector<std::vector<Real>> gram;
  std::vector<Real> expected_diag;
  Real max_offdiag_rel;
  Real max_diag_rel_err;
  std::string rule;
  int nodes = 0;
  unsigned digits = 0;
  Real convergence_delta;
  double convergence_tol = 0;
};

/// {"family", "n_max", "gram", "expected_diag", "max_offdiag_rel",
///  "max_diag_rel_err", "quadrature": {"rule", "nodes", "digits", ...}}.
/// Reals are written as decimal strings at the run precision.
nlohmann::json to_json(const OrthoReport& r);

/// Norm product multiplying h_n(lambda) in the orthogonality relation:
///   L: prod (n+g+d^I+1/2) prod (n+g-d^II-1/2)
///   J: 4^{-M-N} prod (n+g+d^I+1/2)(n+h-d^I-1/2) prod (n+g-d^II-1/2)(n+h+d^II+1/2)
Rational norm_product(const ParamSet& lambda, const IndexSet& d, int n);

/// Gram matrix of P_{D,0..n_max} under W(eta; lambda^{[M,N]}) / Xi_D^2 by
/// Gauss-Jacobi (J) or generalized Gauss-Laguerre (L) quadrature, doubling
/// the node count until converged. Throws InvalidInput when Xi_D has an
/// interior node and Error when the quadrature does not converge.
OrthoReport ortho_gram(const MultiIndexedFamily& fam, int n_max, const OrthoOptions& options = {});

struct NodeCertificate {
  int xi_roots = 0;
  std::vector<int> P_roots;  // index n
};

/// Exact Sturm counts on the open base domain: 0 for Xi_D and n for each
/// P_{D,n}. Throws IdentityFailure on any mismatch.
NodeCertificate node_certificate(const MultiIndexedFamily& fam, int n_max);

/// Decimal string of a Real with the given number of significant digits.
std::string real_str(const Real& x, int digits = 20);

}  // namespace mipoly
