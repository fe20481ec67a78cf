#include <mipoly/analytic_verifier.hpp>
#include <mipoly/error.hpp>
#include <mipoly/quadrature.hpp>

#include <algorithm>
#include <sstream>

namespace mipoly {
namespace {

std::vector<Real> real_coeffs(const Poly& p) {
  std::vector<Real> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_real(c));
  return out;
}

Real horner(const std::vector<Real>& c, const Real& x) {
  Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

using Matrix = std::vector<std::vector<Real>>;

Matrix gram_with(const GaussRule& rule, const Real& scale, const std::vector<Real>& xi,
                 const std::vector<std::vector<Real>>& P) {
  const std::size_t k = P.size();
  Matrix g(k, std::vector<Real>(k, Real(0)));
  std::vector<Real> vals(k);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Real& x = rule.nodes[i];
    const Real q = horner(xi, x);
    const Real w = rule.weights[i] / (q * q);
    for (std::size_t m = 0; m < k; ++m) vals[m] = horner(P[m], x);
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t n = m; n < k; ++n) g[m][n] += w * vals[m] * vals[n];
  }
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t n = m; n < k; ++n) {
      g[m][n] *= scale;
      g[n][m] = g[m][n];
    }
  return g;
}

Real max_delta(const Matrix& a, const Matrix& b) {
  Real worst = 0;
  for (std::size_t m = 0; m < a.size(); ++m)
    for (std::size_t n = 0; n < a.size(); ++n) {
      const Real d = abs(a[m][n] - b[m][n]) / sqrt(abs(b[m][m] * b[n][n]));
      if (d > worst) worst = d;
    }
  return worst;
}

}  // namespace

std::string real_str(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Rational norm_product(const ParamSet& lambda, const IndexSet& d, int n) {
  const Rational half(1, 2);
  const Rational nn(n);
  Rational out = 1;
  for (int v : d.type_I()) {
    out *= nn + lambda.g + v + half;
    if (lambda.is_jacobi()) out *= nn + lambda.h - v - half;
  }
  for (int v : d.type_II()) {
    out *= nn + lambda.g - v - half;
    if (lambda.is_jacobi()) out *= nn + lambda.h + v + half;
  }
  if (lambda.is_jacobi()) out /= pow(Rational(4), d.M() + d.N());
  return out;
}

OrthoReport ortho_gram(const MultiIndexedFamily& fam, int n_max, const OrthoOptions& options) {
  if (n_max < 0) throw InvalidInput("n_max must be nonnegative");
  if (options.digits < 10) throw InvalidInput("precision must be at least 10 digits");
  const Domain dom = base_domain(fam.params.family);
  if (sturm_count(fam.xi, dom.lo, dom.hi) != 0)
    throw InvalidInput("singular integrand: Xi_D has a node in the base domain");

  std::vector<Poly> polys;
  for (int n = 0; n <= n_max; ++n) polys.push_back(build_P(fam, n));

  PrecisionScope scope(options.digits + 10);
  const ParamSet& sh = fam.shifted;
  const Real half = Real(1) / 2;
  const Real alpha = to_real(sh.g) - half;
  const Real beta = to_real(sh.h) - half;
  const Real scale = sh.is_jacobi() ? pow(Real(2), -(to_real(sh.g) + to_real(sh.h) + 1)) : half;

  const std::vector<Real> xi = real_coeffs(fam.xi);
  std::vector<std::vector<Real>> P;
  for (const auto& p : polys) P.push_back(real_coeffs(p));

  auto rule_for = [&](int n) { return sh.is_jacobi() ? gauss_jacobi(n, alpha, beta) : gauss_laguerre(n, alpha); };

  int nodes = std::max(options.nodes, fam.ell + n_max + options.margin);
  GaussRule rule = rule_for(nodes);
  Matrix prev = gram_with(rule, scale, xi, P);
  Real delta = 0;
  Matrix cur;
  for (;;) {
    if (2 * nodes > options.max_nodes)
      throw Error("quadrature did not converge: last change " + real_str(delta, 6) + " at " + std::to_string(nodes) +
                  " nodes (limit " + std::to_string(options.max_nodes) + ")");
    nodes *= 2;
    rule = rule_for(nodes);
    cur = gram_with(rule, scale, xi, P);
    delta = max_delta(prev, cur);
    if (delta < options.convergence_tol) break;
    prev = std::move(cur);
  }

  OrthoReport r;
  r.params = fam.params;
  r.deletion = fam.deletion;
  r.n_max = n_max;
  r.rule = rule.name;
  r.nodes = nodes;
  r.digits = options.digits;
  r.convergence_delta = delta;
  r.convergence_tol = options.convergence_tol;
  r.max_offdiag_rel = 0;
  r.max_diag_rel_err = 0;
  for (int n = 0; n <= n_max; ++n) {
    const Real expected = norm_constant(n, fam.params) * to_real(norm_product(fam.params, fam.deletion, n));
    const Real err = abs(cur[n][n] - expected) / abs(expected);
    if (err > r.max_diag_rel_err) r.max_diag_rel_err = err;
    r.expected_diag.push_back(expected);
  }
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n) {
      if (m == n) continue;
      const Real rel = abs(cur[m][n]) / sqrt(abs(cur[m][m] * cur[n][n]));
      if (rel > r.max_offdiag_rel) r.max_offdiag_rel = rel;
    }
  r.gram = std::move(cur);
  return r;
}

nlohmann::json to_json(const OrthoReport& r) {
  const int d = static_cast<int>(r.digits);
  nlohmann::json fam = {{"family", to_string(r.params.family)}, {"g", to_string(r.params.g)}, {"D", to_json(r.deletion)}};
  if (r.params.is_jacobi()) fam["h"] = to_string(r.params.h);
  nlohmann::json gram = nlohmann::json::array();
  for (const auto& row : r.gram) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& v : row) jr.push_back(real_str(v, d));
    gram.push_back(jr);
  }
  nlohmann::json diag = nlohmann::json::array();
  for (const auto& v : r.expected_diag) diag.push_back(real_str(v, d));
  return {{"family", fam},
          {"n_max", r.n_max},
          {"gram", gram},
          {"expected_diag", diag},
          {"max_offdiag_rel", r.max_offdiag_rel.convert_to<double>()},
          {"max_diag_rel_err", r.max_diag_rel_err.convert_to<double>()},
          {"quadrature",
           {{"rule", r.rule},
            {"nodes", r.nodes},
            {"digits", r.digits},
            {"convergence_delta", r.convergence_delta.convert_to<double>()},
            {"convergence_tol", r.convergence_tol}}}};
}

NodeCertificate node_certificate(const MultiIndexedFamily& fam, int n_max) {
  const Domain dom = base_domain(fam.params.family);
  NodeCertificate cert;
  cert.xi_roots = sturm_count(fam.xi, dom.lo, dom.hi);
  if (cert.xi_roots != 0)
    throw IdentityFailure("node certificate: Xi_D has " + std::to_string(cert.xi_roots) + " interior roots");
  for (int n = 0; n <= n_max; ++n) {
    const Poly p = multi_indexed_polynomial(fam.params, OrderedDeletion::from(fam.deletion), n, fam.options.max_columns);
    const int roots = sturm_count(p, dom.lo, dom.hi);
    cert.P_roots.push_back(roots);
    if (roots != n)
      throw IdentityFailure("node certificate: P_{D," + std::to_string(n) + "} has " + std::to_string(roots) +
                            " interior roots");
  }
  return cert;
}

}  // namespace mipoly
