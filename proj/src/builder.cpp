#include <mipoly/builder.hpp>
#include <mipoly/error.hpp>

#include <numeric>

namespace mipoly {

namespace {

ShiftVector delta_of(VirtualType t, Family f) { return t == VirtualType::I ? delta_I(f) : delta_II(f); }

// Outer factor multiplying the Wronskian; `offset` is -1/2 for Xi_D and +1/2
// for P_{D,n}.
Prefactor outer_factor(const ParamSet& lambda, int M, int N, const Rational& offset) {
  Prefactor p;
  if (!lambda.is_jacobi()) {
    p.exp_e = -M;
    p.exp_eta = (Rational(M) + lambda.g + offset) * N;
  } else {
    p.exp_minus = (Rational(M) + lambda.g + offset) * N;
    p.exp_plus = (Rational(N) + lambda.h + offset) * M;
  }
  return p;
}

Poly wronskian_polynomial(const ParamSet& lambda, const OrderedDeletion& d, std::optional<int> n,
                          std::size_t max_columns) {
  if (d.type_I.empty() && d.type_II.empty()) return n ? classical_P(*n, lambda) : Poly::constant(1);
  auto cols = deletion_columns(lambda, d);
  if (n) cols.push_back(ExtendedTerm::plain(classical_P(*n, lambda)));
  const ExtendedTerm w = wronskian(cols, max_columns);
  return cancel_prefactor(w, outer_factor(lambda, d.M(), d.N(), n ? half() : Rational(-half())));
}

}  // namespace

std::vector<ExtendedTerm> deletion_columns(const ParamSet& lambda, const OrderedDeletion& d) {
  std::vector<ExtendedTerm> cols;
  cols.reserve(d.type_I.size() + d.type_II.size() + 1);
  for (int v : d.type_I) {
    ExtendedTerm t{Prefactor{}, xi_unchecked({VirtualType::I, v}, lambda)};
    if (lambda.is_jacobi())
      t.pre.exp_plus = half() - lambda.h;
    else
      t.pre.exp_e = 1;
    cols.push_back(std::move(t));
  }
  for (int v : d.type_II) {
    ExtendedTerm t{Prefactor{}, xi_unchecked({VirtualType::II, v}, lambda)};
    if (lambda.is_jacobi())
      t.pre.exp_minus = half() - lambda.g;
    else
      t.pre.exp_eta = half() - lambda.g;
    cols.push_back(std::move(t));
  }
  return cols;
}

Poly denominator_polynomial(const ParamSet& lambda, const OrderedDeletion& d, std::size_t max_columns) {
  return wronskian_polynomial(lambda, d, std::nullopt, max_columns);
}

Poly multi_indexed_polynomial(const ParamSet& lambda, const OrderedDeletion& d, int n, std::size_t max_columns) {
  if (n < 0) throw InvalidInput("multi-indexed polynomial index n must be >= 0");
  return wronskian_polynomial(lambda, d, n, max_columns);
}

int degree_offset(const OrderedDeletion& d) {
  const int M = d.M();
  const int N = d.N();
  const int sum = std::accumulate(d.type_I.begin(), d.type_I.end(), 0) +
                  std::accumulate(d.type_II.begin(), d.type_II.end(), 0);
  return sum - M * (M - 1) / 2 - N * (N - 1) / 2 + M * N;
}

ParamSet shifted_params(const ParamSet& lambda, int M, int N) {
  return lambda - (M * delta_I(lambda.family) + N * delta_II(lambda.family));
}

MultiIndexedFamily build_family(const ParamSet& lambda, const IndexSet& d, const BuildOptions& options) {
  if (!options.override_bounds) {
    if (!base_range_ok(lambda)) throw InvalidInput("parameters outside the base range g, h > 1/2: " + lambda.str());
    const BoundsReport report = check_bounds(d, lambda);
    if (!report.ok) {
      std::string msg = "parameter bounds violated for D=" + d.str() + " at " + lambda.str() + ":";
      for (std::size_t i = 0; i < report.violations.size(); ++i) msg += (i ? "; " : " ") + report.violations[i];
      throw InvalidInput(msg);
    }
  }

  MultiIndexedFamily fam;
  fam.params = lambda;
  fam.deletion = d;
  fam.ell = degree_offset(d);
  fam.shifted = shifted_params(lambda, d.M(), d.N());
  fam.c_F = c_F(lambda.family);
  fam.options = options;
  fam.xi = denominator_polynomial(lambda, OrderedDeletion::from(d), options.max_columns);

  if (fam.xi.degree() != fam.ell)
    throw InternalInvariant("degree anomaly: deg Xi_D = " + std::to_string(fam.xi.degree()) + " but ell = " +
                            std::to_string(fam.ell) + " for D=" + d.str() + " at " + lambda.str());
  const Domain dom = base_domain(lambda.family);
  fam.xi_interior_roots = sturm_count(fam.xi, dom.lo, dom.hi);
  if (fam.xi_interior_roots != 0 && !options.override_bounds)
    throw InternalInvariant("Xi_D has " + std::to_string(fam.xi_interior_roots) +
                            " node(s) in the base domain for D=" + d.str() + " at " + lambda.str());
  return fam;
}

Poly build_P(const MultiIndexedFamily& fam, int n) {
  Poly p = multi_indexed_polynomial(fam.params, OrderedDeletion::from(fam.deletion), n, fam.options.max_columns);
  if (p.degree() != fam.ell + n)
    throw InternalInvariant("degree anomaly: deg P_{D," + std::to_string(n) + "} = " + std::to_string(p.degree()) +
                            " but ell+n = " + std::to_string(fam.ell + n) + " for D=" + fam.deletion.str() +
                            " at " + fam.params.str());
  if (!fam.options.override_bounds) {
    const Domain dom = base_domain(fam.params.family);
    const int roots = sturm_count(p, dom.lo, dom.hi);
    if (roots != n)
      throw InternalInvariant("P_{D," + std::to_string(n) + "} has " + std::to_string(roots) +
                              " nodes in the base domain for D=" + fam.deletion.str() + " at " + fam.params.str());
  }
  return p;
}

Rational plusdelta_factor(const ParamSet& lambda, const IndexSet& d) {
  const Rational& g = lambda.g;
  const Rational& h = lambda.h;
  Rational f(1);
  if (!lambda.is_jacobi()) {
    if (d.M() % 2 != 0) f = -f;
    for (int v : d.type_II()) f *= g - v - half();
    return f;
  }
  f = pow(Rational(2), -d.M()) * pow(Rational(-2), -d.N());
  for (int v : d.type_I()) f *= h - v - half();
  for (int v : d.type_II()) f *= g - v - half();
  return f;
}

Rational check_plusdelta(const MultiIndexedFamily& fam) {
  const MultiIndexedFamily up = build_family(fam.params + delta(fam.params.family), fam.deletion, fam.options);
  const Poly p0 = build_P(fam, 0);
  const auto scale = proportionality(p0, up.xi);
  if (!scale)
    throw IdentityFailure("plusdelta: P_{D,0}(lambda) is not proportional to Xi_D(lambda+delta) for D=" +
                          fam.deletion.str() + " at " + fam.params.str());
  const Rational expected = plusdelta_factor(fam.params, fam.deletion);
  if (*scale != expected)
    throw IdentityFailure("plusdelta: factor " + to_string(*scale) + " differs from closed form " +
                          to_string(expected) + " for D=" + fam.deletion.str() + " at " + fam.params.str());
  return *scale;
}

Rational level0_factor(const ParamSet& lambda, VirtualType zero_type, const OrderedDeletion& rest, int n) {
  const Rational& g = lambda.g;
  const Rational& h = lambda.h;
  const bool type_I = zero_type == VirtualType::I;
  // M and N count the level-0 column.
  const int M = rest.M() + (type_I ? 1 : 0);
  const int N = rest.N() + (type_I ? 0 : 1);
  Rational f(1);
  if (!lambda.is_jacobi()) {
    if (M % 2 != 0) f = -f;
    if (type_I) {
      for (int v : rest.type_II) f *= v + 1;
    } else {
      for (int v : rest.type_I) f *= v + 1;
      f *= Rational(n) + g - half();
    }
    return f;
  }
  if (type_I) {
    f = -pow(Rational(-2), -M) * pow(Rational(-2), -N);
    for (int v : rest.type_I) f *= g - h + v + 1;
    for (int v : rest.type_II) f *= v + 1;
    f *= Rational(n) + h - half();
  } else {
    f = pow(Rational(2), -M) * pow(Rational(-2), -N);
    for (int v : rest.type_I) f *= v + 1;
    for (int v : rest.type_II) f *= h - g + v + 1;
    f *= Rational(n) + g - half();
  }
  return f;
}

Level0Check check_level0(const ParamSet& lambda, VirtualType zero_type, const OrderedDeletion& rest, int n) {
  OrderedDeletion full = rest;
  OrderedDeletion reduced;
  const bool type_I = zero_type == VirtualType::I;
  (type_I ? full.type_I : full.type_II).push_back(0);
  for (int v : rest.type_I) reduced.type_I.push_back(type_I ? v - 1 : v + 1);
  for (int v : rest.type_II) reduced.type_II.push_back(type_I ? v + 1 : v - 1);
  const ParamSet reduced_params = lambda - delta_of(zero_type, lambda.family);

  const Poly lhs = multi_indexed_polynomial(lambda, full, n);
  const Poly rhs = multi_indexed_polynomial(reduced_params, reduced, n);
  const Rational factor = level0_factor(lambda, zero_type, rest, n);
  if (lhs != rhs * factor) {
    std::string msg = "level-0 identity fails for zero of type " + to_string(zero_type) + " at " + lambda.str() +
                      ", n=" + std::to_string(n);
    if (auto s = proportionality(lhs, rhs)) msg += " (observed factor " + to_string(*s) + ", closed form " +
                                                   to_string(factor) + ")";
    throw IdentityFailure(msg);
  }
  return {factor, reduced, reduced_params};
}

namespace {

EquivalenceCheck compare_denominators(const IndexSet& lhs_set, const ParamSet& lhs_params, const IndexSet& rhs_set,
                                      const ParamSet& rhs_params, const BuildOptions& options) {
  const MultiIndexedFamily lhs = build_family(lhs_params, lhs_set, options);
  const MultiIndexedFamily rhs = build_family(rhs_params, rhs_set, options);
  const auto scale = proportionality(lhs.xi, rhs.xi);
  if (!scale)
    throw IdentityFailure("equivalence fails: Xi_" + lhs_set.str() + " at " + lhs_params.str() + " vs Xi_" +
                          rhs_set.str() + " at " + rhs_params.str());
  return {lhs_set, lhs_params, rhs_set, rhs_params, *scale};
}

IndexSet single_type(VirtualType t, std::vector<int> degrees) {
  return t == VirtualType::I ? IndexSet(std::move(degrees), {}) : IndexSet({}, std::move(degrees));
}

}  // namespace

EquivalenceCheck check_consecutive_equivalence(const ParamSet& lambda, int k, VirtualType lhs_type,
                                               const BuildOptions& options) {
  if (k < 1) throw InvalidInput("equivalence requires k >= 1");
  const Family f = lambda.family;
  const VirtualType rhs_type = other(lhs_type);
  std::vector<int> block(static_cast<std::size_t>(k));
  std::iota(block.begin(), block.end(), 1);
  return compare_denominators(single_type(lhs_type, block), lambda - delta_of(rhs_type, f), single_type(rhs_type, {k}),
                              lambda - k * delta_of(lhs_type, f), options);
}

EquivalenceCheck check_block_equivalence(const ParamSet& lambda, int k, int m, VirtualType lhs_type,
                                         const BuildOptions& options) {
  if (k < 1 || m < 1) throw InvalidInput("block equivalence requires k, m >= 1");
  const Family f = lambda.family;
  const VirtualType rhs_type = other(lhs_type);
  std::vector<int> lhs_block;
  for (int v = m; v <= k + m; ++v) lhs_block.push_back(v);
  std::vector<int> rhs_block;
  for (int v = k + 1; v <= k + m; ++v) rhs_block.push_back(v);
  return compare_denominators(single_type(lhs_type, lhs_block), lambda - m * delta_of(rhs_type, f),
                              single_type(rhs_type, rhs_block), lambda - (k + 1) * delta_of(lhs_type, f), options);
}

}  // namespace mipoly
