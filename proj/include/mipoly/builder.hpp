#pragma once

#include <mipoly/classical.hpp>
#include <mipoly/poly.hpp>
#include <mipoly/virtual_states.hpp>
#include <mipoly/wronskian.hpp>

#include <optional>
#include <vector>

namespace mipoly {

struct BuildOptions {
  /// Build even when the parameter bounds fail (for boundary studies). Node
  /// counts are then recorded rather than enforced.
  bool override_bounds = false;
  std::size_t max_columns = kDefaultMaxWronskianColumns;
};

/// Deletion degrees in explicit column order. Unlike IndexSet, entries may be
/// 0 and need not be sorted; this is the raw input of the Wronskian formulas.
struct OrderedDeletion {
  std::vector<int> type_I;
  std::vector<int> type_II;

  static OrderedDeletion from(const IndexSet& d) { return {d.type_I(), d.type_II()}; }
  int M() const { return static_cast<int>(type_I.size()); }
  int N() const { return static_cast<int>(type_II.size()); }
};

/// mu_1..mu_M, nu_1..nu_N as extended terms in eta.
std::vector<ExtendedTerm> deletion_columns(const ParamSet& lambda, const OrderedDeletion& d);

/// Xi_D(eta; lambda) straight from the Wronskian formula, without bounds
/// or degree checks. Xi of the empty deletion is 1.
Poly denominator_polynomial(const ParamSet& lambda, const OrderedDeletion& d,
                            std::size_t max_columns = kDefaultMaxWronskianColumns);

/// P_{D,n}(eta; lambda) straight from the Wronskian formula.
Poly multi_indexed_polynomial(const ParamSet& lambda, const OrderedDeletion& d, int n,
                              std::size_t max_columns = kDefaultMaxWronskianColumns);

/// ell = sum d^I + sum d^II - M(M-1)/2 - N(N-1)/2 + MN; 0 for the empty set.
int degree_offset(const OrderedDeletion& d);
inline int degree_offset(const IndexSet& d) { return degree_offset(OrderedDeletion::from(d)); }

/// lambda^{[M,N]} = lambda - M delta~^I - N delta~^II.
ParamSet shifted_params(const ParamSet& lambda, int M, int N);

struct MultiIndexedFamily {
  ParamSet params;
  IndexSet deletion;
  int ell = 0;
  ParamSet shifted;  // lambda^{[M,N]}
  Poly xi;           // Xi_D(eta; lambda), natural Wronskian scale
  Rational c_F;
  BuildOptions options;
  int xi_interior_roots = 0;
};

/// Builds Xi_D and the family metadata. Throws InvalidInput on a bounds
/// violation (unless overridden) and InternalInvariant on a degree anomaly,
/// prefactor mismatch or (without override) an interior node of Xi_D.
MultiIndexedFamily build_family(const ParamSet& lambda, const IndexSet& d, const BuildOptions& options = {});

/// P_{D,n}: degree ell+n with exactly n nodes in the base domain (enforced).
Poly build_P(const MultiIndexedFamily& fam, int n);

/// Closed-form proportionality factor of P_{D,0}(lambda) to Xi_D(lambda+delta).
Rational plusdelta_factor(const ParamSet& lambda, const IndexSet& d);

/// Verifies P_{D,0}(lambda) = factor * Xi_D(lambda+delta) and returns the
/// factor; throws IdentityFailure if the polynomials disagree.
Rational check_plusdelta(const MultiIndexedFamily& fam);

struct Level0Check {
  Rational factor;
  OrderedDeletion reduced;
  ParamSet reduced_params;
};

/// Closed-form factor A (zero_type I) or B (zero_type II) of the level-0
/// deletion identity. `rest` lists the other entries; the zero is the last
/// column of its type.
Rational level0_factor(const ParamSet& lambda, VirtualType zero_type, const OrderedDeletion& rest, int n);

/// Verifies P_{D,n}(lambda) with a level-0 entry equals factor * P_{D',n} at
/// lambda - delta~ for the reduced index list D'. Throws IdentityFailure.
Level0Check check_level0(const ParamSet& lambda, VirtualType zero_type, const OrderedDeletion& rest, int n);

struct EquivalenceCheck {
  IndexSet lhs_set;
  ParamSet lhs_params;
  IndexSet rhs_set;
  ParamSet rhs_params;
  Rational scale;  // Xi_lhs = scale * Xi_rhs
};

/// Xi_{1..k of lhs_type}(lambda - delta~^{other}) ~ Xi_{k of other}(lambda - k delta~^{lhs_type}).
EquivalenceCheck check_consecutive_equivalence(const ParamSet& lambda, int k, VirtualType lhs_type = VirtualType::I,
                                               const BuildOptions& options = {});

/// Xi_{m..k+m of lhs_type}(lambda - m delta~^{other})
///   ~ Xi_{k+1..k+m of other}(lambda - (k+1) delta~^{lhs_type}).
EquivalenceCheck check_block_equivalence(const ParamSet& lambda, int k, int m, VirtualType lhs_type = VirtualType::I,
                                         const BuildOptions& options = {});

}  // namespace mipoly
