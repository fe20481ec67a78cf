#pragma once

#include <mipoly/builder.hpp>

#include <vector>

namespace mipoly {

/// Explicit exceptional X_ell data for a single deletion of the given type.
///
///   XL1: xi_ell = L_ell^(g+ell-3/2)(-eta)     XL2: xi_ell = L_ell^(-g-ell-1/2)(eta)
///   XJ1: xi_ell = P_ell^(g+ell-3/2, -h-ell-1/2)(eta)
///   XJ2: xi_ell = P_ell^(-g-ell-1/2, h+ell-3/2)(eta)
Poly exceptional_xi(int ell, VirtualType t, const ParamSet& lambda);

/// The X_ell polynomial P_{ell,n} in its two-term form (built from classical
/// polynomials only), normalized so that its leading coefficient is
/// lc(xi_ell) * lc(P_n).
Poly exceptional_P(int ell, int n, VirtualType t, const ParamSet& lambda);

/// lambda + ell*delta + delta~ : parameters at which the multi-indexed
/// construction with D = {ell} reproduces X_ell at lambda.
ParamSet xell_construction_params(int ell, VirtualType t, const ParamSet& lambda);

/// Factor A in P_{ell,n} = A * P_{D,n}: -1 (XL1), 1/(n+g+1/2) (XL2),
/// 2/(n+h+1/2) (XJ1), -2/(n+g+1/2) (XJ2).
Rational xell_factor(int n, VirtualType t, const ParamSet& lambda);

struct XellCheck {
  Poly xi_ell;
  std::vector<Poly> P;  // P_{ell,n}, n = 0..n_max
  std::vector<Rational> factors;
  ParamSet construction_params;
};

/// Verifies xi_ell = Xi_D at the construction parameters and
/// P_{ell,n} = A * P_{D,n} for n = 0..n_max. Throws IdentityFailure.
XellCheck xell_reduction(int ell, VirtualType t, const ParamSet& lambda, int n_max, const BuildOptions& options = {});

}  // namespace mipoly
