#pragma once

#include <mipoly/real.hpp>

#include <string>
#include <vector>

namespace mipoly {

/// Gauss rule: integral of weight(x) f(x) ~ sum w_i f(x_i).
struct GaussRule {
  std::string name;
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// n-point Gauss-Jacobi rule for (1-x)^alpha (1+x)^beta on (-1, 1), at the
/// current Real precision. Throws InvalidInput unless alpha, beta > -1.
GaussRule gauss_jacobi(int n, const Real& alpha, const Real& beta);

/// n-point generalized Gauss-Laguerre rule for x^alpha e^{-x} on (0, inf).
GaussRule gauss_laguerre(int n, const Real& alpha);

}  // namespace mipoly
