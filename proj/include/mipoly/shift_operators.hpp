#pragma once

#include <mipoly/builder.hpp>

#include <string>
#include <utility>
#include <vector>

namespace mipoly {

/// f_n: -2 (L) or -2(n+g+h) (J).
Rational forward_factor(int n, const ParamSet& lambda);
/// b_{n-1} = -2n.
Rational backward_factor(int n, const ParamSet& lambda);

/// Forward/backward shift operators and the second-order operator of a
/// multi-indexed family, acting on polynomials in eta. Every operator clears
/// its Xi denominator exactly and throws NotInSpan on a nonzero remainder.
class ShiftOperators {
 public:
  /// Builds Xi_D at lambda + delta alongside the given family.
  explicit ShiftOperators(MultiIndexedFamily fam);

  const MultiIndexedFamily& family() const { return fam_; }
  /// The same deletion at lambda + delta.
  const MultiIndexedFamily& raised() const { return raised_; }

  /// c_F (Xi(l+d) p' - Xi(l+d)' p) / Xi(l)
  Poly forward(const Poly& p) const;
  /// -4/c_F (c2 Xi(l) p' + c1(l^{[M,N]}) Xi(l) p - c2 Xi(l)' p) / Xi(l+d)
  Poly backward(const Poly& p) const;
  /// -4 (c2 Xi p'' + (c1 Xi - 2 c2 Xi') p' + (c2 Xi'' - c1(l^{[M,N]}-d) Xi') p) / Xi
  Poly second_order(const Poly& p) const;

 private:
  MultiIndexedFamily fam_;
  MultiIndexedFamily raised_;
  Poly c1_;        // c1(eta; lambda^{[M,N]})
  Poly c1_lower_;  // c1(eta; lambda^{[M,N]} - delta)
  Poly c2_;
  Poly dxi_;
  Poly d2xi_;
  Poly dxi_raised_;
};

struct FuchsReport {
  /// One (rho1, rho2) pair per distinct zero of Xi_D.
  std::vector<std::pair<int, int>> exponents;
  int distinct_xi_zeros = 0;
  bool xi_squarefree = true;
  /// Regular singular points of the eigen-equation, infinity included when regular.
  int regular_singular_points = 0;
  bool infinity_regular = false;
  std::vector<std::string> notes;
};

/// Characteristic exponents of (H~_D - E) p = 0 at the zeros of Xi_D, found
/// exactly modulo the square-free part of Xi_D, plus a classification of the
/// remaining singular points. Throws IdentityFailure("exponent claim
/// violated") when Xi_D has a repeated zero or a zero shared with c2, or when
/// the residue of the first-order coefficient is not the constant -2.
FuchsReport exponents_at_xi_zeros(const MultiIndexedFamily& fam);

}  // namespace mipoly
