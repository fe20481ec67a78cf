#pragma once

#include <mipoly/poly.hpp>
#include <mipoly/rational.hpp>
#include <mipoly/real.hpp>

#include <string>

namespace mipoly {

/// Radial oscillator (Laguerre) or Darboux-Poeschl-Teller (Jacobi).
enum class Family { L, J };

std::string to_string(Family f);

/// Parameter shift; `dh` is ignored for the Laguerre family.
struct ShiftVector {
  Rational dg;
  Rational dh;

  friend ShiftVector operator*(long k, const ShiftVector& s) { return {s.dg * k, s.dh * k}; }
  friend ShiftVector operator+(const ShiftVector& a, const ShiftVector& b) { return {a.dg + b.dg, a.dh + b.dh}; }
  friend ShiftVector operator-(const ShiftVector& a) { return {-a.dg, -a.dh}; }
  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

/// The family tag with its parameters: g for L, (g, h) for J.
///
/// A ParamSet is a plain value; the base-range constraint g, h > 1/2 is
/// checked by `base_range_ok` and enforced where a physical system is built.
/// Twisted and shifted parameter tuples used inside virtual-state formulas
/// are legitimately outside that range.
struct ParamSet {
  Family family = Family::L;
  Rational g;
  Rational h;  // unused for L

  static ParamSet laguerre(const Rational& g) { return {Family::L, g, 0}; }
  static ParamSet jacobi(const Rational& g, const Rational& h) { return {Family::J, g, h}; }

  bool is_jacobi() const { return family == Family::J; }

  friend ParamSet operator+(ParamSet p, const ShiftVector& s) {
    p.g += s.dg;
    if (p.is_jacobi()) p.h += s.dh;
    return p;
  }
  friend ParamSet operator-(const ParamSet& p, const ShiftVector& s) { return p + (-s); }
  friend bool operator==(const ParamSet& a, const ParamSet& b) {
    return a.family == b.family && a.g == b.g && (a.family == Family::L || a.h == b.h);
  }

  std::string str() const;
};

bool base_range_ok(const ParamSet& p);

/// delta: (1) for L, (1,1) for J.
ShiftVector delta(Family f);
/// Shift associated with deleting a type-I virtual state: -1 (L), (-1,1) (J).
ShiftVector delta_I(Family f);
/// Shift associated with deleting a type-II virtual state: 1 (L), (1,-1) (J).
ShiftVector delta_II(Family f);

/// c_F: 2 for L, -4 for J.
Rational c_F(Family f);

/// Generalized Laguerre L_n^(alpha)(eta) from its explicit finite sum.
Poly laguerre(int n, const Rational& alpha);
/// Jacobi P_n^(alpha,beta)(eta) from its explicit finite sum.
Poly jacobi(int n, const Rational& alpha, const Rational& beta);

/// P_n(eta; lambda): L_n^(g-1/2) or P_n^(g-1/2, h-1/2).
Poly classical_P(int n, const ParamSet& lambda);

/// E_n: 4n (L) or 4n(n+g+h) (J).
Rational energy(int n, const ParamSet& lambda);

/// h_n(lambda) evaluated at the current Real precision. Throws InvalidInput
/// when a gamma argument is nonpositive.
Real norm_constant(int n, const ParamSet& lambda);

/// W(eta; lambda): e^{-eta} eta^{g-1/2}/2 on (0,inf), or
/// 2^{-(g+h+1)} (1-eta)^{g-1/2} (1+eta)^{h-1/2} on (-1,1).
Real weight_density(const Real& eta, const ParamSet& lambda);

struct HypergeomCoeffs {
  Poly c1;
  Poly c2;
};

/// c1(eta; lambda), c2(eta) of the (confluent) hypergeometric equation.
HypergeomCoeffs hypergeom_coeffs(const ParamSet& lambda);

/// Open base domain of eta: (0, inf) for L, (-1, 1) for J. A missing bound
/// is infinite.
struct Domain {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};
Domain base_domain(Family f);

}  // namespace mipoly
