#pragma once

#include <mipoly/poly.hpp>
#include <mipoly/real.hpp>

#include <span>
#include <string>

namespace mipoly {

/// e^{a eta} eta^b ((1-eta)/2)^c ((1+eta)/2)^d
struct Prefactor {
  long exp_e = 0;
  Rational exp_eta;
  Rational exp_minus;  // exponent of (1-eta)/2
  Rational exp_plus;   // exponent of (1+eta)/2

  friend Prefactor operator+(const Prefactor& x, const Prefactor& y) {
    return {x.exp_e + y.exp_e, x.exp_eta + y.exp_eta, x.exp_minus + y.exp_minus, x.exp_plus + y.exp_plus};
  }
  friend bool operator==(const Prefactor&, const Prefactor&) = default;
  bool trivial() const { return exp_e == 0 && exp_eta == 0 && exp_minus == 0 && exp_plus == 0; }
  std::string str() const;
};

/// A polynomial times a Prefactor; closed under d/deta.
struct ExtendedTerm {
  Prefactor pre;
  Poly poly;

  static ExtendedTerm plain(Poly p) { return {Prefactor{}, std::move(p)}; }
  bool is_zero() const { return poly.is_zero(); }
};

/// Evaluates the term at eta (inside the domain where the prefactor is real).
Real evaluate(const ExtendedTerm& t, const Real& eta);

/// Exact derivative. Only nonzero exponents among (b, c, d) are lowered by
/// one; the product-rule remainder is absorbed into the polynomial part.
ExtendedTerm extended_diff(const ExtendedTerm& t);

inline constexpr std::size_t kDefaultMaxWronskianColumns = 8;

/// W[f_1..f_n](eta) = det(d^{j-1} f_k / deta^{j-1}). Each column's prefactor
/// is pulled out before the determinant, which is then computed over Q[eta] by
/// fraction-free (Bareiss) elimination.
ExtendedTerm wronskian(std::span<const ExtendedTerm> cols, std::size_t max_cols = kDefaultMaxWronskianColumns);

/// Determinant of a square matrix of polynomials (Bareiss, with row pivoting).
Poly polynomial_determinant(std::vector<std::vector<Poly>> m);

/// Combines t's prefactor with `outer` and returns the resulting polynomial.
/// The combined exponential exponent must vanish and the power exponents must
/// be integers; negative powers are removed by exact division. Throws
/// InternalInvariant("prefactor mismatch") otherwise.
Poly cancel_prefactor(const ExtendedTerm& t, const Prefactor& outer);

}  // namespace mipoly
