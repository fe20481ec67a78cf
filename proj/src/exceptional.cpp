#include <mipoly/error.hpp>
#include <mipoly/exceptional.hpp>

namespace mipoly {

namespace {

void require_ell(int ell) {
  if (ell < 1) throw InvalidInput("X_ell requires ell >= 1");
}

}  // namespace

Poly exceptional_xi(int ell, VirtualType t, const ParamSet& lambda) {
  require_ell(ell);
  const Rational& g = lambda.g;
  const Rational& h = lambda.h;
  const Rational l(ell);
  if (!lambda.is_jacobi()) {
    if (t == VirtualType::I) return laguerre(ell, g + l - Rational(3, 2)).reflected();
    return laguerre(ell, -g - l - half());
  }
  if (t == VirtualType::I) return jacobi(ell, g + l - Rational(3, 2), -h - l - half());
  return jacobi(ell, -g - l - half(), h + l - Rational(3, 2));
}

ParamSet xell_construction_params(int ell, VirtualType t, const ParamSet& lambda) {
  const Family f = lambda.family;
  return lambda + (ell * delta(f) + (t == VirtualType::I ? delta_I(f) : delta_II(f)));
}

Poly exceptional_P(int ell, int n, VirtualType t, const ParamSet& lambda) {
  require_ell(ell);
  if (n < 0) throw InvalidInput("X_ell polynomial index must be >= 0");
  const ParamSet base = xell_construction_params(ell, t, lambda);
  const Poly pn = classical_P(n, base);
  const Poly dpn = pn.derivative();
  const Poly xi0 = exceptional_xi(ell, t, lambda);
  const Poly xi1 = exceptional_xi(ell, t, lambda + delta(lambda.family));
  const Rational& g = lambda.g;
  const Rational& h = lambda.h;
  const Poly one_plus{Rational(1), Rational(1)};
  const Poly one_minus{Rational(1), Rational(-1)};

  if (!lambda.is_jacobi()) {
    if (t == VirtualType::I) return xi1 * pn - xi0 * dpn;
    return (Poly::eta() * xi0 * dpn + (g + half()) * (xi1 * pn)) * (Rational(1) / (Rational(n) + g + half()));
  }
  if (t == VirtualType::I)
    return (one_plus * xi0 * dpn + (h + half()) * (xi1 * pn)) * (Rational(1) / (Rational(n) + h + half()));
  return ((g + half()) * (xi1 * pn) - one_minus * xi0 * dpn) * (Rational(1) / (Rational(n) + g + half()));
}

Rational xell_factor(int n, VirtualType t, const ParamSet& lambda) {
  const Rational& g = lambda.g;
  const Rational& h = lambda.h;
  if (!lambda.is_jacobi()) return t == VirtualType::I ? Rational(-1) : Rational(1) / (Rational(n) + g + half());
  if (t == VirtualType::I) return Rational(2) / (Rational(n) + h + half());
  return Rational(-2) / (Rational(n) + g + half());
}

XellCheck xell_reduction(int ell, VirtualType t, const ParamSet& lambda, int n_max, const BuildOptions& options) {
  require_ell(ell);
  XellCheck out;
  out.construction_params = xell_construction_params(ell, t, lambda);
  const IndexSet d = t == VirtualType::I ? IndexSet({ell}, {}) : IndexSet({}, {ell});
  const MultiIndexedFamily fam = build_family(out.construction_params, d, options);

  out.xi_ell = exceptional_xi(ell, t, lambda);
  if (fam.xi != out.xi_ell)
    throw IdentityFailure("X_ell reduction: Xi_D(" + out.construction_params.str() + ") = " + fam.xi.str() +
                          " differs from xi_ell = " + out.xi_ell.str());
  for (int n = 0; n <= n_max; ++n) {
    const Poly xp = exceptional_P(ell, n, t, lambda);
    const Rational a = xell_factor(n, t, lambda);
    if (xp != a * build_P(fam, n))
      throw IdentityFailure("X_ell reduction: P_{ell," + std::to_string(n) + "} != A * P_{D,n} for type " +
                            to_string(t) + " at " + lambda.str());
    out.P.push_back(xp);
    out.factors.push_back(a);
  }
  return out;
}

}  // namespace mipoly
