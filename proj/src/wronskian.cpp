#include <mipoly/error.hpp>
#include <mipoly/wronskian.hpp>

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace mipoly {

namespace {

const Poly& eta_factor() {
  static const Poly p = Poly::eta();
  return p;
}
const Poly& minus_factor() {
  static const Poly p{Rational(1, 2), Rational(-1, 2)};  // (1-eta)/2
  return p;
}
const Poly& plus_factor() {
  static const Poly p{Rational(1, 2), Rational(1, 2)};  // (1+eta)/2
  return p;
}

// factor^k for a nonnegative integer exponent held as a Rational.
Poly integer_power(const Poly& factor, const Rational& k) {
  return pow(factor, static_cast<unsigned>(k.get_num().get_ui()));
}

}  // namespace

std::string Prefactor::str() const {
  std::ostringstream os;
  os << "(e:" << exp_e << ", eta:" << to_string(exp_eta) << ", (1-eta)/2:" << to_string(exp_minus)
     << ", (1+eta)/2:" << to_string(exp_plus) << ")";
  return os.str();
}

Real evaluate(const ExtendedTerm& t, const Real& eta) {
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;
  Real v = t.poly(eta);
  if (t.pre.exp_e != 0) v *= exp(eta * t.pre.exp_e);
  if (t.pre.exp_eta != 0) v *= pow(eta, to_real(t.pre.exp_eta));
  if (t.pre.exp_minus != 0) v *= pow((1 - eta) / 2, to_real(t.pre.exp_minus));
  if (t.pre.exp_plus != 0) v *= pow((1 + eta) / 2, to_real(t.pre.exp_plus));
  return v;
}

ExtendedTerm extended_diff(const ExtendedTerm& t) {
  const bool has_eta = t.pre.exp_eta != 0;
  const bool has_minus = t.pre.exp_minus != 0;
  const bool has_plus = t.pre.exp_plus != 0;

  // F = product of the active factors; each is lowered by one power.
  const Poly one = Poly::constant(1);
  const Poly& f_eta = has_eta ? eta_factor() : one;
  const Poly& f_minus = has_minus ? minus_factor() : one;
  const Poly& f_plus = has_plus ? plus_factor() : one;
  const Poly F = f_eta * f_minus * f_plus;

  const Poly& p = t.poly;
  Poly q = F * (p * Rational(t.pre.exp_e) + p.derivative());
  // d/deta of (1-eta)/2 is -1/2 and of (1+eta)/2 is +1/2.
  if (has_eta) q += (f_minus * f_plus * p) * t.pre.exp_eta;
  if (has_minus) q -= (f_eta * f_plus * p) * (t.pre.exp_minus / 2);
  if (has_plus) q += (f_eta * f_minus * p) * (t.pre.exp_plus / 2);

  Prefactor pre = t.pre;
  if (has_eta) pre.exp_eta -= 1;
  if (has_minus) pre.exp_minus -= 1;
  if (has_plus) pre.exp_plus -= 1;
  return {pre, std::move(q)};
}

Poly polynomial_determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  bool negate = false;
  Poly previous = Poly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_div(num, previous, "Bareiss step");
      }
      m[i][k] = Poly{};
    }
    previous = m[k][k];
  }
  Poly det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

ExtendedTerm wronskian(std::span<const ExtendedTerm> cols, std::size_t max_cols) {
  const std::size_t n = cols.size();
  if (n == 0) throw InvalidInput("wronskian of an empty column list");
  if (n > max_cols)
    throw InvalidInput("wronskian with " + std::to_string(n) + " columns exceeds the limit of " +
                       std::to_string(max_cols));

  std::vector<std::vector<Poly>> matrix(n, std::vector<Poly>(n));
  Prefactor net;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<ExtendedTerm> rows;
    rows.reserve(n);
    rows.push_back(cols[k]);
    for (std::size_t j = 1; j < n; ++j) rows.push_back(extended_diff(rows.back()));

    // Common column prefactor: smallest exponent of each factor over the
    // nonzero rows. Exponents within a column differ by integers.
    Prefactor common = cols[k].pre;
    bool any = false;
    for (const auto& r : rows) {
      if (r.is_zero()) continue;
      if (!any) {
        common = r.pre;
        any = true;
        continue;
      }
      common.exp_eta = std::min(common.exp_eta, r.pre.exp_eta);
      common.exp_minus = std::min(common.exp_minus, r.pre.exp_minus);
      common.exp_plus = std::min(common.exp_plus, r.pre.exp_plus);
    }
    if (!any) return {Prefactor{}, Poly{}};
    net = net + common;

    for (std::size_t j = 0; j < n; ++j) {
      const auto& r = rows[j];
      if (r.is_zero()) continue;
      Poly entry = r.poly;
      const Rational de = r.pre.exp_eta - common.exp_eta;
      const Rational dm = r.pre.exp_minus - common.exp_minus;
      const Rational dp = r.pre.exp_plus - common.exp_plus;
      if (!is_integer(de) || !is_integer(dm) || !is_integer(dp))
        throw InternalInvariant("wronskian: non-integral exponent offset within a column");
      if (de != 0) entry *= integer_power(eta_factor(), de);
      if (dm != 0) entry *= integer_power(minus_factor(), dm);
      if (dp != 0) entry *= integer_power(plus_factor(), dp);
      matrix[j][k] = std::move(entry);
    }
  }
  return {net, polynomial_determinant(std::move(matrix))};
}

Poly cancel_prefactor(const ExtendedTerm& t, const Prefactor& outer) {
  const Prefactor total = t.pre + outer;
  if (total.exp_e != 0 || !is_integer(total.exp_eta) || !is_integer(total.exp_minus) || !is_integer(total.exp_plus))
    throw InternalInvariant("prefactor mismatch: residual " + total.str());
  Poly p = t.poly;
  auto apply = [&](const Poly& factor, const Rational& k, const char* name) {
    if (k > 0) {
      p *= integer_power(factor, k);
    } else if (k < 0) {
      auto [q, r] = divmod(p, integer_power(factor, Rational(-k)));
      if (!r.is_zero())
        throw InternalInvariant(std::string("prefactor mismatch: ") + name + "^" + to_string(k) +
                                " does not divide the Wronskian polynomial");
      p = std::move(q);
    }
  };
  apply(eta_factor(), total.exp_eta, "eta");
  apply(minus_factor(), total.exp_minus, "(1-eta)/2");
  apply(plus_factor(), total.exp_plus, "(1+eta)/2");
  return p;
}

}  // namespace mipoly
