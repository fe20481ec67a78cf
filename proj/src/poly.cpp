#include <mipoly/error.hpp>
#include <mipoly/poly.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace mipoly {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidInput("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::eta() { return monomial(1, 1); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Poly::operator()(const Real& x) const {
  Real acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::reflected() const {
  Poly r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    Rational mag = negative ? Rational(-c) : c;
    if (k == 0 || mag != 1) {
      os << to_string(mag);
      if (k > 0) os << "*";
    }
    if (k >= 1) os << "eta";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

Poly pow(const Poly& p, unsigned k) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

DivMod divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = dividend.coeffs();
  const int db = divisor.degree();
  const int da = dividend.degree();
  if (da < db) return {Poly{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  const Rational inv_lead = Rational(1) / divisor.leading();
  for (int k = da - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& dividend, const Poly& divisor, const std::string& what) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) throw NotInSpan(what + ": nonzero remainder " + r.str());
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::optional<Rational> proportionality(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return std::nullopt;
  const Rational s = a.leading() / b.leading();
  if (a == b * s) return s;
  return std::nullopt;
}

namespace {

int sign_of(const Rational& q) { return sgn(q); }

// Sign of p at +infinity (or -infinity).
int sign_at_infinity(const Poly& p, bool positive) {
  const int s = sign_of(p.leading());
  if (positive || p.degree() % 2 == 0) return s;
  return -s;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const Poly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (p.is_zero()) throw InvalidInput("indeterminate root count: zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;

  // Remove rational roots sitting exactly on a finite endpoint; they are not in
  // the open interval and the Sturm count needs nonvanishing endpoints.
  Poly q = p;
  for (const auto& end : {lo, hi}) {
    if (!end) continue;
    const Poly linear{-*end, Rational(1)};
    while (q.degree() >= 1 && q(*end) == 0) q = exact_div(q, linear);
  }
  if (q.degree() <= 0) return 0;

  std::vector<Poly> chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and controls coefficient growth.
    Rational lead = r.leading();
    if (lead < 0) lead = -lead;
    chain.push_back(-(r * (Rational(1) / lead)));
  }

  auto count_at = [&](const std::optional<Rational>& x, bool upper) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& s : chain) signs.push_back(x ? sign_of(s(*x)) : sign_at_infinity(s, upper));
    return sign_changes(signs);
  };
  return count_at(lo, false) - count_at(hi, true);
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw InvalidInput("polynomial coefficient must be [\"num\",\"den\"]");
    mpz_class num, den;
    if (num.set_str(pair[0].get<std::string>(), 10) != 0 || den.set_str(pair[1].get<std::string>(), 10) != 0 ||
        den <= 0)
      throw InvalidInput("malformed polynomial coefficient");
    Rational q(num, den);
    q.canonicalize();
    coeffs.push_back(q);
  }
  return Poly(std::move(coeffs));
}

}  // namespace mipoly

namespace mipoly {

std::optional<Poly> inverse_mod(const Poly& a, const Poly& m) {
  if (m.degree() < 1) return std::nullopt;
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = divmod(a, m).remainder;
  Poly s0, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return divmod(s0 * (Rational(1) / r0.leading()), m).remainder;
}

int root_multiplicity(const Poly& p, const Rational& r) {
  if (p.is_zero()) throw InvalidInput("root multiplicity of the zero polynomial");
  const Poly linear{-r, Rational(1)};
  int mult = 0;
  Poly q = p;
  while (q.degree() >= 1 && q(r) == 0) {
    q = exact_div(q, linear);
    ++mult;
  }
  return mult;
}

}  // namespace mipoly
