#include <mipoly/error.hpp>
#include <mipoly/rational.hpp>

#include <cctype>
#include <string>

namespace mipoly {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw InvalidInput("empty rational literal");

  if (auto dot = s.find('.'); dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw InvalidInput("malformed rational literal: " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto places = s.size() - dot - 1;
    mpz_class num;
    if (digits == "-" || digits == "+" || num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
      throw InvalidInput("malformed rational literal: " + s);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational q;
  const std::string body = s[0] == '+' ? s.substr(1) : s;
  if (q.set_str(body, 10) != 0 || q.get_den() == 0) throw InvalidInput("malformed rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

mpz_class floor_strict(const Rational& a) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (is_integer(a)) f -= 1;
  return f;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow(const Rational& q, long k) {
  if (k < 0) {
    if (q == 0) throw InvalidInput("zero to a negative power");
    return Rational(1) / pow(q, -k);
  }
  Rational result(1);
  Rational base = q;
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace mipoly
