#include <mipoly/real.hpp>

#include <boost/math/constants/constants.hpp>

#include <cstdlib>
#include <string>

namespace mipoly {

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real pi_real() { return boost::math::constants::pi<Real>(); }

unsigned default_digits_from_env() {
  if (const char* env = std::getenv("MIPOLY_DIGITS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultDigits;
}

}  // namespace mipoly
