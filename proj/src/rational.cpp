#include "grassdeg/rational.hpp"

namespace grassdeg {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
  if (n <= 0) return 1;
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, long r) {
  if (r < 0 || r > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational_from_string: zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

NonIntegralError::NonIntegralError(const PiScaled& value)
    : std::runtime_error("non-integral value " + value.str()),
      coeff_(value.coeff()),
      half_pi_exp_(value.half_pi_exp()) {}

PiScaled::PiScaled(Rational coeff, long half_pi_exp)
    : coeff_(std::move(coeff)), half_pi_exp_(coeff_ == 0 ? 0 : half_pi_exp) {}

bool PiScaled::is_integral() const { return half_pi_exp_ == 0 && coeff_.get_den() == 1; }

PiScaled& PiScaled::operator*=(const PiScaled& rhs) {
  coeff_ *= rhs.coeff_;
  half_pi_exp_ += rhs.half_pi_exp_;
  if (coeff_ == 0) half_pi_exp_ = 0;
  return *this;
}

PiScaled& PiScaled::operator/=(const PiScaled& rhs) {
  if (rhs.coeff_ == 0) throw std::invalid_argument("PiScaled: division by zero");
  coeff_ /= rhs.coeff_;
  half_pi_exp_ -= rhs.half_pi_exp_;
  if (coeff_ == 0) half_pi_exp_ = 0;
  return *this;
}

PiScaled& PiScaled::operator*=(const Rational& rhs) {
  coeff_ *= rhs;
  if (coeff_ == 0) half_pi_exp_ = 0;
  return *this;
}

PiScaled& PiScaled::operator+=(const PiScaled& rhs) {
  if (rhs.coeff_ == 0) return *this;
  if (coeff_ == 0) {
    *this = rhs;
    return *this;
  }
  if (half_pi_exp_ != rhs.half_pi_exp_)
    throw std::invalid_argument("PiScaled: adding values with different sqrt(pi) exponents");
  coeff_ += rhs.coeff_;
  if (coeff_ == 0) half_pi_exp_ = 0;
  return *this;
}

std::string PiScaled::str() const {
  std::string s = to_string(coeff_);
  if (half_pi_exp_ != 0) s += " * sqrt(pi)^" + std::to_string(half_pi_exp_);
  return s;
}

PiScaled gamma_half(long twice_arg) {
  if (twice_arg <= 0) throw std::invalid_argument("gamma_half: argument must be positive");
  if (twice_arg % 2 == 0) return PiScaled(Rational(factorial(twice_arg / 2 - 1)), 0);
  long m = (twice_arg - 1) / 2;  // Gamma(m + 1/2)
  Int num = double_factorial(2 * m - 1);
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(m));
  return PiScaled(make_rational(num, den), 1);
}

Int to_integer(const PiScaled& v) {
  if (!v.is_integral()) throw NonIntegralError(v);
  return v.coeff().get_num();
}

}  // namespace grassdeg
