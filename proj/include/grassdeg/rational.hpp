#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace grassdeg {

using Int = mpz_class;
using Rational = mpq_class;

/// n! for n >= 0.
Int factorial(long n);

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
Int double_factorial(long n);

/// binomial(n, r), zero outside 0 <= r <= n.
Int binomial(long n, long r);

/// Canonical rational num/den, den != 0.
Rational make_rational(const Int& num, const Int& den);

/// Parses "a", "-a", "a/b" with arbitrary-precision parts.
Rational rational_from_string(const std::string& s);

std::string to_string(const Int& v);
std::string to_string(const Rational& v);

class PiScaled;

/// Raised when a PiScaled that must be a plain integer is not: either a
/// leftover sqrt(pi) power or a non-integer coefficient. In the degree
/// assembly this always indicates an internal bug, never bad input.
class NonIntegralError : public std::runtime_error {
 public:
  explicit NonIntegralError(const PiScaled& value);
  const Rational& coeff() const { return coeff_; }
  long half_pi_exp() const { return half_pi_exp_; }

 private:
  Rational coeff_;
  long half_pi_exp_;
};

/// Exact value coeff * pi^(half_pi_exp / 2). Closed under the arithmetic of
/// Gamma at positive half-integer arguments. Zero is normalized to exponent 0.
class PiScaled {
 public:
  PiScaled() : coeff_(0), half_pi_exp_(0) {}
  explicit PiScaled(Rational coeff, long half_pi_exp = 0);

  static PiScaled one() { return PiScaled(Rational(1), 0); }

  const Rational& coeff() const { return coeff_; }
  long half_pi_exp() const { return half_pi_exp_; }

  bool is_zero() const { return coeff_ == 0; }
  bool is_integral() const;

  PiScaled& operator*=(const PiScaled& rhs);
  PiScaled& operator/=(const PiScaled& rhs);
  PiScaled& operator*=(const Rational& rhs);
  /// Addition requires matching exponents unless one side is zero.
  PiScaled& operator+=(const PiScaled& rhs);

  friend PiScaled operator*(PiScaled lhs, const PiScaled& rhs) { return lhs *= rhs; }
  friend PiScaled operator/(PiScaled lhs, const PiScaled& rhs) { return lhs /= rhs; }
  friend PiScaled operator*(PiScaled lhs, const Rational& rhs) { return lhs *= rhs; }
  friend PiScaled operator*(const Rational& lhs, PiScaled rhs) { return rhs *= lhs; }
  friend PiScaled operator+(PiScaled lhs, const PiScaled& rhs) { return lhs += rhs; }
  friend bool operator==(const PiScaled& a, const PiScaled& b) {
    return a.coeff_ == b.coeff_ && a.half_pi_exp_ == b.half_pi_exp_;
  }
  friend bool operator!=(const PiScaled& a, const PiScaled& b) { return !(a == b); }

  std::string str() const;

 private:
  Rational coeff_;
  long half_pi_exp_;
};

/// Gamma(twice_arg / 2) for twice_arg >= 1, exactly:
/// Gamma(m) = (m-1)!, Gamma(m + 1/2) = (2m-1)!! sqrt(pi) / 2^m.
PiScaled gamma_half(long twice_arg);

/// The integer a PiScaled represents; throws NonIntegralError if the
/// exponent is nonzero or the coefficient is not an integer.
Int to_integer(const PiScaled& v);

}  // namespace grassdeg
