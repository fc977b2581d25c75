#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grassdeg/partition.hpp"
#include "grassdeg/rational.hpp"
#include "grassdeg/sympoly.hpp"

namespace grassdeg {

struct DegreeTerm {
  Partition lambda;
  PiScaled a;   // prod_i Gamma(n - 2k + 1 + lambda_i + (k-i)/2)
  PiScaled b;   // prod_{i<j} Gamma(lam_i - lam_j + (j-i+1)/2) / Gamma(lam_i - lam_j + (j-i)/2)
  Rational c;   // Jack expansion coefficient at alpha = 2
};

struct DegreeReport {
  int k = 0;
  int n = 0;
  Int degree;
  Rational alpha_kn;
  std::vector<DegreeTerm> terms;
  std::string method;  // formula | closed_form | oracle
};

/// The prefactor alpha_{k,n}: three cases by the parity of n and whether
/// n = 2k. Requires 1 <= k <= n/2.
Rational alpha_coefficient(int k, int n);

/// Exact degree of Gr(k,R^n) in the involution/projection matrix model, with
/// the per-partition term breakdown. Inputs with k > n/2 are reduced through
/// the duality degree(k, n) = degree(n-k, n) first; requires 1 <= k <= n-1.
DegreeReport degree(int k, int n);

/// Closed forms: 2^(n-1) for k = 1 (n >= 2); 2*binom(2n-4, n-2) for k = 2
/// (n >= 3); the explicit double-factorial expressions for k = 3 (n >= 5)
/// and k = 4 (n >= 7).
Int closed_form_degree(int k, int n);

/// Degree of Gr(k,R^n) in the Pluecker embedding:
/// (k(n-k))! / prod_{j=1}^k j(j+1)...(j+n-k-1).
Int plucker_degree(int k, int n);

/// Exact ratio degree / plucker_degree.
Rational degree_ratio(int k, int n);

/// Polynomial with rational coefficients, coeffs[i] multiplying x^i.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(long x) const;
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;  // no trailing zeros
};

class DegreeBoundViolatedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The factorial / double-factorial / 2-power block multiplying P_k(n) in the
/// general-degree expression.
Rational any_degree_prefactor(int k, int n);

/// The bound binom(k,2) - sum_i floor(i/2) on deg P_k.
long pk_degree_bound(int k);

/// Extracts P_k by evaluating degrees at n = 2k, ..., 2k + bound, removing
/// alpha_{k,n} and the prefactor, and interpolating; verifies the next two
/// values fit and throws DegreeBoundViolatedError otherwise.
RationalPolynomial interpolate_Pk(int k);

/// Right-hand side of the Selberg-type identity: the ordered-simplex integral
/// of prod x_i^p prod (x_i^2 - x_j^2)^d equals
/// sum_lambda A B C / Gamma(m(p + 1 + d(m-1)) + 1) with C taken from the Jack
/// expansion of prod (x_i + x_j)^d at alpha = 2/d.
Rational selberg_rhs(int m, int p, int d);

struct SelbergMC {
  double estimate = 0;
  double std_error = 0;
  long samples = 0;
  long accepted = 0;
  std::uint64_t seed = 0;
};

/// Monte-Carlo estimate of the integral's left-hand side: uniform samples in
/// [0,1]^m, rejecting points outside {x_1 >= ... >= x_m >= 0, sum <= 1}.
SelbergMC selberg_monte_carlo(int m, int p, int d, long samples, std::uint64_t seed);

}  // namespace grassdeg
