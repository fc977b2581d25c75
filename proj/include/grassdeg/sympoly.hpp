#pragma once

#include <map>
#include <stdexcept>

#include "grassdeg/partition.hpp"
#include "grassdeg/rational.hpp"

namespace grassdeg {

/// Symmetric polynomial in num_vars variables, stored as a coefficient map
/// on the monomial basis m_lambda. Keys have at most num_vars parts and zero
/// coefficients are never stored.
class SymPoly {
 public:
  explicit SymPoly(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& c);

  SymPoly& operator+=(const SymPoly& rhs);
  SymPoly& operator-=(const SymPoly& rhs);
  SymPoly& operator*=(const Rational& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  int num_vars_;
  std::map<Partition, Rational> terms_;
};

/// prod_{1 <= i < j <= k} (x_i + x_j)^power in k variables. The empty product
/// (k = 1) is the constant 1.
SymPoly product_of_pair_sums(int k, int power = 1);

/// Monic Jack polynomial P_lambda^(alpha) in num_vars variables: coefficient
/// of m_lambda is 1, support dominance-below lambda. Computed by the
/// eigenoperator recurrence and memoized per (lambda, alpha, num_vars); the
/// cache is guarded for concurrent use.
SymPoly jack_P(const Partition& lambda, const Rational& alpha, int num_vars);

struct JackExpansion {
  Rational alpha;
  std::map<Partition, Rational> coeffs;
};

/// Internal failure of the triangular back-substitution; cannot be reached
/// through SymPoly's invariants.
class NotInSpanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expands f in the monic Jack basis at the given alpha by repeatedly
/// stripping the leading monomial coefficient. Exact and unique.
JackExpansion jack_expand(const SymPoly& f, const Rational& alpha);

}  // namespace grassdeg
