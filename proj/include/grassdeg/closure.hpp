#pragma once

#include <string>
#include <vector>

#include "grassdeg/rational.hpp"

namespace grassdeg {

/// Element of Q(i), exact.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return GaussianRational(re, -im); }
  /// re^2 + im^2.
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return GaussianRational(-re, -im); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical form of the CLI grammar: "a/b", "c/d*i", "a/b+c/d*i",
  /// "a/b-c/d*i", with unit imaginary parts printed as "i" / "-i".
  std::string str() const;
  /// Parses the grammar above (plus leading sign); throws std::invalid_argument.
  static GaussianRational parse(const std::string& text);
};

/// Dense matrix over Q(i).
class GRMatrix {
 public:
  GRMatrix() : rows_(0), cols_(0) {}
  GRMatrix(int rows, int cols);

  static GRMatrix identity(int n);
  static GRMatrix zero(int rows, int cols);
  /// The q x q exchange matrix (antidiagonal ones).
  static GRMatrix exchange(int q);
  /// The q x q nilpotent shift (ones on the superdiagonal).
  static GRMatrix shift(int q);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussianRational& at(int i, int j);
  const GaussianRational& at(int i, int j) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;
  GaussianRational trace() const;
  GRMatrix transpose() const;

  GRMatrix& operator+=(const GRMatrix& o);
  GRMatrix& operator-=(const GRMatrix& o);
  GRMatrix& operator*=(const GaussianRational& c);
  friend GRMatrix operator+(GRMatrix a, const GRMatrix& b) { return a += b; }
  friend GRMatrix operator-(GRMatrix a, const GRMatrix& b) { return a -= b; }
  friend GRMatrix operator*(GRMatrix a, const GaussianRational& c) { return a *= c; }
  friend GRMatrix operator*(const GRMatrix& a, const GRMatrix& b);
  friend bool operator==(const GRMatrix& a, const GRMatrix& b);
  friend bool operator!=(const GRMatrix& a, const GRMatrix& b) { return !(a == b); }

  /// Block-diagonal concatenation.
  static GRMatrix direct_sum(const std::vector<GRMatrix>& blocks);

 private:
  int rows_, cols_;
  std::vector<GaussianRational> entries_;
};

/// Point [X : t] of P(Sym^2(C^n) + C); X symmetric, not both zero.
struct ProjPoint {
  GRMatrix x;
  GaussianRational t;
};

/// Rank over Q(i) by fraction-free (Bareiss) elimination on the
/// denominator-cleared matrix, with full pivoting.
int rank_exact(const GRMatrix& m);

/// X in the affine variety: X symmetric, X^2 = I, tr X = 2k - n.
/// Throws std::invalid_argument for non-square or non-symmetric input.
bool affine_member(const GRMatrix& x, int k);

/// [X : t] in the projective closure: X^2 = t^2 I, rank(X + tI) <= k,
/// rank(X - tI) <= n - k.
bool projective_member(const ProjPoint& pt, int k);

/// Base point of the rank-d boundary stratum: d copies of the 2x2 block
/// S = (1/2) [[i, 1], [1, -i]] followed by zeros. Satisfies X^2 = 0,
/// tr X = 0, rank d.
GRMatrix boundary_generator(int n, int d);

/// Dimension of the conjugation orbit of boundary_generator(n, d): the rank
/// of A -> A X - X A on antisymmetric A. Equals d(n - d).
int orbit_dimension(int n, int d);

struct EpsilonCheckResult {
  bool ok = true;
  std::string failed_identity;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// Verifies the exact identities behind the boundary degeneration, working in
/// Q(i)[s]/(s^2 - 2 eps i): the squares of the eps-perturbed blocks, their
/// traces, the trace of the full family member, and the involutivity of the
/// component-connecting matrices.
EpsilonCheckResult epsilon_family_check(int n, int k, int d, const Rational& eps);

struct CanonicalBlocks {
  GRMatrix j;  // exchange
  GRMatrix n;  // nilpotent shift
  GRMatrix s;  // (1/2)(I - iJ) N (I + iJ)
};

/// The q x q ingredients of the canonical form for complex symmetric
/// matrices; s is symmetric and nilpotent of the same index as the shift.
CanonicalBlocks canonical_blocks(int q);

}  // namespace grassdeg
