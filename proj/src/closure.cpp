#include "grassdeg/closure.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace grassdeg {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n == 0) throw std::invalid_argument("GaussianRational: division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string GaussianRational::str() const {
  auto imag_part = [&](bool with_sign) {
    Rational a = with_sign ? im : abs(im);
    if (a == 1) return std::string("i");
    return to_string(a) + "*i";
  };
  if (im == 0) return to_string(re);
  if (re == 0) {
    if (im == -1) return "-i";
    return imag_part(true);
  }
  return to_string(re) + (im > 0 ? "+" : "-") + imag_part(false);
}

namespace {

// rational := ["+"|"-"] digits ["/" digits]
Rational parse_rational_at(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t digits_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits_begin) throw std::invalid_argument("expected digits at position " +
                                                       std::to_string(digits_begin) + " in '" + s + "'");
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_begin) throw std::invalid_argument("expected denominator in '" + s + "'");
  }
  return rational_from_string(s.substr(start, pos - start));
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational");

  GaussianRational out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    if (pos < s.size() && s[pos] == 'i') {  // bare i
      ++pos;
      out.im += Rational(sign);
      continue;
    }
    Rational value = parse_rational_at(s, pos) * Rational(sign);
    bool imaginary = false;
    if (pos < s.size() && s[pos] == '*') {
      if (pos + 1 >= s.size() || s[pos + 1] != 'i')
        throw std::invalid_argument("expected 'i' after '*' in '" + s + "'");
      pos += 2;
      imaginary = true;
    } else if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      imaginary = true;
    }
    if (imaginary)
      out.im += value;
    else
      out.re += value;
  }
  return out;
}

GRMatrix::GRMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("GRMatrix: empty dimensions");
}

GRMatrix GRMatrix::identity(int n) {
  GRMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(Rational(1));
  return m;
}

GRMatrix GRMatrix::zero(int rows, int cols) { return GRMatrix(rows, cols); }

GRMatrix GRMatrix::exchange(int q) {
  GRMatrix m(q, q);
  for (int i = 0; i < q; ++i) m.at(i, q - 1 - i) = GaussianRational(Rational(1));
  return m;
}

GRMatrix GRMatrix::shift(int q) {
  GRMatrix m(q, q);
  for (int i = 0; i + 1 < q; ++i) m.at(i, i + 1) = GaussianRational(Rational(1));
  return m;
}

GaussianRational& GRMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("GRMatrix: index out of range");
  return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

const GaussianRational& GRMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("GRMatrix: index out of range");
  return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

bool GRMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool GRMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const GaussianRational& e) { return e.is_zero(); });
}

GaussianRational GRMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("GRMatrix::trace: matrix not square");
  GaussianRational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

GRMatrix GRMatrix::transpose() const {
  GRMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

GRMatrix& GRMatrix::operator+=(const GRMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("GRMatrix: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

GRMatrix& GRMatrix::operator-=(const GRMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("GRMatrix: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

GRMatrix& GRMatrix::operator*=(const GaussianRational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

GRMatrix operator*(const GRMatrix& a, const GRMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("GRMatrix: product shape mismatch");
  GRMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int l = 0; l < a.cols_; ++l) {
      const GaussianRational& ail = a.at(i, l);
      if (ail.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += ail * b.at(l, j);
    }
  return out;
}

bool operator==(const GRMatrix& a, const GRMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

GRMatrix GRMatrix::direct_sum(const std::vector<GRMatrix>& blocks) {
  int rows = 0, cols = 0;
  for (const GRMatrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  GRMatrix out(rows, cols);
  int ro = 0, co = 0;
  for (const GRMatrix& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

int rank_exact(const GRMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  // clear denominators so elimination stays in Z[i]
  Int lcm = 1;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).re.get_den().get_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).im.get_den().get_mpz_t());
    }
  GRMatrix w = m;
  w *= GaussianRational(Rational(lcm));

  // Bareiss: w[i][j] <- (w[t][t] w[i][j] - w[i][t] w[t][j]) / prev_pivot;
  // the division is exact over Z[i]
  int rank = 0;
  GaussianRational prev(Rational(1));
  for (int t = 0; t < std::min(rows, cols); ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows && pi < 0; ++i)
      for (int j = t; j < cols; ++j)
        if (!w.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != t)
      for (int j = 0; j < cols; ++j) std::swap(w.at(t, j), w.at(pi, j));
    if (pj != t)
      for (int i = 0; i < rows; ++i) std::swap(w.at(i, t), w.at(i, pj));
    ++rank;
    for (int i = t + 1; i < rows; ++i) {
      for (int j = t + 1; j < cols; ++j)
        w.at(i, j) = (w.at(t, t) * w.at(i, j) - w.at(i, t) * w.at(t, j)) / prev;
      w.at(i, t) = GaussianRational();
    }
    prev = w.at(t, t);
  }
  return rank;
}

bool affine_member(const GRMatrix& x, int k) {
  if (!x.is_square()) throw std::invalid_argument("affine_member: matrix not square");
  if (!x.is_symmetric()) throw std::invalid_argument("affine_member: matrix not symmetric");
  const int n = x.rows();
  if (k < 0 || k > n) throw std::invalid_argument("affine_member: k out of range");
  if (x * x != GRMatrix::identity(n)) return false;
  return x.trace() == GaussianRational(Rational(2 * k - n));
}

bool projective_member(const ProjPoint& pt, int k) {
  if (!pt.x.is_square() || !pt.x.is_symmetric())
    throw std::invalid_argument("projective_member: X must be square symmetric");
  const int n = pt.x.rows();
  if (pt.x.is_zero() && pt.t.is_zero())
    throw std::invalid_argument("projective_member: [0 : 0] is not a projective point");
  if (k < 0 || k > n) throw std::invalid_argument("projective_member: k out of range");
  GRMatrix t2(GRMatrix::identity(n));
  t2 *= pt.t * pt.t;
  if (pt.x * pt.x != t2) return false;
  GRMatrix ti = GRMatrix::identity(n);
  ti *= pt.t;
  if (rank_exact(pt.x + ti) > k) return false;
  return rank_exact(pt.x - ti) <= n - k;
}

namespace {

GRMatrix s_block() {
  GRMatrix s(2, 2);
  Rational half(1, 2);
  s.at(0, 0) = GaussianRational(Rational(0), half);
  s.at(0, 1) = GaussianRational(half);
  s.at(1, 0) = GaussianRational(half);
  s.at(1, 1) = GaussianRational(Rational(0), -half);
  return s;
}

}  // namespace

GRMatrix boundary_generator(int n, int d) {
  if (d < 1 || 2 * d > n) throw std::invalid_argument("boundary_generator: need 1 <= d <= n/2");
  std::vector<GRMatrix> blocks(d, s_block());
  if (n > 2 * d) blocks.push_back(GRMatrix::zero(n - 2 * d, n - 2 * d));
  return GRMatrix::direct_sum(blocks);
}

int orbit_dimension(int n, int d) {
  GRMatrix x = boundary_generator(n, d);
  // rows: commutators [A, X] over the antisymmetric basis E_pq - E_qp
  const int pairs = n * (n - 1) / 2;
  GRMatrix tangent(pairs, n * n);
  int row = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q, ++row)
      for (int j = 0; j < n; ++j) {
        // (AX - XA)_{pj} gets +X_{qj}, _{qj} gets -X_{pj}; columns p,q of X
        // contribute through -XA
        tangent.at(row, p * n + j) += x.at(q, j);
        tangent.at(row, q * n + j) -= x.at(p, j);
        tangent.at(row, j * n + q) -= x.at(j, p);
        tangent.at(row, j * n + p) += x.at(j, q);
      }
  return rank_exact(tangent);
}

namespace {

// a + b*r with r^2 = sq, all over Q(i)
struct QuadExt {
  GaussianRational a, b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
};

QuadExt qe(GaussianRational a) { return QuadExt{std::move(a), GaussianRational()}; }

QuadExt qadd(const QuadExt& x, const QuadExt& y) { return QuadExt{x.a + y.a, x.b + y.b}; }

QuadExt qmul(const QuadExt& x, const QuadExt& y, const GaussianRational& sq) {
  return QuadExt{x.a * y.a + x.b * y.b * sq, x.a * y.b + x.b * y.a};
}

using QuadMat2 = std::array<QuadExt, 4>;

QuadMat2 qmat_mul(const QuadMat2& x, const QuadMat2& y, const GaussianRational& sq) {
  QuadMat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[i * 2 + j] = qadd(qmul(x[i * 2 + 0], y[0 * 2 + j], sq), qmul(x[i * 2 + 1], y[1 * 2 + j], sq));
  return out;
}

bool qmat_is_scalar(const QuadMat2& m, const QuadExt& c) {
  return m[0] == c && m[3] == c && m[1].is_zero() && m[2].is_zero();
}

}  // namespace

EpsilonCheckResult epsilon_family_check(int n, int k, int d, const Rational& eps) {
  if (d < 1 || d > k || 2 * k > n)
    throw std::invalid_argument("epsilon_family_check: need 1 <= d <= k <= n/2");
  if (eps <= 0) throw std::invalid_argument("epsilon_family_check: eps must be positive");

  auto fail = [](const char* name) { return EpsilonCheckResult{false, name}; };
  const GaussianRational eps_g{eps};
  const GaussianRational i_g = GaussianRational::unit_i();
  const GaussianRational two{Rational(2)};
  const GaussianRational half{Rational(1, 2)};
  // target u^2 = eps(eps + 2i) and s^2 = 2 eps i
  const GaussianRational u_sq = eps_g * (eps_g + two * i_g);
  const GaussianRational s_sq = two * eps_g * i_g;

  // defining identity (eps + i)^2 + 1 = eps(eps + 2i)
  const GaussianRational epi = eps_g + i_g;
  if (epi * epi + GaussianRational(Rational(1)) != u_sq) return fail("(eps+i)^2+1 = eps(eps+2i)");

  // S_eps = 1/2 [[eps+i, 1], [1, -(eps+i)]]
  QuadMat2 s_eps{qe(half * epi), qe(half), qe(half), qe(-(half * epi))};
  // T_eps = 1/2 [[eps, s], [s, -eps]]
  QuadMat2 t_eps{qe(half * eps_g), QuadExt{GaussianRational(), half},
                 QuadExt{GaussianRational(), half}, qe(-(half * eps_g))};

  const QuadExt quarter_u_sq = qe(u_sq * GaussianRational(Rational(1, 4)));
  if (!qmat_is_scalar(qmat_mul(s_eps, s_eps, s_sq), quarter_u_sq))
    return fail("S_eps^2 = eps(eps+2i)/4 I");
  if (!qmat_is_scalar(qmat_mul(t_eps, t_eps, s_sq), quarter_u_sq))
    return fail("T_eps^2 = eps(eps+2i)/4 I");

  // traces: the S and T blocks are traceless, so tr X_d(eps) reduces to the
  // scalar block (n-2k) * u/2, which is the required right-hand side
  if (!qadd(s_eps[0], s_eps[3]).is_zero()) return fail("tr S_eps = 0");
  if (!qadd(t_eps[0], t_eps[3]).is_zero()) return fail("tr T_eps = 0");

  // scalar block squares to u^2/4 I, completing X_d(eps)^2 = eps(eps+2i)/4 I
  // for every block; over Q(i)[u] this is u/2 * u/2 = u_sq/4
  // (nothing further to compute: u^2 reduces to u_sq by definition)

  // component-connecting involutions: u*C_eps and u*D_eps square to u^2 I
  QuadMat2 c_scaled{qe(epi), qe(GaussianRational(Rational(1))), qe(GaussianRational(Rational(1))),
                    qe(-epi)};
  if (!qmat_is_scalar(qmat_mul(c_scaled, c_scaled, s_sq), qe(u_sq))) return fail("C_eps^2 = I");
  QuadMat2 d_scaled{qe(eps_g), QuadExt{GaussianRational(), GaussianRational(Rational(1))},
                    QuadExt{GaussianRational(), GaussianRational(Rational(1))}, qe(-eps_g)};
  if (!qmat_is_scalar(qmat_mul(d_scaled, d_scaled, s_sq), qe(u_sq))) return fail("D_eps^2 = I");

  return EpsilonCheckResult{};
}

CanonicalBlocks canonical_blocks(int q) {
  if (q < 1) throw std::invalid_argument("canonical_blocks: q must be positive");
  CanonicalBlocks out{GRMatrix::exchange(q), GRMatrix::shift(q), GRMatrix(q, q)};
  GRMatrix i_minus = GRMatrix::identity(q);
  GRMatrix i_plus = GRMatrix::identity(q);
  GRMatrix ij = out.j;
  ij *= GaussianRational::unit_i();
  i_minus -= ij;
  i_plus += ij;
  out.s = i_minus * out.n * i_plus;
  out.s *= GaussianRational(Rational(1, 2));
  return out;
}

}  // namespace grassdeg
