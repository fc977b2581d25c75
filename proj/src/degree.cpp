#include "grassdeg/degree.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace grassdeg {

Rational alpha_coefficient(int k, int n) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("alpha_coefficient: need 1 <= k <= n/2");
  Int num = 1, den = 1;
  if (n == 2 * k) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k) * (k - 1) + 1);
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) den *= Int(j - i) * Int(2 * k - j - i);
  } else if (n % 2 == 0) {
    const int m = n / 2;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(),
                 static_cast<unsigned long>(k) * (n - k - 1));
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= m; ++j) den *= Int(j - i) * Int(n - j - i);
  } else {
    const int m = (n - 1) / 2;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k) * (n - k));
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= m; ++j) den *= Int(j - i) * Int(n - i - j);
    for (int i = 1; i <= k; ++i) den *= Int(n - 2 * i);
  }
  return make_rational(num, den);
}

namespace {

// Gamma argument passed as a doubled integer; (k-i) odd is where sqrt(pi)
// enters.
PiScaled a_factor(const Partition& lambda, int k, int n) {
  PiScaled a = PiScaled::one();
  for (int i = 1; i <= k; ++i)
    a *= gamma_half(2L * (n - 2 * k + 1 + lambda.part(i - 1)) + (k - i));
  return a;
}

PiScaled b_factor(const Partition& lambda, int k, int d = 1) {
  PiScaled b = PiScaled::one();
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      long diff = lambda.part(i - 1) - lambda.part(j - 1);
      b *= gamma_half(2 * diff + static_cast<long>(d) * (j - i + 1));
      b /= gamma_half(2 * diff + static_cast<long>(d) * (j - i));
    }
  return b;
}

}  // namespace

DegreeReport degree(int k, int n) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("degree: need 1 <= k <= n-1");
  const int k_orig = k;
  if (2 * k > n) k = n - k;  // duality

  DegreeReport report;
  report.k = k_orig;
  report.n = n;
  report.method = "formula";
  report.alpha_kn = alpha_coefficient(k, n);

  JackExpansion expansion = jack_expand(product_of_pair_sums(k), Rational(2));

  PiScaled total;
  for (const Partition& lambda : enumerate_dominators(k)) {
    DegreeTerm term;
    term.lambda = lambda;
    term.a = a_factor(lambda, k, n);
    term.b = b_factor(lambda, k);
    auto it = expansion.coeffs.find(lambda);
    term.c = it == expansion.coeffs.end() ? Rational(0) : it->second;
    total += term.a * term.b * term.c;
    report.terms.push_back(std::move(term));
  }
  report.degree = to_integer(total * report.alpha_kn);
  if (report.degree < 1) throw std::runtime_error("degree: assembled a non-positive value");
  return report;
}

Int closed_form_degree(int k, int n) {
  switch (k) {
    case 1: {
      if (n < 2) throw std::invalid_argument("closed_form_degree: need n >= 2 for k = 1");
      Int r = 1;
      mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n - 1));
      return r;
    }
    case 2: {
      if (n < 3) throw std::invalid_argument("closed_form_degree: need n >= 3 for k = 2");
      return 2 * binomial(2 * n - 4, n - 2);
    }
    case 3: {
      if (n < 5) throw std::invalid_argument("closed_form_degree: need n >= 5 for k = 3");
      Rational r = Rational(8 * n - 25) * Rational(double_factorial(2 * n - 9));
      r /= Rational(factorial(n - 2));
      Int pw = 1;
      mpz_mul_2exp(pw.get_mpz_t(), pw.get_mpz_t(), static_cast<unsigned long>(2 * n - 6));
      r *= Rational(pw);
      if (r.get_den() != 1) throw std::runtime_error("closed_form_degree: k=3 not integral");
      return r.get_num();
    }
    case 4: {
      if (n < 7) throw std::invalid_argument("closed_form_degree: need n >= 7 for k = 4");
      Rational r = Rational(32L * n * n - 288L * n + 634);
      r *= Rational(double_factorial(2 * n - 13)) * Rational(double_factorial(2 * n - 9));
      r /= Rational(factorial(n - 2) * factorial(n - 4));
      Int pw = 1;
      mpz_mul_2exp(pw.get_mpz_t(), pw.get_mpz_t(), static_cast<unsigned long>(2 * n - 6));
      r *= Rational(pw);
      if (r.get_den() != 1) throw std::runtime_error("closed_form_degree: k=4 not integral");
      return r.get_num();
    }
    default:
      throw std::invalid_argument("closed_form_degree: k must be in 1..4");
  }
}

Int plucker_degree(int k, int n) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("plucker_degree: need 1 <= k <= n-1");
  Rational r(factorial(static_cast<long>(k) * (n - k)));
  for (long j = 1; j <= k; ++j)
    for (long f = j; f <= j + n - k - 1; ++f) r /= Rational(f);
  if (r.get_den() != 1) throw std::runtime_error("plucker_degree: not integral");
  return r.get_num();
}

Rational degree_ratio(int k, int n) {
  return make_rational(degree(k, n).degree, plucker_degree(k, n));
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(long x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * Rational(x) + *it;
  return acc;
}

std::string RationalPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += to_string(coeffs_[i]);
    if (i >= 1) s += "*n";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Rational any_degree_prefactor(int k, int n) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("any_degree_prefactor: need 1 <= k <= n/2");
  Rational r(1);
  for (long j = 0; j <= (k - 1) / 2; ++j) r *= Rational(factorial(n - 2 * k + 2 * j));
  for (long j = 1; j <= k / 2; ++j) r *= Rational(double_factorial(2 * (n - 2 * k + 2 * j) - 1));
  long e = (k / 2) * (n - 2 * k + k / 2 - 1);
  Int pw = 1;
  mpz_mul_2exp(pw.get_mpz_t(), pw.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0)
    r /= Rational(pw);
  else
    r *= Rational(pw);
  return r;
}

long pk_degree_bound(int k) {
  long bound = static_cast<long>(k) * (k - 1) / 2;
  for (int i = 1; i <= k; ++i) bound -= i / 2;
  return bound;
}

namespace {

// Newton interpolation through (x_i, y_i), exact.
RationalPolynomial interpolate(const std::vector<std::pair<long, Rational>>& pts) {
  const std::size_t n = pts.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(pts[i].first - pts[i - level].first);
  std::vector<Rational> coeffs{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // multiply by (x - x_i) and add dd[i]
    coeffs.insert(coeffs.begin(), Rational(0));
    for (std::size_t j = 0; j + 1 < coeffs.size(); ++j)
      coeffs[j] -= Rational(pts[i].first) * coeffs[j + 1];
    coeffs[0] += dd[i];
  }
  return RationalPolynomial(std::move(coeffs));
}

Rational pk_value(int k, int n) {
  Rational d(degree(k, n).degree);
  return d / (alpha_coefficient(k, n) * any_degree_prefactor(k, n));
}

}  // namespace

RationalPolynomial interpolate_Pk(int k) {
  if (k < 1) throw std::invalid_argument("interpolate_Pk: k must be positive");
  const long bound = pk_degree_bound(k);
  std::vector<std::pair<long, Rational>> pts;
  for (long n = 2 * k; n <= 2 * k + bound; ++n) pts.emplace_back(n, pk_value(k, static_cast<int>(n)));
  RationalPolynomial poly = interpolate(pts);
  for (long n = 2 * k + bound + 1; n <= 2 * k + bound + 2; ++n) {
    if (poly(n) != pk_value(k, static_cast<int>(n)))
      throw DegreeBoundViolatedError("interpolate_Pk: values for k = " + std::to_string(k) +
                                     " do not fit a polynomial of degree " +
                                     std::to_string(bound));
  }
  return poly;
}

Rational selberg_rhs(int m, int p, int d) {
  if (m < 1 || p < 1 || d < 1) throw std::invalid_argument("selberg_rhs: need m, p, d >= 1");
  // staircase scaled by d; candidate lambdas are the support of the expansion
  std::vector<long> dd(m);
  for (int i = 0; i < m; ++i) dd[i] = static_cast<long>(d) * (m - 1 - i);
  Partition ddelta(dd);
  JackExpansion expansion =
      jack_expand(product_of_pair_sums(m, d), make_rational(Int(2), Int(d)));

  PiScaled total;
  for (const Partition& lambda : partitions_with_at_most(ddelta.sum(), m)) {
    if (!dominates(ddelta, lambda)) continue;
    auto it = expansion.coeffs.find(lambda);
    if (it == expansion.coeffs.end()) continue;
    PiScaled a = PiScaled::one();
    for (int i = 1; i <= m; ++i)
      a *= gamma_half(2 * (lambda.part(i - 1) + p + 1) + static_cast<long>(d) * (m - i));
    total += a * b_factor(lambda, m, d) * it->second;
  }
  if (total.half_pi_exp() != 0)
    throw NonIntegralError(total);  // sqrt(pi) must cancel in the full sum
  Rational denom(factorial(static_cast<long>(m) * (p + 1 + static_cast<long>(d) * (m - 1))));
  return total.coeff() / denom;
}

SelbergMC selberg_monte_carlo(int m, int p, int d, long samples, std::uint64_t seed) {
  if (m < 1 || p < 1 || d < 1) throw std::invalid_argument("selberg_monte_carlo: need m, p, d >= 1");
  if (samples < 1) throw std::invalid_argument("selberg_monte_carlo: need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> x(m);
  double sum = 0, sum_sq = 0;
  long accepted = 0;
  for (long s = 0; s < samples; ++s) {
    double total = 0;
    bool ok = true;
    for (int i = 0; i < m; ++i) {
      x[i] = unif(rng);
      total += x[i];
    }
    if (total > 1.0) ok = false;
    for (int i = 0; ok && i + 1 < m; ++i)
      if (x[i] < x[i + 1]) ok = false;
    double value = 0;
    if (ok) {
      ++accepted;
      value = 1;
      for (int i = 0; i < m; ++i) value *= std::pow(x[i], p);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) value *= std::pow(x[i] * x[i] - x[j] * x[j], d);
    }
    sum += value;
    sum_sq += value * value;
  }
  SelbergMC out;
  out.samples = samples;
  out.accepted = accepted;
  out.seed = seed;
  out.estimate = sum / static_cast<double>(samples);
  double variance = sum_sq / static_cast<double>(samples) - out.estimate * out.estimate;
  out.std_error = std::sqrt(std::max(variance, 0.0) / static_cast<double>(samples));
  return out;
}

}  // namespace grassdeg
