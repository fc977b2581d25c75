#include "grassdeg/sympoly.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace grassdeg {

SymPoly::SymPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("SymPoly: need at least one variable");
}

Rational SymPoly::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  if (lambda.nonzero_length() > static_cast<std::size_t>(num_vars_))
    throw std::invalid_argument("SymPoly: partition has more parts than variables");
  Partition key = lambda.stripped();
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
  if (rhs.num_vars_ != num_vars_) throw std::invalid_argument("SymPoly: variable count mismatch");
  for (const auto& [lam, c] : rhs.terms_) add_term(lam, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs) {
  if (rhs.num_vars_ != num_vars_) throw std::invalid_argument("SymPoly: variable count mismatch");
  for (const auto& [lam, c] : rhs.terms_) add_term(lam, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lam, v] : terms_) v *= c;
  return *this;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<long>& v) const {
    std::size_t h = v.size();
    for (long x : v) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
    return h;
  }
};

}  // namespace

SymPoly product_of_pair_sums(int k, int power) {
  if (k < 1) throw std::invalid_argument("product_of_pair_sums: k must be positive");
  if (power < 1) throw std::invalid_argument("product_of_pair_sums: power must be positive");
  // expand on exponent vectors, then collect sorted representatives
  std::unordered_map<std::vector<long>, Rational, VecHash> poly;
  poly.emplace(std::vector<long>(k, 0), Rational(1));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      for (int rep = 0; rep < power; ++rep) {
        std::unordered_map<std::vector<long>, Rational, VecHash> next;
        next.reserve(poly.size() * 2);
        for (const auto& [ex, c] : poly) {
          std::vector<long> e = ex;
          ++e[i];
          next[e] += c;
          --e[i];
          ++e[j];
          next[std::move(e)] += c;
        }
        poly = std::move(next);
      }
    }
  }
  SymPoly out(k);
  for (const auto& [ex, c] : poly) {
    if (std::is_sorted(ex.begin(), ex.end(), std::greater<long>()))
      out.add_term(Partition(ex), c);
  }
  return out;
}

namespace {

// eigenvalue of the alpha-deformed Laplace-Beltrami operator on m_mu,
// mu padded to num_vars coordinates
Rational lb_eigenvalue(const Partition& mu, const Rational& alpha, int num_vars) {
  Rational e(0);
  for (int i = 0; i < num_vars; ++i) {
    long x = mu.part(i);
    e += alpha * Rational(x * (x - 1)) / 2 + Rational((num_vars - 1 - i) * x);
  }
  return e;
}

struct JackKey {
  std::vector<long> lambda;
  Rational alpha;
  int num_vars;
  bool operator<(const JackKey& o) const {
    return std::tie(lambda, num_vars) < std::tie(o.lambda, o.num_vars) ||
           (lambda == o.lambda && num_vars == o.num_vars && cmp(alpha, o.alpha) < 0);
  }
};

std::mutex jack_cache_mutex;
std::map<JackKey, SymPoly>& jack_cache() {
  static std::map<JackKey, SymPoly> cache;
  return cache;
}

SymPoly compute_jack(const Partition& lambda, const Rational& alpha, int num_vars) {
  const long n_total = lambda.sum();
  const Rational e_lambda = lb_eigenvalue(lambda, alpha, num_vars);

  // coefficients of m_nu, solved top-down in descending lexicographic order
  // (a linear extension of dominance)
  std::map<Partition, Rational> coeffs;
  coeffs.emplace(lambda.stripped(), Rational(1));

  std::vector<Partition> all = partitions_with_at_most(n_total, num_vars);
  for (const Partition& nu : all) {
    if (!(nu < lambda)) continue;
    if (!dominates(lambda, nu)) continue;
    // sum over raising moves: pick positions i < j among the nonzero parts of
    // nu with values (c, d) and replace them by (A, B), A > max(c,d),
    // B = c + d - A >= 0; the source partition contributes with weight A - B
    Rational total(0);
    const std::size_t len = nu.nonzero_length();
    std::vector<long> scratch(nu.parts().begin(), nu.parts().begin() + len);
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        const long c = scratch[i], d = scratch[j];
        for (long A = std::max(c, d) + 1; A <= c + d; ++A) {
          const long B = c + d - A;
          scratch[i] = A;
          scratch[j] = B;
          std::vector<long> sorted = scratch;
          std::sort(sorted.begin(), sorted.end(), std::greater<long>());
          auto it = coeffs.find(Partition(std::move(sorted)));
          if (it != coeffs.end()) total += Rational(A - B) * it->second;
          scratch[i] = c;
          scratch[j] = d;
        }
      }
    }
    if (total == 0) continue;
    Rational gap = e_lambda - lb_eigenvalue(nu, alpha, num_vars);
    if (gap == 0)
      throw NotInSpanError("jack_P: eigenvalue collision at " + nu.str());
    coeffs.emplace(nu.stripped(), total / gap);
  }

  SymPoly out(num_vars);
  for (const auto& [mu, c] : coeffs) out.add_term(mu, c);
  return out;
}

}  // namespace

SymPoly jack_P(const Partition& lambda, const Rational& alpha, int num_vars) {
  if (alpha <= 0) throw std::invalid_argument("jack_P: alpha must be positive");
  if (lambda.nonzero_length() > static_cast<std::size_t>(num_vars))
    throw std::invalid_argument("jack_P: partition has more parts than variables");
  JackKey key{lambda.stripped().parts(), alpha, num_vars};
  {
    std::lock_guard<std::mutex> lock(jack_cache_mutex);
    auto it = jack_cache().find(key);
    if (it != jack_cache().end()) return it->second;
  }
  SymPoly result = compute_jack(lambda.stripped(), alpha, num_vars);
  {
    std::lock_guard<std::mutex> lock(jack_cache_mutex);
    return jack_cache().emplace(std::move(key), std::move(result)).first->second;
  }
}

JackExpansion jack_expand(const SymPoly& f, const Rational& alpha) {
  JackExpansion out{alpha, {}};
  SymPoly residual = f;
  while (!residual.is_zero()) {
    // leading key: largest size, then lexicographically largest; it is not
    // dominated by anything else of its size in the residual
    auto lead = residual.terms().begin();
    for (auto it = residual.terms().begin(); it != residual.terms().end(); ++it) {
      if (it->first.sum() > lead->first.sum() ||
          (it->first.sum() == lead->first.sum() && lead->first < it->first))
        lead = it;
    }
    Partition lambda = lead->first;
    Rational c = lead->second;
    SymPoly p = jack_P(lambda, alpha, f.num_vars());
    if (p.coeff(lambda) != 1)
      throw NotInSpanError("jack_expand: basis polynomial not monic at " + lambda.str());
    residual -= p * c;
    if (residual.coeff(lambda) != 0)
      throw NotInSpanError("jack_expand: leading term survived at " + lambda.str());
    out.coeffs.emplace(std::move(lambda), std::move(c));
  }
  return out;
}

}  // namespace grassdeg
