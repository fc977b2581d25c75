#include "grassdeg/repdim.hpp"

#include <string>

namespace grassdeg {

Int so_dim(int n, const SOWeight& lambda) {
  if (lambda.n() != n) throw std::invalid_argument("so_dim: weight belongs to a different n");
  const int m = n / 2;
  const auto& c = lambda.coords();
  Rational dim(1);
  if (n % 2 == 1) {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        dim *= make_rational(Int(c[i - 1] - c[j - 1] - i + j), Int(j - i));
    for (int i = 1; i <= m; ++i)
      for (int j = i; j <= m; ++j)
        dim *= make_rational(Int(c[i - 1] + c[j - 1] + n - i - j), Int(n - i - j));
  } else {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        dim *= make_rational(Int(c[i - 1] - c[j - 1] - i + j), Int(j - i));
        dim *= make_rational(Int(c[i - 1] + c[j - 1] + n - i - j), Int(n - i - j));
      }
  }
  if (dim.get_den() != 1 || dim <= 0)
    throw std::invalid_argument("so_dim: formula did not produce a positive integer for " +
                                lambda.str());
  return dim.get_num();
}

Int hilbert_sum(int k, int n, long d) {
  Int total = 0;
  for (const SOWeight& w : enumerate_weights(k, n, d)) total += so_dim(n, w);
  return total;
}

HilbertProfile hilbert_profile(int k, int n, long dmax) {
  HilbertProfile profile;
  profile.k = k;
  profile.n = n;
  profile.p = static_cast<long>(k) * (n - k);
  for (long d = 0; d <= dmax; ++d) profile.values.emplace_back(d, hilbert_sum(k, n, d));
  return profile;
}

Int degree_by_differences(int k, int n, const DifferenceOptions& opts) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("degree_by_differences: need 1 <= k <= n/2");
  const long p = static_cast<long>(k) * (n - k);
  if (p > opts.max_p)
    throw BudgetExceededError("degree_by_differences: p = " + std::to_string(p) +
                              " exceeds budget " + std::to_string(opts.max_p));

  // F(d) cache shared across base points
  std::vector<Int> f;
  auto F = [&](long d) -> const Int& {
    while (static_cast<long>(f.size()) <= d) f.push_back(hilbert_sum(k, n, static_cast<long>(f.size())));
    return f[d];
  };

  auto pth_difference = [&](long d0) {
    std::vector<Int> v;
    v.reserve(p + 1);
    for (long i = 0; i <= p; ++i) v.push_back(F(d0 + i));
    for (long r = 0; r < p; ++r)
      for (std::size_t i = 0; i + 1 + r < v.size(); ++i) v[i] = v[i + 1] - v[i];
    return v[0];
  };

  Int prev = pth_difference(p);
  for (int step = 1; step < opts.max_base_points; ++step) {
    Int cur = pth_difference(p + step);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw NotStabilizedError("degree_by_differences: no stabilization for k=" + std::to_string(k) +
                           ", n=" + std::to_string(n) + " within " +
                           std::to_string(opts.max_base_points) + " base points");
}

}  // namespace grassdeg
