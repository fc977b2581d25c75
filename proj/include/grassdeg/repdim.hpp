#pragma once

#include <utility>
#include <vector>

#include "grassdeg/partition.hpp"
#include "grassdeg/rational.hpp"

namespace grassdeg {

/// Weyl dimension of the irreducible SO_n(C)-module with highest weight
/// lambda. Intermediates are kept rational and converted at the end.
Int so_dim(int n, const SOWeight& lambda);

/// F(d) = sum of so_dim over the weights of Lambda_{k,n} with norm <= 2d.
Int hilbert_sum(int k, int n, long d);

struct HilbertProfile {
  int k = 0;
  int n = 0;
  long p = 0;  // k(n-k)
  std::vector<std::pair<long, Int>> values;
};

/// F(0..dmax) for reporting.
HilbertProfile hilbert_profile(int k, int n, long dmax);

class NotStabilizedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DifferenceOptions {
  long max_p = 12;          // refuse k(n-k) beyond this
  int max_base_points = 32;  // NotStabilized beyond this many attempts
};

/// Degree via the Hilbert route: p-th forward differences of F taken at base
/// points d0 = p, p+1, ... until two consecutive base points agree. This is
/// the independent cross-check of the closed formula.
Int degree_by_differences(int k, int n, const DifferenceOptions& opts = {});

}  // namespace grassdeg
