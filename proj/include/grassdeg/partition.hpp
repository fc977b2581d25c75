#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace grassdeg {

/// Weakly decreasing tuple of nonnegative integers. Trailing zeros are kept
/// as constructed (the staircase (k-1,...,1,0) carries its zero), but
/// comparison and ordering ignore them.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<long> parts);
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  /// Zero-padded access: part(i) = 0 for i >= length().
  long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  /// Number of nonzero parts.
  std::size_t nonzero_length() const;
  long sum() const;
  bool empty_or_zero() const { return nonzero_length() == 0; }

  Partition stripped() const;

  friend bool operator==(const Partition& a, const Partition& b);
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  /// Lexicographic on stripped parts; a strict total order usable as map key.
  friend bool operator<(const Partition& a, const Partition& b);
  friend bool operator>(const Partition& a, const Partition& b) { return b < a; }

  std::string str() const;

 private:
  std::vector<long> parts_;
};

/// Standard dominance: equal sizes and prefix sums of lhs >= those of rhs.
/// Unequal sizes compare false.
bool dominates(const Partition& lhs, const Partition& rhs);

/// delta_k = (k-1, k-2, ..., 1, 0).
Partition staircase(int k);

/// The partitions comparable with the staircase from below: all lambda with
/// at most k parts, |lambda| = k(k-1)/2 and delta_k dominating lambda, in
/// descending lexicographic order. These index the terms of the degree sum:
/// the expansion of prod_{i<j}(x_i + x_j) in the Jack basis is supported here.
std::vector<Partition> enumerate_dominators(int k);

/// All partitions of n with at most max_parts parts, descending lexicographic.
std::vector<Partition> partitions_with_at_most(long n, int max_parts);

/// Highest weight of SO_n(C): floor(n/2) weakly decreasing integers; for odd
/// n all nonnegative, for even n the last coordinate may be negative with
/// coords[m-2] >= |coords[m-1]|.
class SOWeight {
 public:
  SOWeight(int n, std::vector<long> coords);

  int n() const { return n_; }
  const std::vector<long>& coords() const { return coords_; }
  /// |lambda|; for n even the last coordinate enters by absolute value.
  long norm() const;
  /// Same weight with the last coordinate negated (n even only).
  SOWeight negated_last() const;

  friend bool operator==(const SOWeight& a, const SOWeight& b) {
    return a.n_ == b.n_ && a.coords_ == b.coords_;
  }
  friend bool operator<(const SOWeight& a, const SOWeight& b);

  std::string str() const;

 private:
  int n_;
  std::vector<long> coords_;
};

/// The weight semigroup Lambda_{k,n} truncated to |lambda| <= 2*dmax, ordered
/// by norm then descending lexicographic. For k < n/2: first k coordinates
/// even, nonnegative, weakly decreasing, the rest zero. For n = 2k: all
/// coordinates even, last of either sign (emitted once when zero).
std::vector<SOWeight> enumerate_weights(int k, int n, long dmax);

}  // namespace grassdeg
