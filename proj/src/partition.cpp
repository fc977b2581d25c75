#include "grassdeg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grassdeg {

namespace {

void check_weakly_decreasing(const std::vector<long>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::initializer_list<long> parts) : parts_(parts) {
  check_weakly_decreasing(parts_);
}

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  check_weakly_decreasing(parts_);
}

std::size_t Partition::nonzero_length() const {
  std::size_t n = parts_.size();
  while (n > 0 && parts_[n - 1] == 0) --n;
  return n;
}

long Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::stripped() const {
  std::vector<long> p(parts_.begin(), parts_.begin() + nonzero_length());
  return Partition(std::move(p));
}

bool operator==(const Partition& a, const Partition& b) {
  std::size_t la = a.nonzero_length(), lb = b.nonzero_length();
  if (la != lb) return false;
  return std::equal(a.parts_.begin(), a.parts_.begin() + la, b.parts_.begin());
}

bool operator<(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.parts_.begin(), a.parts_.begin() + a.nonzero_length(),
                                      b.parts_.begin(), b.parts_.begin() + b.nonzero_length());
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool dominates(const Partition& lhs, const Partition& rhs) {
  if (lhs.sum() != rhs.sum()) return false;
  std::size_t len = std::max(lhs.length(), rhs.length());
  long sl = 0, sr = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sl += lhs.part(i);
    sr += rhs.part(i);
    if (sl < sr) return false;
  }
  return true;
}

Partition staircase(int k) {
  if (k < 1) throw std::invalid_argument("staircase: k must be positive");
  std::vector<long> parts(k);
  for (int i = 0; i < k; ++i) parts[i] = k - 1 - i;
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_with_at_most(long n, int max_parts) {
  if (n < 0 || max_parts < 0) throw std::invalid_argument("partitions_with_at_most: bad arguments");
  std::vector<Partition> out;
  std::vector<long> cur;
  // largest-first recursion emits descending lexicographic order directly
  auto rec = [&](auto&& self, long rem, long maxv) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (long v = std::min(maxv, rem); v >= 1; --v) {
      cur.push_back(v);
      self(self, rem - v, v);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  if (n == 0) out = {Partition()};
  return out;
}

std::vector<Partition> enumerate_dominators(int k) {
  if (k < 1) throw std::invalid_argument("enumerate_dominators: k must be positive");
  Partition delta = staircase(k);
  long total = static_cast<long>(k) * (k - 1) / 2;
  std::vector<Partition> out;
  for (const Partition& p : partitions_with_at_most(total, k))
    if (dominates(delta, p)) out.push_back(p);
  return out;  // already descending lexicographic
}

SOWeight::SOWeight(int n, std::vector<long> coords) : n_(n), coords_(std::move(coords)) {
  if (n < 2) throw std::invalid_argument("SOWeight: n must be at least 2");
  std::size_t m = static_cast<std::size_t>(n / 2);
  if (coords_.size() != m)
    throw std::invalid_argument("SOWeight: expected " + std::to_string(m) + " coordinates");
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (coords_[i] < coords_[i + 1]) throw std::invalid_argument("SOWeight: not weakly decreasing");
  if (n % 2 == 1) {
    if (m > 0 && coords_[m - 1] < 0) throw std::invalid_argument("SOWeight: negative coordinate");
  } else if (m >= 2 && coords_[m - 2] < std::abs(coords_[m - 1])) {
    throw std::invalid_argument("SOWeight: last coordinate exceeds the one before in magnitude");
  }
}

long SOWeight::norm() const {
  long s = 0;
  for (std::size_t i = 0; i + 1 < coords_.size(); ++i) s += coords_[i];
  if (!coords_.empty()) {
    long last = coords_.back();
    s += (n_ % 2 == 0) ? std::abs(last) : last;
  }
  return s;
}

SOWeight SOWeight::negated_last() const {
  if (n_ % 2 != 0) throw std::invalid_argument("SOWeight::negated_last: n must be even");
  std::vector<long> c = coords_;
  if (!c.empty()) c.back() = -c.back();
  return SOWeight(n_, std::move(c));
}

bool operator<(const SOWeight& a, const SOWeight& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.coords_ < b.coords_;
}

std::string SOWeight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::vector<SOWeight> enumerate_weights(int k, int n, long dmax) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("enumerate_weights: need 1 <= k <= n/2");
  if (dmax < 0) throw std::invalid_argument("enumerate_weights: dmax must be nonnegative");
  int m = n / 2;
  long cap = 2 * dmax;
  std::vector<SOWeight> out;
  std::vector<long> cur;

  if (n > 2 * k) {
    // even nonnegative decreasing on the first k coordinates, zero beyond
    auto rec = [&](auto&& self, int idx, long maxv, long used) -> void {
      if (idx == k) {
        std::vector<long> c = cur;
        c.resize(m, 0);
        out.emplace_back(n, std::move(c));
        return;
      }
      for (long v = std::min(maxv, cap - used) / 2 * 2; v >= 0; v -= 2) {
        cur.push_back(v);
        self(self, idx + 1, v, used + v);
        cur.pop_back();
      }
    };
    rec(rec, 0, cap, 0);
  } else {
    // n = 2k: all coordinates even, last of either sign
    auto rec = [&](auto&& self, int idx, long maxv, long used) -> void {
      if (idx == k - 1) {
        for (long v = std::min(maxv, cap - used) / 2 * 2; v >= 0; v -= 2) {
          std::vector<long> c = cur;
          c.push_back(v);
          out.emplace_back(n, c);
          if (v > 0) {
            c.back() = -v;
            out.emplace_back(n, std::move(c));
          }
        }
        return;
      }
      for (long v = std::min(maxv, cap - used) / 2 * 2; v >= 0; v -= 2) {
        cur.push_back(v);
        self(self, idx + 1, v, used + v);
        cur.pop_back();
      }
    };
    rec(rec, 0, cap, 0);
  }

  std::sort(out.begin(), out.end(), [](const SOWeight& a, const SOWeight& b) {
    if (a.norm() != b.norm()) return a.norm() < b.norm();
    return b.coords() < a.coords();  // descending lexicographic within a norm
  });
  return out;
}

}  // namespace grassdeg
