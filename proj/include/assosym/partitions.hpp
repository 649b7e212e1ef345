#ifndef ASSOSYM_PARTITIONS_HPP
#define ASSOSYM_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "assosym/bigint.hpp"
#include "assosym/errors.hpp"

namespace assosym {

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
class Partition {
public:
  Partition() = default;

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw ArgumentError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw ArgumentError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// Sum of the parts.
  int size() const { return size_; }
  /// Number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// The i-th part (0-based); 0 past the end.
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  /// Lexicographic comparison of the part sequences.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) = default;

  /// "(3,1)"; the empty partition prints as "()".
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Strict weak order placing partitions in the canonical (reverse
/// lexicographic) order: (n) first, (1^n) last.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return a > b;
  }
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

} // namespace detail

/// All partitions of n in canonical order.
inline std::vector<Partition> generate_partitions(int n) {
  if (n < 0)
    throw ArgumentError("generate_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  for (int j = 0; j < p[0]; ++j) {
    int c = 0;
    while (c < p.length() && p[c] > j)
      ++c;
    cols.push_back(c);
  }
  return Partition(std::move(cols));
}

inline bool is_self_conjugate(const Partition& p) {
  return conjugate(p) == p;
}

/// Hook lengths row by row.
inline std::vector<std::vector<int>> hook_lengths(const Partition& p) {
  const Partition c = conjugate(p);
  std::vector<std::vector<int>> hooks(p.length());
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j)
      hooks[i].push_back((p[i] - j - 1) + (c[j] - i - 1) + 1);
  return hooks;
}

/// Dimension of the Specht module, n! divided by the product of hook lengths.
inline BigCount specht_dim(const Partition& p) {
  BigCount denom = 1;
  for (const auto& row : hook_lengths(p))
    for (int h : row)
      denom *= h;
  return factorial(p.size()) / denom;
}

/// Counts standard Young tableaux by placing 1..n one at a time.
/// Independent of the hook length formula; limited to n <= 12.
inline BigCount syt_count_bruteforce(const Partition& p) {
  if (p.size() > 12)
    throw SizeLimitError("syt_count_bruteforce: n must be at most 12");
  std::vector<int> filled(p.length(), 0);
  std::function<unsigned long long(int)> place = [&](int left) {
    if (left == 0)
      return 1ULL;
    unsigned long long total = 0;
    for (int r = 0; r < p.length(); ++r) {
      // The next entry may go at the end of row r if that cell exists and the
      // cell above it is already filled.
      if (filled[r] < p[r] && (r == 0 || filled[r - 1] > filled[r])) {
        ++filled[r];
        total += place(left - 1);
        --filled[r];
      }
    }
    return total;
  };
  return BigCount(std::to_string(place(p.size())));
}

/// Dimension of the irreducible polynomial GL_m-module with highest weight p
/// (hook-content formula). Zero when p has more than m rows.
inline BigCount weyl_dim(const Partition& p, int m) {
  if (m < 1)
    throw ArgumentError("weyl_dim: m must be positive");
  if (p.length() > m)
    return 0;
  const auto hooks = hook_lengths(p);
  BigCount num = 1, den = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      num *= m + j - i;
      den *= hooks[i][j];
    }
  return num / den;
}

/// Partitions of n with at most two rows, by decreasing first part. The shape
/// (n, 0) is represented by the one-row partition (n).
inline std::vector<Partition> two_row_partitions(int n) {
  if (n < 1)
    throw ArgumentError("two_row_partitions: n must be positive");
  std::vector<Partition> out;
  for (int second = 0; 2 * second <= n; ++second)
    out.push_back(second == 0 ? Partition{n} : Partition{n - second, second});
  return out;
}

inline BigCount multinomial(std::span<const int> parts) {
  long total = 0;
  BigCount den = 1;
  for (int l : parts) {
    if (l < 0)
      throw ArgumentError("multinomial: entries must be non-negative");
    total += l;
    den *= factorial(static_cast<unsigned long>(l));
  }
  return factorial(static_cast<unsigned long>(total)) / den;
}

inline BigCount multinomial(std::initializer_list<int> parts) {
  return multinomial(std::span<const int>(parts.begin(), parts.size()));
}

} // namespace assosym

#endif // ASSOSYM_PARTITIONS_HPP
