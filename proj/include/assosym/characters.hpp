#ifndef ASSOSYM_CHARACTERS_HPP
#define ASSOSYM_CHARACTERS_HPP

#include <algorithm>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "assosym/bigint.hpp"
#include "assosym/decomposition.hpp"
#include "assosym/errors.hpp"
#include "assosym/partitions.hpp"

namespace assosym {

/// A partition read as a conjugacy class of S_n (multiset of cycle lengths).
using CycleType = Partition;

/// Class function on S_n, one value per cycle type in canonical order.
struct CharacterVector {
  int n = 0;
  std::vector<BigInt> values;

  friend bool operator==(const CharacterVector&,
                         const CharacterVector&) = default;
};

/// Rows are irreducible characters, columns conjugacy classes; both indexed
/// by generate_partitions(n).
struct CharacterTable {
  int n = 0;
  std::vector<Partition> labels;
  std::vector<std::vector<BigInt>> values;

  CharacterVector row(std::size_t i) const { return {n, values[i]}; }
};

/// Index of a partition of n within generate_partitions(n).
inline std::size_t canonical_index(const Partition& p) {
  const auto all = generate_partitions(p.size());
  const auto it = std::find(all.begin(), all.end(), p);
  return static_cast<std::size_t>(it - all.begin());
}

/// n! / z_mu.
inline BigCount class_size(const CycleType& mu) {
  BigCount z = 1;
  std::map<int, int> mult;
  for (int part : mu.parts())
    ++mult[part];
  for (const auto& [len, m] : mult) {
    z *= power(len, static_cast<unsigned long>(m));
    z *= factorial(static_cast<unsigned long>(m));
  }
  return factorial(static_cast<unsigned long>(mu.size())) / z;
}

/// +1 for even classes, -1 for odd.
inline int class_sign(const CycleType& mu) {
  return (mu.size() - mu.length()) % 2 == 0 ? 1 : -1;
}

namespace detail {

// Murnaghan-Nakayama on beta-sets: removing a border strip of length k is
// sliding one bead from position b to the free position b - k; the strip's
// height is the number of beads jumped over.
class MnEvaluator {
public:
  explicit MnEvaluator(std::vector<int> cycle_lengths)
      : cycles_(std::move(cycle_lengths)) {}

  BigInt eval(std::vector<int> beta, std::size_t next) {
    if (next == cycles_.size())
      return 1;
    auto key = std::make_pair(beta, next);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    const int k = cycles_[next];
    BigInt total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - k;
      if (target < 0 ||
          std::find(beta.begin(), beta.end(), target) != beta.end())
        continue;
      int jumped = 0;
      for (int b : beta)
        if (b > target && b < beta[i])
          ++jumped;
      std::vector<int> moved = beta;
      moved[i] = target;
      std::sort(moved.begin(), moved.end());
      BigInt sub = eval(std::move(moved), next + 1);
      if (jumped % 2)
        total -= sub;
      else
        total += sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

private:
  std::vector<int> cycles_;
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo_;
};

inline std::vector<int> beta_set(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<int> beta;
  for (int i = 0; i < len; ++i)
    beta.push_back(lambda[i] + (len - 1 - i));
  std::sort(beta.begin(), beta.end());
  return beta;
}

} // namespace detail

/// Irreducible character value chi_lambda(mu).
inline BigInt mn_character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size())
    throw DegreeMismatchError("mn_character: lambda and mu differ in size");
  detail::MnEvaluator ev(mu.vec());
  return ev.eval(detail::beta_set(lambda), 0);
}

inline CharacterTable character_table(int n) {
  if (n < 1 || n > 12)
    throw SizeLimitError("character_table: n must be in 1..12");
  CharacterTable t;
  t.n = n;
  t.labels = generate_partitions(n);
  for (const auto& lambda : t.labels) {
    std::vector<BigInt> row;
    const auto beta = detail::beta_set(lambda);
    for (const auto& mu : t.labels) {
      detail::MnEvaluator ev(mu.vec());
      row.push_back(ev.eval(beta, 0));
    }
    t.values.push_back(std::move(row));
  }
  return t;
}

/// (1/n!) sum over classes of |class| * phi * psi.
inline Rational inner_product(const CharacterVector& phi,
                              const CharacterVector& psi) {
  if (phi.n != psi.n || phi.values.size() != psi.values.size())
    throw DegreeMismatchError("inner_product: characters of different degree");
  const auto classes = generate_partitions(phi.n);
  if (classes.size() != phi.values.size())
    throw DegreeMismatchError("inner_product: wrong number of class values");
  BigInt sum = 0;
  for (std::size_t i = 0; i < classes.size(); ++i)
    sum += class_size(classes[i]) * phi.values[i] * psi.values[i];
  Rational r(sum, factorial(static_cast<unsigned long>(phi.n)));
  r.canonicalize();
  return r;
}

/// Number of sigma in S_n with sigma^2 = e.
inline BigCount involution_count(int n) {
  if (n < 0)
    throw ArgumentError("involution_count: n must be non-negative");
  BigCount prev = 1, cur = 1;
  for (int k = 2; k <= n; ++k) {
    BigCount next = cur + BigCount(k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// How a self-conjugate multiplicity m is distributed over the two halves
/// lambda+ and lambda- when restricting to A_n.
enum class SplitConvention {
  /// Each half receives m/2. This is the bookkeeping of the usual A_n
  /// cocharacter tables.
  halved,
  /// Each half receives m, the literal restriction of m copies of S^lambda.
  restriction,
};

/// Restriction of an S_n-decomposition to A_n. Conjugate pairs merge onto the
/// lexicographically larger partition; self-conjugate shapes split into
/// tagged halves.
inline Decomposition restrict_to_alternating(
    std::span<const std::pair<Partition, BigCount>> terms,
    SplitConvention convention = SplitConvention::halved,
    std::optional<int> dim = std::nullopt) {
  if (terms.empty())
    throw ArgumentError("restrict_to_alternating: empty input");
  const int n = terms.front().first.size();
  for (const auto& [shape, mult] : terms)
    if (shape.size() != n)
      throw DegreeMismatchError(
          "restrict_to_alternating: labels of mixed degree");
  if (n < 2)
    throw ArgumentError("restrict_to_alternating: n must be at least 2");

  Decomposition out(n, Group::alternating, dim);
  for (const auto& [shape, mult] : terms) {
    const Partition conj = conjugate(shape);
    if (conj == shape) {
      BigCount half = mult;
      if (convention == SplitConvention::halved) {
        if (mult % 2 != 0)
          throw NonIntegralityError("odd multiplicity on self-conjugate " +
                                    shape.str() + " cannot be halved");
        half = mult / 2;
      }
      out.add(Label{shape, SplitTag::plus}, half);
      out.add(Label{shape, SplitTag::minus}, half);
    } else {
      out.add(Label{std::max(shape, conj), SplitTag::none}, mult);
    }
  }
  return out;
}

inline Decomposition
restrict_to_alternating(const Decomposition& d,
                        SplitConvention convention = SplitConvention::halved) {
  if (d.group() == Group::alternating)
    throw ArgumentError("restrict_to_alternating: input is already an A_n "
                        "decomposition");
  std::vector<std::pair<Partition, BigCount>> terms;
  for (const auto& [label, mult] : d.terms())
    terms.emplace_back(label.shape, mult);
  if (terms.empty())
    return Decomposition(d.n(), Group::alternating, d.dim());
  return restrict_to_alternating(terms, convention, d.dim());
}

} // namespace assosym

#endif // ASSOSYM_CHARACTERS_HPP
