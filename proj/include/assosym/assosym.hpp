#ifndef ASSOSYM_ASSOSYM_HPP
#define ASSOSYM_ASSOSYM_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "assosym/bigint.hpp"
#include "assosym/characters.hpp"
#include "assosym/decomposition.hpp"
#include "assosym/errors.hpp"
#include "assosym/partitions.hpp"

// Closed formulas for the free assosymmetric algebra: dimensions of the
// homogeneous, multihomogeneous and multilinear components, and the module
// structure of the multilinear component P_n under S_n, A_n and GL(V).
//
// P_n splits as the regular module (spanned by left-normed words) plus, for
// k = 0..n-3, the permutation module on the k-subsets of {1..n}. By Young's
// rule the latter contributes S^(n-j, j) for every j <= min(k, n-k).

namespace assosym {

/// (l_1, ..., l_r) with every l_i >= 1.
class MultiDegree {
public:
  explicit MultiDegree(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
      throw ArgumentError("multidegree must have at least one entry");
    for (int l : parts_) {
      if (l == 0)
        throw ZeroPartError("multidegree has a zero part; drop absent "
                            "generators first");
      if (l < 0)
        throw ArgumentError("multidegree entries must be positive");
    }
  }

  int rank() const { return static_cast<int>(parts_.size()); }
  int degree() const {
    int s = 0;
    for (int l : parts_)
      s += l;
    return s;
  }
  const std::vector<int>& parts() const { return parts_; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

private:
  std::vector<int> parts_;
};

/// Number of k in {0, ..., n-3} with second <= min(k, n-k): the multiplicity
/// of S^(n-second, second) coming from the associator part of P_n.
inline BigCount m_multiplicity(int n, int second) {
  if (n < 1)
    throw ArgumentError("m_multiplicity: n must be positive");
  if (second < 0 || 2 * second > n)
    throw ArgumentError("m_multiplicity: need 0 <= lambda_2 <= n/2");
  const int value = second <= 3 ? n - 2 - second : n + 1 - 2 * second;
  return std::max(0, value);
}

/// S_n-module structure of P_n.
inline Decomposition sn_decomposition(int n) {
  if (n < 1)
    throw ArgumentError("sn_decomposition: n must be positive");
  Decomposition d(n, Group::symmetric);
  for (const auto& lambda : generate_partitions(n)) {
    BigCount mult = specht_dim(lambda);
    if (lambda.length() <= 2)
      mult += m_multiplicity(n, lambda[1]);
    d.add(lambda, mult);
  }
  return d;
}

/// Restriction of P_n to A_n, using the tabulated convention for
/// self-conjugate shapes (see SplitConvention::halved).
inline Decomposition
an_decomposition(int n, SplitConvention convention = SplitConvention::halved) {
  if (n < 2)
    throw ArgumentError("an_decomposition: n must be at least 2");
  return restrict_to_alternating(sn_decomposition(n), convention);
}

/// GL(V)-module structure of the degree-n component for dim V = m: the S_n
/// multiplicities with every shape of more than m rows removed.
inline Decomposition gl_decomposition(int n, int m) {
  if (n < 1 || m < 1)
    throw ArgumentError("gl_decomposition: n and m must be positive");
  Decomposition d(n, Group::general_linear, m);
  const Decomposition s = sn_decomposition(n);
  for (const auto& [label, mult] : s.terms())
    if (label.shape.length() <= m)
      d.add(label, mult);
  return d;
}

/// A_n-Weyl multiplicities of the degree-n component for dim V = m.
/// Self-conjugate shapes contribute their full multiplicity to each half;
/// module dimensions are not computed.
inline Decomposition an_gl_decomposition(int n, int m) {
  if (n < 2 || m < 1)
    throw ArgumentError("an_gl_decomposition: need n >= 2 and m >= 1");
  return restrict_to_alternating(gl_decomposition(n, m),
                                 SplitConvention::restriction);
}

/// Dimension of P_n.
inline BigCount codimension(int n) {
  if (n < 1)
    throw ArgumentError("codimension: n must be positive");
  return factorial(static_cast<unsigned long>(n)) +
         power(2, static_cast<unsigned long>(n)) - binomial(n + 1, 2) - 1;
}

/// Dimension of the degree-n component of the free algebra on r generators.
inline BigCount graded_dim(int n, int r) {
  if (n < 1 || r < 1)
    throw ArgumentError("graded_dim: n and r must be positive");
  return power(r, static_cast<unsigned long>(n)) + binomial(n + 2 * r - 1, n) -
         binomial(r + 1, 2) * binomial(n + r - 3, n - 2) -
         BigCount(r) * binomial(n + r - 2, n - 1) - binomial(n + r - 1, n);
}

/// Dimension of the component in which generator i occurs l_i times.
inline BigCount multigraded_dim(const MultiDegree& l) {
  const int r = l.rank();
  BigCount product = 1;
  int ones = 0;
  for (int li : l.parts()) {
    product *= li + 1;
    if (li == 1)
      ++ones;
  }
  return multinomial(l.parts()) + product - binomial(r + 1, 2) - r - 1 + ones;
}

/// Sum of multiplicity times Specht dimension; equals codimension(n) for
/// sn_decomposition(n).
inline BigCount specht_total_dimension(const Decomposition& d) {
  BigCount s = 0;
  for (const auto& [label, mult] : d.terms())
    s += mult * specht_dim(label.shape);
  return s;
}

/// Sum of multiplicity times Weyl dimension for dim V = m.
inline BigCount weyl_total_dimension(const Decomposition& d, int m) {
  BigCount s = 0;
  for (const auto& [label, mult] : d.terms())
    s += mult * weyl_dim(label.shape, m);
  return s;
}

/// Dimension of an A_n-irreducible: d_lambda for a merged label, d_lambda/2
/// for a split half.
inline BigCount alternating_irreducible_dim(const Label& label) {
  const BigCount d = specht_dim(label.shape);
  return label.tag == SplitTag::none ? d : BigCount(d / 2);
}

inline BigCount alternating_total_dimension(const Decomposition& d) {
  BigCount s = 0;
  for (const auto& [label, mult] : d.terms())
    s += mult * alternating_irreducible_dim(label);
  return s;
}

/// S_n-cocharacter of P_n as a class function.
inline CharacterVector cocharacter(int n) {
  if (n < 1 || n > 10)
    throw SizeLimitError("cocharacter: n must be in 1..10");
  const auto table = character_table(n);
  const auto decomp = sn_decomposition(n);
  CharacterVector chi{n, std::vector<BigInt>(table.labels.size(), 0)};
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    const BigCount mult = decomp.at(table.labels[i]);
    for (std::size_t j = 0; j < table.labels.size(); ++j)
      chi.values[j] += mult * table.values[i][j];
  }
  return chi;
}

/// Sum of the S_n-multiplicities of P_n, by the closed formula in the
/// involution number.
inline BigCount colength(int n) {
  if (n < 1)
    throw ArgumentError("colength: n must be positive");
  const BigCount inv = involution_count(n);
  if (n <= 3)
    return inv + (n == 3 ? 1 : 0);
  const long k = n / 2;
  if (n % 2 == 0)
    return inv + k * k + 2 * k - 5;
  return inv + k * k + 3 * k - 4;
}

/// Counts the two kinds of basis words of degree n on r generators by listing
/// them: all r^n left-normed words, and all pairs (head, tail) of
/// non-decreasing index sequences with |tail| >= 3 and |head| + |tail| = n.
inline BigCount basis_count_direct(int n, int r) {
  if (n < 1 || r < 1)
    throw ArgumentError("basis_count_direct: n and r must be positive");
  if (n > 8 || r > 4)
    throw SizeLimitError("basis_count_direct: requires n <= 8 and r <= 4");

  unsigned long long first_kind = 0;
  std::vector<int> word(n, 0);
  for (;;) {
    ++first_kind;
    int pos = n - 1;
    while (pos >= 0 && word[pos] == r - 1)
      word[pos--] = 0;
    if (pos < 0)
      break;
    ++word[pos];
  }

  std::function<void(int, int, std::vector<int>&,
                     std::vector<std::vector<int>>&)>
      nondecreasing = [&](int len, int from, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
        if (static_cast<int>(cur.size()) == len) {
          out.push_back(cur);
          return;
        }
        for (int a = from; a < r; ++a) {
          cur.push_back(a);
          nondecreasing(len, a, cur, out);
          cur.pop_back();
        }
      };

  unsigned long long second_kind = 0;
  for (int tail = 3; tail <= n; ++tail) {
    std::vector<std::vector<int>> heads, tails;
    std::vector<int> cur;
    nondecreasing(n - tail, 0, cur, heads);
    nondecreasing(tail, 0, cur, tails);
    for ([[maybe_unused]] const auto& h : heads)
      for ([[maybe_unused]] const auto& t : tails)
        ++second_kind;
  }
  return BigCount(std::to_string(first_kind + second_kind));
}

/// Multigraded analogue of basis_count_direct: lists the distinct left-normed
/// words with generator i used l_i times, and the heads whose complementary
/// tail has length at least 3. Degree limited to 10.
inline BigCount basis_count_direct(const MultiDegree& l) {
  if (l.degree() > 10)
    throw SizeLimitError("basis_count_direct: degree must be at most 10");
  std::vector<int> word;
  for (int i = 0; i < l.rank(); ++i)
    word.insert(word.end(), static_cast<std::size_t>(l.parts()[i]), i);
  unsigned long long first_kind = 0;
  do {
    ++first_kind;
  } while (std::next_permutation(word.begin(), word.end()));

  // A head takes h_i <= l_i copies of each generator; the tail is the rest.
  unsigned long long second_kind = 0;
  std::vector<int> head(static_cast<std::size_t>(l.rank()), 0);
  for (;;) {
    int tail = l.degree();
    for (int h : head)
      tail -= h;
    if (tail >= 3)
      ++second_kind;
    std::size_t pos = 0;
    while (pos < head.size() && head[pos] == l.parts()[pos])
      head[pos++] = 0;
    if (pos == head.size())
      break;
    ++head[pos];
  }
  return BigCount(std::to_string(first_kind + second_kind));
}

} // namespace assosym

#endif // ASSOSYM_ASSOSYM_HPP
