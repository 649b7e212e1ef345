#ifndef ASSOSYM_MONOMIAL_HPP
#define ASSOSYM_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "assosym/bigint.hpp"
#include "assosym/errors.hpp"

namespace assosym {

/// Nonassociative monomial: a planar binary tree whose leaves carry generator
/// indices (1-based).
///
/// Stored in prefix (Polish) form: 0 marks an internal node, a positive value
/// a leaf. Monomials compare by shape first, then by the leaf label sequence.
/// Shapes compare by the sequence of left-subtree sizes of their internal
/// nodes in prefix order, which equals the recursive order "root left size,
/// then left subtree, then right subtree".
class Monomial {
public:
  Monomial() = default;

  /// Throws ArgumentError if `code` is not a well-formed prefix tree.
  explicit Monomial(std::string code) : code_(std::move(code)) {
    int need = 1;
    for (char c : code_) {
      if (need == 0)
        throw ArgumentError("monomial code has trailing symbols");
      need += c == 0 ? 1 : -1;
    }
    if (need != 0 || code_.empty())
      throw ArgumentError("monomial code is incomplete");
  }

  static Monomial leaf(int label) {
    return Monomial(std::string(1, static_cast<char>(label)));
  }

  static Monomial product(const Monomial& a, const Monomial& b) {
    std::string c(1, '\0');
    c += a.code_;
    c += b.code_;
    Monomial m;
    m.code_ = std::move(c);
    return m;
  }

  const std::string& code() const { return code_; }

  int degree() const {
    return static_cast<int>(std::count_if(code_.begin(), code_.end(),
                                          [](char c) { return c != 0; }));
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (char c : code_)
      if (c != 0)
        out.push_back(static_cast<unsigned char>(c));
    return out;
  }

  /// Left-subtree sizes of internal nodes in prefix order.
  std::vector<int> shape_key() const {
    std::vector<int> key;
    key.reserve(code_.size() / 2);
    std::size_t pos = 0;
    shape_rec(pos, key);
    return key;
  }

  /// Same tree with every label l replaced by perm[l - 1].
  Monomial relabeled(std::span<const int> perm) const {
    Monomial m = *this;
    for (char& c : m.code_)
      if (c != 0)
        c = static_cast<char>(perm[static_cast<unsigned char>(c) - 1]);
    return m;
  }

  /// Fully parenthesized text, e.g. "((x1x2)x3)".
  std::string str() const {
    std::size_t pos = 0;
    return str_rec(pos);
  }

  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (a.code_.size() != b.code_.size())
      return a.code_.size() <=> b.code_.size();
    if (auto c = a.shape_key() <=> b.shape_key(); c != 0)
      return c;
    return a.labels() <=> b.labels();
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
  int shape_rec(std::size_t& pos, std::vector<int>& key) const {
    if (code_[pos++] != 0)
      return 1;
    const std::size_t slot = key.size();
    key.push_back(0);
    const int left = shape_rec(pos, key);
    key[slot] = left;
    return left + shape_rec(pos, key);
  }

  std::string str_rec(std::size_t& pos) const {
    const char c = code_[pos++];
    if (c != 0)
      return "x" + std::to_string(static_cast<unsigned char>(c));
    std::string left = str_rec(pos);
    return "(" + left + str_rec(pos) + ")";
  }

  std::string code_;
};

/// Sparse linear combination of monomials with exact rational coefficients.
/// Zero coefficients are never stored.
class LinearCombination {
public:
  using Terms = std::map<Monomial, Rational>;

  void add(const Monomial& m, const Rational& c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Rational& scale = 1) {
    for (const auto& [m, c] : other.terms_)
      add(m, c * scale);
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const LinearCombination&,
                         const LinearCombination&) = default;

private:
  Terms terms_;
};

namespace detail {

inline void shapes_rec(int leaves, std::vector<std::string>& out) {
  if (leaves == 1) {
    out.emplace_back(1, '\x01');
    return;
  }
  for (int left = 1; left < leaves; ++left) {
    std::vector<std::string> ls, rs;
    shapes_rec(left, ls);
    shapes_rec(leaves - left, rs);
    for (const auto& l : ls)
      for (const auto& r : rs)
        out.push_back(std::string(1, '\0') + l + r);
  }
}

} // namespace detail

/// All planar binary tree shapes with `leaves` leaves in canonical order, as
/// prefix codes whose leaves are filled with placeholder 1.
inline std::vector<std::string> tree_shapes(int leaves) {
  if (leaves < 1)
    throw ArgumentError("tree_shapes: need at least one leaf");
  std::vector<std::string> out;
  detail::shapes_rec(leaves, out);
  return out;
}

/// All monomials whose leaf labels are a rearrangement of `labels`, in
/// canonical order. Repeated labels give each distinct monomial once.
inline std::vector<Monomial> monomials_with_labels(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<Monomial> out;
  for (const auto& shape : tree_shapes(static_cast<int>(labels.size()))) {
    std::vector<int> perm = labels;
    do {
      std::string code = shape;
      std::size_t k = 0;
      for (char& c : code)
        if (c != 0)
          c = static_cast<char>(perm[k++]);
      out.emplace_back(std::move(code));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

/// The n! * Catalan(n-1) multilinear monomials of degree n, canonical order.
inline std::vector<Monomial> enumerate_multilinear(int n) {
  if (n < 1 || n > 6)
    throw SizeLimitError("enumerate_multilinear: n must be in 1..6");
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i)
    labels[i] = i + 1;
  return monomials_with_labels(labels);
}

} // namespace assosym

#endif // ASSOSYM_MONOMIAL_HPP
