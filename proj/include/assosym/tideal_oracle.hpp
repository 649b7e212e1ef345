#ifndef ASSOSYM_TIDEAL_ORACLE_HPP
#define ASSOSYM_TIDEAL_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "assosym/bigint.hpp"
#include "assosym/characters.hpp"
#include "assosym/decomposition.hpp"
#include "assosym/errors.hpp"
#include "assosym/monomial.hpp"
#include "assosym/partitions.hpp"
#include "assosym/sparse_linalg.hpp"

// Brute-force model of the free assosymmetric algebra in small degree.
//
// The ambient space is spanned by all nonassociative monomials with a fixed
// label multiset. The T-ideal component is spanned by C[g(u1, u2, u3)] where
// g is one of the two defining identities, u1, u2, u3 are monomials and C is
// a one-hole monomial context. Every such element corresponds to exactly one
// monomial C[(u1 u2) u3] together with the node (u1 u2) u3 in it, which is how
// the spanning set is enumerated.

namespace assosym {

struct OracleOptions {
  /// Modulus of the primary modular elimination.
  std::uint64_t prime = 2147483647ULL;
  /// Second modulus, used instead of the rational pass in degree 6.
  std::uint64_t second_prime = 2147483629ULL;
  /// Permit degree-6 multilinear computations.
  bool allow_n6 = false;
  /// Worker threads for spanning-set generation. Results do not depend on it.
  int threads = 1;
};

/// Monomials of one label multiset, indexed in canonical order.
class MonomialSpace {
public:
  explicit MonomialSpace(std::vector<Monomial> monomials)
      : monomials_(std::move(monomials)) {
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i)
      index_.emplace(monomials_[i].code(), static_cast<int>(i));
  }

  int size() const { return static_cast<int>(monomials_.size()); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](int i) const {
    return monomials_[static_cast<std::size_t>(i)];
  }

  /// Index of the monomial with this prefix code, or -1.
  int index_of(const std::string& code) const {
    auto it = index_.find(code);
    return it == index_.end() ? -1 : it->second;
  }
  int index_of(const Monomial& m) const { return index_of(m.code()); }

private:
  std::vector<Monomial> monomials_;
  std::unordered_map<std::string, int> index_;
};

/// The two defining identities as elements of degree 3 in x1, x2, x3:
/// g1 = (x1,x2,x3) - (x1,x3,x2) and g2 = (x1,x2,x3) - (x2,x1,x3), where
/// (x,y,z) = (xy)z - x(yz).
inline std::array<LinearCombination, 2> identity_generators() {
  const auto x = [](int i) { return Monomial::leaf(i); };
  const auto assoc = [&](int a, int b, int c) {
    LinearCombination l;
    l.add(Monomial::product(Monomial::product(x(a), x(b)), x(c)), 1);
    l.add(Monomial::product(x(a), Monomial::product(x(b), x(c))), -1);
    return l;
  };
  LinearCombination g1 = assoc(1, 2, 3), g2 = assoc(1, 2, 3);
  g1.add(assoc(1, 3, 2), -1);
  g2.add(assoc(2, 1, 3), -1);
  return {g1, g2};
}

/// Substitutes monomials for the variables x1, x2, x3 of a degree-3 element.
inline LinearCombination substitute(const LinearCombination& g,
                                    const std::array<Monomial, 3>& values) {
  LinearCombination out;
  for (const auto& [m, c] : g.terms()) {
    std::string code;
    for (char ch : m.code())
      code += ch == 0 ? std::string(1, '\0')
                      : values[static_cast<unsigned char>(ch) - 1].code();
    out.add(Monomial(std::move(code)), c);
  }
  return out;
}

namespace detail {

inline std::size_t subtree_end(const std::string& code, std::size_t pos) {
  int need = 1;
  while (need > 0)
    need += code[pos++] == 0 ? 1 : -1;
  return pos;
}

// Appends the consequence rows anchored at monomial `m`: one pair of rows per
// internal node of the form (A B) C.
inline void anchored_rows(const MonomialSpace& space, const Monomial& m,
                          std::vector<IntRow>& out) {
  const std::string& s = m.code();
  for (std::size_t pos = 0; pos + 1 < s.size(); ++pos) {
    if (s[pos] != 0 || s[pos + 1] != 0)
      continue;
    const std::size_t a0 = pos + 2;
    const std::size_t a1 = subtree_end(s, a0);
    const std::size_t b1 = subtree_end(s, a1);
    const std::size_t c1 = subtree_end(s, b1);
    const std::string pre = s.substr(0, pos), post = s.substr(c1);
    const std::string A = s.substr(a0, a1 - a0), B = s.substr(a1, b1 - a1),
                      C = s.substr(b1, c1 - b1);
    const std::string z(1, '\0');
    const auto left = [&](const std::string& x, const std::string& y,
                          const std::string& w) {
      return space.index_of(pre + z + z + x + y + w + post);
    };
    const auto right = [&](const std::string& x, const std::string& y,
                           const std::string& w) {
      return space.index_of(pre + z + x + z + y + w + post);
    };
    const auto emit = [&](std::array<std::pair<int, int>, 4> terms) {
      std::sort(terms.begin(), terms.end());
      IntRow row;
      for (const auto& [col, c] : terms) {
        if (!row.empty() && row.back().first == col)
          row.back().second += c;
        else
          row.emplace_back(col, c);
      }
      std::erase_if(row, [](const auto& e) { return e.second == 0; });
      out.push_back(std::move(row));
    };
    const int abc = left(A, B, C), a_bc = right(A, B, C);
    emit({{{abc, 1}, {a_bc, -1}, {left(A, C, B), -1}, {right(A, C, B), 1}}});
    emit({{{abc, 1}, {a_bc, -1}, {left(B, A, C), -1}, {right(B, A, C), 1}}});
  }
}

} // namespace detail

/// Spanning set of the T-ideal inside `space`, as index rows. Rows anchored at
/// later monomials come first: with smallest-column pivots this keeps the
/// fill-in of the echelon form low (about 20x faster at n = 5). Generation is
/// split over `threads` workers; the row order does not depend on it.
inline std::vector<IntRow> consequence_rows(const MonomialSpace& space,
                                            int threads = 1) {
  const int total = space.size();
  const int workers = std::clamp(threads, 1, std::max(1, total));
  std::vector<std::vector<IntRow>> chunks(static_cast<std::size_t>(workers));
  const auto work = [&](int w) {
    const int lo = static_cast<int>(static_cast<long>(total) * w / workers);
    const int hi = static_cast<int>(static_cast<long>(total) * (w + 1) / workers);
    for (int i = lo; i < hi; ++i)
      detail::anchored_rows(space, space[i], chunks[static_cast<std::size_t>(w)]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
    for (auto& t : pool)
      t.join();
  }
  std::vector<IntRow> rows;
  for (auto& c : chunks)
    for (auto& r : c)
      rows.push_back(std::move(r));
  std::reverse(rows.begin(), rows.end());
  return rows;
}

inline MonomialSpace multilinear_space(int n) {
  return MonomialSpace(enumerate_multilinear(n));
}

/// Label multiset of a multidegree: l_1 copies of 1, l_2 copies of 2, ...
inline std::vector<int> multidegree_labels(std::span<const int> l) {
  std::vector<int> labels;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (int k = 0; k < l[i]; ++k)
      labels.push_back(static_cast<int>(i) + 1);
  return labels;
}

/// The multilinear degree-n part of the T-ideal spanning set, as linear
/// combinations. Duplicates are kept.
inline std::vector<LinearCombination> consequence_span(int n) {
  if (n < 2 || n > 6)
    throw SizeLimitError("consequence_span: n must be in 2..6");
  const MonomialSpace space = multilinear_space(n);
  std::vector<LinearCombination> out;
  for (const auto& row : consequence_rows(space)) {
    LinearCombination l;
    for (const auto& [col, c] : row)
      l.add(space[col], c);
    out.push_back(std::move(l));
  }
  return out;
}

/// Writes rows as "row col num/den" lines, one per nonzero entry.
inline void write_triplets(std::ostream& os, const std::vector<IntRow>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [col, c] : rows[r])
      os << r << ' ' << col << ' ' << c << "/1\n";
}

/// Rank data of one oracle computation.
struct RankReport {
  int ambient = 0;
  std::size_t spanning_rows = 0;
  std::uint64_t prime = 0;
  int rank_mod_prime = 0;
  std::optional<std::uint64_t> second_prime;
  std::optional<int> rank_mod_second_prime;
  std::optional<int> rank_rational;

  int rank() const { return rank_rational.value_or(rank_mod_prime); }
  BigCount quotient_dim() const { return ambient - rank(); }
};

template <typename Field>
int echelon_rank(Field field, int columns, const std::vector<IntRow>& rows) {
  SparseEchelon<Field> e(std::move(field), columns);
  for (const auto& r : rows)
    e.insert(r);
  return e.rank();
}

/// Rank of the spanning set in `space` modulo `prime`, then either certified
/// over the rationals or, when `rational` is false, repeated modulo the
/// second prime. Disagreement raises RankMismatchError.
inline RankReport analyze_space(const MonomialSpace& space, bool rational,
                                const OracleOptions& opt,
                                std::ostream* dump = nullptr) {
  const auto rows = consequence_rows(space, opt.threads);
  if (dump)
    write_triplets(*dump, rows);
  RankReport rep;
  rep.ambient = space.size();
  rep.spanning_rows = rows.size();
  rep.prime = opt.prime;
  rep.rank_mod_prime = echelon_rank(PrimeField(opt.prime), space.size(), rows);
  if (rational) {
    rep.rank_rational = echelon_rank(RationalField{}, space.size(), rows);
    if (*rep.rank_rational != rep.rank_mod_prime)
      throw RankMismatchError(
          "rank mod " + std::to_string(opt.prime) + " is " +
          std::to_string(rep.rank_mod_prime) + " but the rational rank is " +
          std::to_string(*rep.rank_rational) + "; retry with another prime");
  } else {
    rep.second_prime = opt.second_prime;
    rep.rank_mod_second_prime =
        echelon_rank(PrimeField(opt.second_prime), space.size(), rows);
    if (*rep.rank_mod_second_prime != rep.rank_mod_prime)
      throw RankMismatchError(
          "ranks modulo " + std::to_string(opt.prime) + " and " +
          std::to_string(opt.second_prime) + " disagree");
  }
  return rep;
}

inline RankReport analyze_multilinear(int n, const OracleOptions& opt = {},
                                      std::ostream* dump = nullptr) {
  if (n < 2 || n > 6)
    throw SizeLimitError("quotient_dim: n must be in 2..6");
  if (n == 6 && !opt.allow_n6)
    throw SizeLimitError("quotient_dim: n = 6 requires allow_n6");
  return analyze_space(multilinear_space(n), n <= 5, opt, dump);
}

/// Dimension of P_n modulo the T-ideal, by elimination.
inline BigCount quotient_dim(int n, const OracleOptions& opt = {}) {
  return analyze_multilinear(n, opt).quotient_dim();
}

inline RankReport analyze_multigraded(std::span<const int> l,
                                      const OracleOptions& opt = {},
                                      std::ostream* dump = nullptr) {
  int degree = 0;
  for (int li : l) {
    if (li == 0)
      throw ZeroPartError("multidegree has a zero part");
    if (li < 0)
      throw ArgumentError("multidegree entries must be positive");
    degree += li;
  }
  if (l.empty() || degree > 6)
    throw SizeLimitError("quotient_dim_multigraded: total degree must be in "
                         "1..6");
  const MonomialSpace space(monomials_with_labels(multidegree_labels(l)));
  return analyze_space(space, degree <= 5, opt, dump);
}

/// Dimension of the multidegree-l component of the free algebra, by
/// elimination.
inline BigCount quotient_dim_multigraded(std::span<const int> l,
                                         const OracleOptions& opt = {}) {
  return analyze_multigraded(l, opt).quotient_dim();
}

/// Reduced row echelon data of the T-ideal in a monomial space over the
/// rationals. The monomials that are not pivots form a basis of the
/// quotient; any monomial is rewritten as a combination of them.
class QuotientBasis {
public:
  QuotientBasis(MonomialSpace space, const std::vector<IntRow>& rows)
      : space_(std::move(space)),
        echelon_(RationalField{}, space_.size()),
        basis_pos_(static_cast<std::size_t>(space_.size()), -1) {
    for (const auto& r : rows)
      echelon_.insert(r);
    echelon_.make_reduced();
    for (int c = 0; c < space_.size(); ++c)
      if (!echelon_.is_pivot(c)) {
        basis_pos_[static_cast<std::size_t>(c)] =
            static_cast<int>(basis_cols_.size());
        basis_cols_.push_back(c);
      }
  }

  const MonomialSpace& space() const { return space_; }
  int size() const { return static_cast<int>(basis_cols_.size()); }
  int rank() const { return echelon_.rank(); }

  std::vector<Monomial> basis() const {
    std::vector<Monomial> out;
    for (int c : basis_cols_)
      out.push_back(space_[c]);
    return out;
  }

  /// Coordinates of the class of monomial `col` on the basis: sparse
  /// (basis position, coefficient) pairs.
  std::vector<std::pair<int, Rational>> coordinates(int col) const {
    const int pos = basis_pos_[static_cast<std::size_t>(col)];
    if (pos >= 0)
      return {{pos, Rational(1)}};
    std::vector<std::pair<int, Rational>> out;
    const auto* row = echelon_.pivot_row(col);
    for (std::size_t k = 1; k < row->size(); ++k)
      out.emplace_back(basis_pos_[static_cast<std::size_t>((*row)[k].first)],
                       -(*row)[k].second);
    return out;
  }

  LinearCombination rewrite(const Monomial& m) const {
    const int col = space_.index_of(m);
    if (col < 0)
      throw ArgumentError("rewrite: monomial " + m.str() +
                          " is not in this space");
    LinearCombination out;
    for (const auto& [pos, c] : coordinates(col))
      out.add(space_[basis_cols_[static_cast<std::size_t>(pos)]], c);
    return out;
  }

  LinearCombination rewrite(const LinearCombination& l) const {
    LinearCombination out;
    for (const auto& [m, c] : l.terms())
      out.add(rewrite(m), c);
    return out;
  }

  /// Trace of the label permutation `perm` (perm[i-1] is the image of label
  /// i) acting on the quotient.
  Rational trace(std::span<const int> perm) const {
    Rational t = 0;
    for (std::size_t pos = 0; pos < basis_cols_.size(); ++pos) {
      const Monomial image = space_[basis_cols_[pos]].relabeled(perm);
      const int col = space_.index_of(image);
      if (col < 0)
        throw ArgumentError("trace: permutation leaves the monomial space");
      for (const auto& [p, c] : coordinates(col))
        if (p == static_cast<int>(pos))
          t += c;
    }
    return t;
  }

private:
  MonomialSpace space_;
  SparseEchelon<RationalField> echelon_;
  std::vector<int> basis_cols_;
  std::vector<int> basis_pos_;
};

inline QuotientBasis build_quotient_basis(int n, int threads = 1) {
  if (n < 1 || n > 5)
    throw SizeLimitError("build_quotient_basis: n must be in 1..5");
  MonomialSpace space = multilinear_space(n);
  const auto rows = consequence_rows(space, threads);
  return QuotientBasis(std::move(space), rows);
}

/// Permutation of {1..n} with the given cycle type: consecutive runs of
/// labels form the cycles.
inline std::vector<int> class_representative(const CycleType& mu) {
  std::vector<int> perm(static_cast<std::size_t>(mu.size()));
  int start = 0;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k)
      perm[static_cast<std::size_t>(start + k)] = start + (k + 1) % len + 1;
    start += len;
  }
  return perm;
}

/// Character of S_n on P_n modulo the T-ideal, from traces on the quotient
/// basis.
inline CharacterVector quotient_character(const QuotientBasis& qb, int n) {
  CharacterVector chi{n, {}};
  for (const auto& mu : generate_partitions(n)) {
    const Rational t = qb.trace(class_representative(mu));
    if (!is_integer(t))
      throw NonIntegralityError("trace on class " + mu.str() +
                                " is not an integer");
    chi.values.push_back(t.get_num());
  }
  return chi;
}

inline CharacterVector quotient_character(int n, int threads = 1) {
  if (n < 2 || n > 5)
    throw SizeLimitError("quotient_character: n must be in 2..5");
  return quotient_character(build_quotient_basis(n, threads), n);
}

/// Multiplicities <chi, chi_lambda> of a character of S_n.
inline Decomposition multiplicities_of(const CharacterVector& chi) {
  const CharacterTable table = character_table(chi.n);
  Decomposition d(chi.n, Group::symmetric);
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    const Rational m = inner_product(chi, table.row(i));
    if (!is_integer(m) || m < 0)
      throw NonIntegralityError("multiplicity of " + table.labels[i].str() +
                                " is " + to_string(m));
    d.add(table.labels[i], m.get_num());
  }
  return d;
}

/// S_n-decomposition of P_n recovered from the oracle's character.
inline Decomposition oracle_multiplicities(int n, int threads = 1) {
  if (n < 2 || n > 5)
    throw SizeLimitError("oracle_multiplicities: n must be in 2..5");
  return multiplicities_of(quotient_character(n, threads));
}

} // namespace assosym

#endif // ASSOSYM_TIDEAL_ORACLE_HPP
