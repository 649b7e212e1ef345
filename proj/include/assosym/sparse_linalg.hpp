#ifndef ASSOSYM_SPARSE_LINALG_HPP
#define ASSOSYM_SPARSE_LINALG_HPP

#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "assosym/bigint.hpp"
#include "assosym/errors.hpp"

// Incremental sparse row echelon form over a field. Rows are inserted one at
// a time and reduced against the pivots found so far; the pivot of a row is
// its smallest column index. Insertion order and pivot rule are fixed, so the
// result depends only on the sequence of rows.

namespace assosym {

/// Integers modulo a prime below 2^32.
struct PrimeField {
  using value_type = std::uint64_t;

  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (prime < 3 || prime >= (1ULL << 32))
      throw ArgumentError("prime must lie in [3, 2^32)");
    mpz_class z = static_cast<unsigned long>(prime);
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
      throw ArgumentError("modulus " + std::to_string(prime) +
                          " is not prime");
  }

  value_type from_int(long v) const {
    const long m = v % static_cast<long>(p);
    return static_cast<value_type>(m < 0 ? m + static_cast<long>(p) : m);
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : a + p - b;
  }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const {
    value_type result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1)
        result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

/// The rationals, exactly.
struct RationalField {
  using value_type = Rational;

  value_type from_int(long v) const { return Rational(v); }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const {
    return a + b;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    return a - b;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    return a * b;
  }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

/// A sparse row with small integer coefficients, sorted by column.
using IntRow = std::vector<std::pair<int, int>>;

template <typename Field> class SparseEchelon {
public:
  using value_type = typename Field::value_type;
  using Row = std::vector<std::pair<int, value_type>>;

  SparseEchelon(Field field, int columns)
      : field_(std::move(field)), columns_(columns),
        pivot_of_(static_cast<std::size_t>(columns), -1),
        dense_(static_cast<std::size_t>(columns)),
        live_(static_cast<std::size_t>(columns), 0) {}

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const Field& field() const { return field_; }

  /// Reduces the row and keeps it if it is independent of the current rows.
  /// Returns true if the rank grew.
  bool insert(const IntRow& row) {
    Row r;
    r.reserve(row.size());
    for (const auto& [col, c] : row)
      if (c != 0)
        r.emplace_back(col, field_.from_int(c));
    return insert_reduced(reduce(r));
  }

  /// Row of the pivot at `col`, or nullptr. The pivot entry is 1.
  const Row* pivot_row(int col) const {
    const int idx = pivot_of_[static_cast<std::size_t>(col)];
    return idx < 0 ? nullptr : &rows_[static_cast<std::size_t>(idx)];
  }

  bool is_pivot(int col) const {
    return pivot_of_[static_cast<std::size_t>(col)] >= 0;
  }

  /// Reduces every stored row so that it has no entries in other pivot
  /// columns (reduced row echelon form).
  void make_reduced() {
    std::vector<int> pivot_cols;
    for (int c = 0; c < columns_; ++c)
      if (is_pivot(c))
        pivot_cols.push_back(c);
    // Rows with larger pivots are already reduced when they are used.
    for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
      Row& row = rows_[static_cast<std::size_t>(pivot_of_[*it])];
      Row tail(row.begin() + 1, row.end());
      Row reduced = reduce(tail);
      Row full;
      full.reserve(reduced.size() + 1);
      full.push_back(row.front());
      full.insert(full.end(), reduced.begin(), reduced.end());
      row = std::move(full);
    }
  }

  /// Reduces an arbitrary row against the stored pivots.
  Row reduce(const Row& input) {
    using Entry = int;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (const auto& [col, v] : input) {
      if (!live_[col]) {
        live_[col] = 1;
        dense_[col] = v;
        heap.push(col);
      } else {
        dense_[col] = field_.add(dense_[col], v);
      }
    }
    Row out;
    while (!heap.empty()) {
      const int col = heap.top();
      heap.pop();
      live_[col] = 0;
      value_type v = std::move(dense_[col]);
      dense_[col] = value_type{};
      if (field_.is_zero(v))
        continue;
      const Row* prow = pivot_row(col);
      if (!prow) {
        out.emplace_back(col, std::move(v));
        continue;
      }
      const value_type factor = v;
      for (std::size_t k = 1; k < prow->size(); ++k) {
        const auto& [pc, pv] = (*prow)[k];
        const value_type delta = field_.mul(factor, pv);
        if (!live_[pc]) {
          live_[pc] = 1;
          dense_[pc] = field_.neg(delta);
          heap.push(pc);
        } else {
          dense_[pc] = field_.sub(dense_[pc], delta);
        }
      }
    }
    return out;
  }

private:
  bool insert_reduced(Row r) {
    if (r.empty())
      return false;
    const value_type lead_inv = field_.inv(r.front().second);
    for (auto& [col, v] : r)
      v = field_.mul(v, lead_inv);
    pivot_of_[static_cast<std::size_t>(r.front().first)] =
        static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  Field field_;
  int columns_;
  std::vector<int> pivot_of_;
  std::vector<Row> rows_;
  std::vector<value_type> dense_;
  std::vector<char> live_;
};

} // namespace assosym

#endif // ASSOSYM_SPARSE_LINALG_HPP
