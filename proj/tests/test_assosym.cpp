#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "assosym/assosym.hpp"

using namespace assosym;

namespace {

// Positive compositions of n into k parts.
void compositions(int n, int k, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (n == 0)
      out.push_back(cur);
    return;
  }
  for (int first = 1; first <= n - (k - 1); ++first) {
    cur.push_back(first);
    compositions(n - first, k - 1, cur, out);
    cur.pop_back();
  }
}

BigCount two_row_extra(int n, const Partition& p) {
  return p.length() <= 2 ? m_multiplicity(n, p[1]) : BigCount(0);
}

} // namespace

TEST(MMultiplicity, Examples) {
  EXPECT_EQ(m_multiplicity(4, 2), 0);
  EXPECT_EQ(m_multiplicity(5, 1), 2);
  EXPECT_EQ(m_multiplicity(8, 4), 1);
  EXPECT_EQ(m_multiplicity(2, 0), 0);
  EXPECT_EQ(m_multiplicity(1, 0), 0);
  EXPECT_THROW(m_multiplicity(5, 3), ArgumentError);
  EXPECT_THROW(m_multiplicity(5, -1), ArgumentError);
}

// The number of k in 0..n-3 with lambda_2 <= min(k, n-k), counted directly.
TEST(MMultiplicity, EqualsSubsetSizeCount) {
  for (int n = 1; n <= 60; ++n)
    for (int second = 0; 2 * second <= n; ++second) {
      long count = 0;
      for (int k = 0; k <= n - 3; ++k)
        if (second <= std::min(k, n - k))
          ++count;
      ASSERT_EQ(m_multiplicity(n, second), count) << n << " " << second;
      const int closed = std::min(n - second, n - 3) - second + 1;
      ASSERT_EQ(m_multiplicity(n, second), std::max(0, closed));
    }
}

TEST(SnDecomposition, KnownTables) {
  const auto p1 = sn_decomposition(1);
  EXPECT_EQ(p1.terms().size(), 1u);
  EXPECT_EQ(p1.at(Partition{1}), 1);

  const auto p4 = sn_decomposition(4);
  EXPECT_EQ(p4.terms().size(), 5u);
  EXPECT_EQ(p4.at(Partition{4}), 3);
  EXPECT_EQ(p4.at(Partition{3, 1}), 4);
  EXPECT_EQ(p4.at(Partition{2, 2}), 2);
  EXPECT_EQ(p4.at(Partition{2, 1, 1}), 3);
  EXPECT_EQ(p4.at(Partition{1, 1, 1, 1}), 1);

  const auto p5 = sn_decomposition(5);
  const std::vector<std::pair<Partition, int>> expected = {
      {{5}, 4},       {{4, 1}, 6},          {{3, 2}, 6},
      {{3, 1, 1}, 6}, {{2, 2, 1}, 5},       {{2, 1, 1, 1}, 4},
      {{1, 1, 1, 1, 1}, 1}};
  EXPECT_EQ(p5.terms().size(), expected.size());
  for (const auto& [p, m] : expected)
    EXPECT_EQ(p5.at(p), m) << p.str();
}

TEST(SnDecomposition, DimensionMatchesCodimension) {
  for (int n = 1; n <= 30; ++n)
    EXPECT_EQ(specht_total_dimension(sn_decomposition(n)), codimension(n))
        << n;
}

TEST(SnDecomposition, ColengthMatchesClosedForm) {
  for (int n = 1; n <= 30; ++n)
    EXPECT_EQ(sn_decomposition(n).total_multiplicity(), colength(n)) << n;
}

TEST(Colength, KnownValues) {
  const int expected[] = {1, 2, 5, 13, 32};
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(colength(n), expected[n - 1]);
}

TEST(Codimension, Examples) {
  EXPECT_EQ(codimension(1), 1);
  EXPECT_EQ(codimension(4), 29);
  EXPECT_EQ(codimension(5), 136);
  EXPECT_EQ(codimension(6), 762);
  EXPECT_THROW(codimension(0), ArgumentError);
}

TEST(AnDecomposition, KnownTables) {
  const auto a3 = an_decomposition(3);
  EXPECT_EQ(a3.terms().size(), 3u);
  EXPECT_EQ(a3.at(Partition{3}), 3);
  EXPECT_EQ(a3.at(Label{Partition{2, 1}, SplitTag::plus}), 1);
  EXPECT_EQ(a3.at(Label{Partition{2, 1}, SplitTag::minus}), 1);

  const auto a5 = an_decomposition(5);
  EXPECT_EQ(a5.terms().size(), 5u);
  EXPECT_EQ(a5.at(Partition{5}), 5);
  EXPECT_EQ(a5.at(Partition{4, 1}), 10);
  EXPECT_EQ(a5.at(Partition{3, 2}), 11);
  EXPECT_EQ(a5.at(Label{Partition{3, 1, 1}, SplitTag::plus}), 3);
  EXPECT_EQ(a5.at(Label{Partition{3, 1, 1}, SplitTag::minus}), 3);

  EXPECT_THROW(an_decomposition(1), ArgumentError);
}

// With the tabulated convention each split half stands for d_lambda
// dimensions; with the literal restriction each half has dimension
// d_lambda / 2. Both account for all of P_n.
TEST(AnDecomposition, DimensionBookkeeping) {
  for (int n = 2; n <= 10; ++n) {
    BigCount tabulated = 0;
    const auto a = an_decomposition(n);
    for (const auto& [label, mult] : a.terms())
      tabulated += mult * specht_dim(label.shape);
    EXPECT_EQ(tabulated, codimension(n)) << n;
    EXPECT_EQ(alternating_total_dimension(
                  an_decomposition(n, SplitConvention::restriction)),
              codimension(n))
        << n;
  }
}

TEST(GlDecomposition, Examples) {
  const auto g32 = gl_decomposition(3, 2);
  EXPECT_EQ(g32.terms().size(), 2u);
  EXPECT_EQ(g32.at(Partition{3}), 2);
  EXPECT_EQ(g32.at(Partition{2, 1}), 2);

  for (int n = 3; n <= 12; ++n) {
    const auto g = gl_decomposition(n, 1);
    EXPECT_EQ(g.terms().size(), 1u);
    EXPECT_EQ(g.at(Partition{n}), n - 1);
  }

  const auto g25 = gl_decomposition(2, 5);
  EXPECT_EQ(g25.terms().size(), 2u);
  EXPECT_EQ(g25.at(Partition{2}), 1);
  EXPECT_EQ(g25.at(Partition{1, 1}), 1);
}

TEST(GlDecomposition, WeylDimensionsSumToGradedDimension) {
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= 5; ++r)
      EXPECT_EQ(weyl_total_dimension(gl_decomposition(n, r), r),
                graded_dim(n, r))
          << n << " " << r;
}

TEST(AnGlDecomposition, Examples) {
  const auto a33 = an_gl_decomposition(3, 3);
  EXPECT_EQ(a33.terms().size(), 3u);
  EXPECT_EQ(a33.at(Partition{3}), 3);
  EXPECT_EQ(a33.at(Label{Partition{2, 1}, SplitTag::plus}), 2);
  EXPECT_EQ(a33.at(Label{Partition{2, 1}, SplitTag::minus}), 2);

  const auto a22 = an_gl_decomposition(2, 2);
  EXPECT_EQ(a22.terms().size(), 1u);
  EXPECT_EQ(a22.at(Partition{2}), 2);

  const auto a44 = an_gl_decomposition(4, 4);
  EXPECT_EQ(a44, restrict_to_alternating(gl_decomposition(4, 4),
                                         SplitConvention::restriction));
  EXPECT_EQ(a44.at(Partition{4}), 4);
  EXPECT_EQ(a44.at(Partition{3, 1}), 7);
  EXPECT_EQ(a44.at(Label{Partition{2, 2}, SplitTag::plus}), 2);
  EXPECT_EQ(a44.at(Label{Partition{2, 2}, SplitTag::minus}), 2);
}

// Direct bookkeeping when no shape is filtered: a merged label gets
// d_lambda + d_lambda' plus the two-row terms of both shapes, a split half
// gets d_lambda plus the two-row term.
TEST(AnGlDecomposition, MatchesPairBookkeeping) {
  for (int n = 2; n <= 8; ++n) {
    Decomposition expected(n, Group::alternating, n);
    for (const auto& p : generate_partitions(n)) {
      const Partition c = conjugate(p);
      if (p == c) {
        const BigCount m = specht_dim(p) + two_row_extra(n, p);
        expected.add(Label{p, SplitTag::plus}, m);
        expected.add(Label{p, SplitTag::minus}, m);
      } else if (p > c) {
        expected.add(p, 2 * specht_dim(p) + two_row_extra(n, p) +
                            two_row_extra(n, c));
      }
    }
    EXPECT_EQ(an_gl_decomposition(n, n), expected) << n;
  }
}

TEST(GradedDim, Examples) {
  EXPECT_EQ(graded_dim(3, 2), 12);
  EXPECT_EQ(graded_dim(3, 1), 2);
  for (int r = 1; r <= 10; ++r) {
    EXPECT_EQ(graded_dim(1, r), r);
    EXPECT_EQ(graded_dim(2, r), r * r);
  }
}

TEST(GradedDim, MatchesBasisEnumeration) {
  EXPECT_EQ(basis_count_direct(3, 1), 2);
  EXPECT_EQ(basis_count_direct(3, 2), 12);
  EXPECT_EQ(basis_count_direct(4, 1), 3);
  for (int n = 1; n <= 8; ++n)
    for (int r = 1; r <= 4; ++r)
      EXPECT_EQ(basis_count_direct(n, r), graded_dim(n, r)) << n << " " << r;
  EXPECT_THROW(basis_count_direct(9, 2), SizeLimitError);
  EXPECT_THROW(basis_count_direct(3, 5), SizeLimitError);
}

TEST(MultigradedDim, Examples) {
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(multigraded_dim(MultiDegree(std::vector<int>(n, 1))),
              codimension(n));
  EXPECT_EQ(multigraded_dim(MultiDegree({2, 1})), 4);
  EXPECT_EQ(multigraded_dim(MultiDegree({3})), 2);
  EXPECT_THROW(MultiDegree({2, 0}), ZeroPartError);
  EXPECT_THROW(MultiDegree({}), ArgumentError);
}

TEST(MultigradedDim, MatchesBasisEnumeration) {
  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= std::min(n, 4); ++r) {
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      compositions(n, r, cur, comps);
      for (const auto& c : comps)
        EXPECT_EQ(multigraded_dim(MultiDegree(c)),
                  basis_count_direct(MultiDegree(c)));
    }
}

// Summing the multigraded formula over the generators that actually occur
// recovers the graded one.
TEST(MultigradedDim, SumsToGradedDimension) {
  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= 3; ++r) {
      BigCount total = 0;
      for (int used = 1; used <= std::min(n, r); ++used) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(n, used, cur, comps);
        BigCount per_subset = 0;
        for (const auto& c : comps)
          per_subset += multigraded_dim(MultiDegree(c));
        total += binomial(r, used) * per_subset;
      }
      EXPECT_EQ(total, graded_dim(n, r)) << n << " " << r;
    }
}

TEST(Cocharacter, Examples) {
  EXPECT_EQ(cocharacter(2).values, (std::vector<BigInt>{0, 2}));
  EXPECT_EQ(cocharacter(3).values, (std::vector<BigInt>{1, 1, 7}));
  EXPECT_EQ(cocharacter(4).values.back(), 29);
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(cocharacter(n).values.back(), codimension(n));
  EXPECT_THROW(cocharacter(11), SizeLimitError);
}
