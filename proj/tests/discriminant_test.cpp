#include "autbound/discriminant.hpp"
#include "autbound/sweep.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace autbound {
namespace {

TEST(Multidegree, SortsAndValidates) {
  Multidegree md({5, 2, 3});
  EXPECT_EQ(md.to_string(), "2,3,5");
  EXPECT_EQ(md.k(), 3);
  EXPECT_EQ(md.front(), 2);
  EXPECT_EQ(md.tail().to_string(), "3,5");
  EXPECT_THROW(Multidegree(std::vector<int>{}), DomainError);
  EXPECT_THROW(Multidegree({3, 1}), DomainError);
  EXPECT_THROW(Multidegree({3}).tail(), DomainError);
  EXPECT_TRUE(Multidegree({2}).is_single_quadric());
  EXPECT_FALSE(Multidegree({2, 2}).is_single_quadric());
}

TEST(Multidegree, Parse) {
  EXPECT_EQ(Multidegree::parse("3,2"), Multidegree({2, 3}));
  EXPECT_EQ(Multidegree::parse("4"), Multidegree({4}));
  EXPECT_THROW(Multidegree::parse(""), DomainError);
  EXPECT_THROW(Multidegree::parse("2,,3"), DomainError);
  EXPECT_THROW(Multidegree::parse("2,3,"), DomainError);
  EXPECT_THROW(Multidegree::parse("2,x"), DomainError);
  EXPECT_THROW(Multidegree::parse("1,3"), DomainError);
}

TEST(NValue, Examples) {
  EXPECT_EQ(n_value({3}, 2), 8);
  EXPECT_EQ(n_value({2, 2}, 1), 3);
  EXPECT_EQ(n_value({2, 3}, 2), 13);
}

TEST(NValue, OutsideRegimeRejected) {
  EXPECT_THROW(n_value({2, 2, 2}, 1), DomainError);
  EXPECT_THROW(n_value_closed({2, 2, 2}, 1), DomainError);
  EXPECT_THROW(n_value_staircase_oracle({2, 2, 2}, 1), DomainError);
  EXPECT_THROW(n_value({3}, -1), DomainError);
}

TEST(NValue, BoundaryClosedForms) {
  for (int d = 2; d <= 12; ++d) {
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(n_value({d}, n), oracle::ipow(d - 1, n + 1));
  }
  EXPECT_EQ(n_value({2, 3, 4}, 2), 2 * 3 * 4 - 1);
  EXPECT_EQ(n_value({5, 5, 5, 5}, 3), 625 - 1);
}

TEST(NValue, MatchesTextbookRecursion) {
  for (const auto& [md, n] : multidegree_grid(6, 4, 10)) {
    const std::vector<int> d(md.degrees().begin(), md.degrees().end());
    EXPECT_EQ(n_value(md, n), oracle::n_value(d, n)) << md.to_string() << " n=" << n;
  }
}

TEST(NValueClosed, Examples) {
  EXPECT_EQ(n_value_closed({2, 3}, 2), 13);
  EXPECT_EQ(n_value_closed({3}, 2), 8);
  EXPECT_EQ(n_value_closed({2, 2}, 1), 3);
}

TEST(NValueOracle, Examples) {
  EXPECT_EQ(n_value_staircase_oracle({3}, 2), 8);
  EXPECT_EQ(n_value_staircase_oracle({2, 3}, 2), 13);
  EXPECT_EQ(n_value_staircase_oracle({2, 2}, 1), 3);
}

TEST(NValueOracle, BudgetEnforced) {
  EXPECT_NO_THROW(n_value_staircase_oracle({2, 2, 2}, 21));
  EXPECT_THROW(n_value_staircase_oracle({2, 2, 2}, 22), DomainError);
  // The recursion has no such limit.
  EXPECT_NO_THROW(n_value({2, 2, 2}, 40));
}

TEST(NValue, ThreeMethodsAgreeOnGrid) {
  for (const auto& row : n_agreement_grid(5, 4, 9, Execution::Serial)) {
    EXPECT_TRUE(row.agrees()) << row.degrees.to_string() << " n=" << row.n << ": " << row.recursion << " "
                              << row.closed << " " << row.oracle;
  }
}

TEST(NValue, InvariantUnderPermutationOfInput) {
  for (const auto& [md, n] : multidegree_grid(5, 4, 9)) {
    std::vector<int> d(md.degrees().begin(), md.degrees().end());
    const Integer expected = n_value(md, n);
    do {
      ASSERT_EQ(n_value_unsorted(d, n), expected) << md.to_string() << " n=" << n;
    } while (std::next_permutation(d.begin(), d.end()));
  }
}

TEST(NValue, GreaterThanOneExceptSingleQuadric) {
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(n_value({2}, n), 1);
  for (const auto& [md, n] : multidegree_grid(5, 4, 9)) {
    if (md.is_single_quadric()) continue;
    EXPECT_GT(n_value(md, n), 1) << md.to_string() << " n=" << n;
  }
}

TEST(StaircaseTable, BoundaryRows) {
  const std::vector<int> d = {2, 4, 5};
  StaircaseTable table(d, 4);
  for (int a = 1; a <= 3; ++a) EXPECT_EQ(table.entry(a, -2), 1);
  for (int b = -2; b <= 4; ++b) {
    EXPECT_EQ(table.entry(0, b), 0);
    EXPECT_EQ(table.entry(1, b), oracle::ipow(5 - 1, b + 2));
  }
  EXPECT_EQ(table.entry(2, -1), 4 * 5 - 1);
  EXPECT_EQ(table.entry(3, -1), 2 * 4 * 5 - 1);
  EXPECT_EQ(table.n_value(7), oracle::n_value(d, 7));
  EXPECT_THROW(table.entry(4, 0), DomainError);
  EXPECT_THROW(table.entry(1, 5), DomainError);
}

TEST(Multiplier, Examples) {
  EXPECT_EQ(multiplier({3}, 2, 1), 12);
  EXPECT_EQ(multiplier({3}, 2, 3), 9);
  EXPECT_EQ(multiplier({3}, 2, 2), 6);
}

TEST(Multiplier, Errors) {
  EXPECT_THROW(multiplier({2}, 2, 1), DomainError);
  EXPECT_THROW(multiplier({3}, 2, 0), DomainError);
  EXPECT_THROW(multiplier({3}, 2, 4), DomainError);
  EXPECT_THROW(multiplier({2, 2, 2}, 1, 1), DomainError);
}

TEST(Multiplier, PositiveOnGrid) {
  for (const auto& [md, n] : multidegree_grid(5, 4, 9)) {
    if (md.is_single_quadric()) continue;
    for (int i = 1; i <= n + 1; ++i) EXPECT_GE(multiplier(md, n, i), 1) << md.to_string() << " n=" << n << " i=" << i;
  }
}

TEST(Multiplier, ProductMatchesHypersurfaceStabiliserFormula) {
  for (int d = 3; d <= 20; ++d) {
    for (int n = 0; n <= 6; ++n) {
      Integer product = 1;
      for (const auto& m : multipliers({d}, n)) product *= m;
      EXPECT_EQ(product, oracle::gl_hypersurface_product(d, n)) << "d=" << d << " n=" << n;
    }
  }
}

TEST(Multiplier, FullIntersectionCaseIsProductOfDegrees) {
  // k = n + 1: every m_i = N + 1 = d_1...d_k.
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(multiplier({2, 3, 4}, 2, i), 24);
}

TEST(SuspensionCheck, Examples) {
  EXPECT_TRUE(multiplier_suspension_check({2, 3}, 2, 1));
  EXPECT_TRUE(multiplier_suspension_check({3}, 3, 2));
  EXPECT_TRUE(multiplier_suspension_check({2, 2}, 1, 1));
}

TEST(SuspensionCheck, Errors) {
  EXPECT_THROW(multiplier_suspension_check({2}, 3, 1), DomainError);
  EXPECT_THROW(multiplier_suspension_check({3}, 0, 1), DomainError);
  EXPECT_THROW(multiplier_suspension_check({3}, 3, 4), DomainError);
  EXPECT_THROW(multiplier_suspension_check({3}, 3, 0), DomainError);
}

TEST(SuspensionCheck, HoldsOnGrid) {
  for (const auto& [md, n] : multidegree_grid(5, 4, 9)) {
    if (md.is_single_quadric() || n < 1) continue;
    for (int i = 1; i <= n; ++i) {
      EXPECT_TRUE(multiplier_suspension_check(md, n, i)) << md.to_string() << " n=" << n << " i=" << i;
    }
  }
}

}  // namespace
}  // namespace autbound
