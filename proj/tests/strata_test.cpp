#include "autbound/series.hpp"
#include "autbound/strata.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace autbound {
namespace {

std::vector<Integer> V(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

TEST(ChernCoeffs, Examples) {
  EXPECT_EQ(chern_coeffs(3, 2, 1).coeffs, V({-6}));
  EXPECT_EQ(chern_coeffs(3, 2, 2).coeffs, V({-6, 24}));
  EXPECT_TRUE(chern_coeffs(5, 4, 0).coeffs.empty());
  EXPECT_EQ(chern_coeffs(5, 4, 0).base_dim, 0);
}

TEST(ChernCoeffs, Errors) {
  EXPECT_THROW(chern_coeffs(3, 2, 3), DomainError);
  EXPECT_THROW(chern_coeffs(1, 2, 1), DomainError);
  EXPECT_THROW(chern_coeffs(3, 2, -1), DomainError);
}

TEST(ChernCoeffs, NegativeBinomialFormula) {
  for (int d = 2; d <= 10; ++d) {
    for (int n = 0; n <= 8; ++n) {
      const ChernVector cv = chern_coeffs(d, n, n);
      for (int j = 1; j <= n; ++j) {
        const Integer sign = j % 2 == 0 ? 1 : -1;
        EXPECT_EQ(cv.coeffs[static_cast<std::size_t>(j - 1)], sign * oracle::binomial(n + j, j) * oracle::ipow(d - 1, j));
      }
    }
  }
}

TEST(SweptDegree, Examples) {
  EXPECT_EQ(swept_degree({1, V({-6})}), 6);
  EXPECT_EQ(swept_degree({2, V({-6, 24})}), 12);
  EXPECT_EQ(swept_degree({1, V({0})}), 0);
  EXPECT_EQ(swept_degree({0, {}}), 1);
}

TEST(SweptDegree, CompanionMatrixLayout) {
  const IntMatrix a = companion_matrix({2, V({-6, 24})});
  EXPECT_EQ(a.at(0, 0), 0);
  EXPECT_EQ(a.at(0, 1), -24);
  EXPECT_EQ(a.at(1, 0), 1);
  EXPECT_EQ(a.at(1, 1), 6);
  EXPECT_EQ(a.pow(2).at(1, 1), 12);
  EXPECT_THROW(companion_matrix({3, V({1})}), DomainError);
}

TEST(SweptDegree, VectorIterationMatchesMatrixPower) {
  for (int d = 2; d <= 6; ++d) {
    for (int n = 1; n <= 7; ++n) {
      for (int m = 1; m <= n; ++m) {
        const ChernVector cv = chern_coeffs(d, n, m);
        const auto size = static_cast<std::size_t>(m);
        EXPECT_EQ(swept_degree(cv), companion_matrix(cv).pow(static_cast<unsigned>(m)).at(size - 1, size - 1));
      }
    }
  }
}

TEST(StratumDegree, Examples) {
  EXPECT_EQ(stratum_degree(3, 2, 1), 6);
  EXPECT_EQ(stratum_degree(3, 2, 2), 12);
  for (int d = 2; d <= 6; ++d) EXPECT_EQ(stratum_degree(d, 5, 0), 1);
}

TEST(StratumDegree, MatchesClosedFormOnGrid) {
  for (int d = 2; d <= 10; ++d) {
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; m <= n; ++m) {
        const Integer deg = stratum_degree(d, n, m);
        EXPECT_EQ(deg, oracle::binomial(n + 1, m) * oracle::ipow(d - 1, m)) << d << " " << n << " " << m;
        EXPECT_GE(deg, 0);
      }
    }
  }
}

TEST(StratumDegree, ChernSeriesKillsTheTotalClass) {
  for (int d = 2; d <= 10; ++d) {
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; m <= n; ++m) {
        const auto order = static_cast<std::size_t>(m);
        std::vector<Integer> x(order + 1, Integer(0));
        x[0] = 1;
        const ChernVector cv = chern_coeffs(d, n, m);
        for (std::size_t j = 1; j <= order; ++j) x[j] = cv.coeffs[j - 1];
        const IntSeries product = IntSeries::linear(1, d - 1, order).pow(static_cast<unsigned>(n + 1)) * IntSeries(x);
        EXPECT_EQ(product, IntSeries::constant(1, order)) << d << " " << n << " " << m;
      }
    }
  }
}

TEST(StratumDegree, BottomRowOfCompanionPowers) {
  // Row m of A^i reads (0, ..., 0, C(n+1,0), (d-1)C(n+1,1), ..., (d-1)^i C(n+1,i)) for i < m.
  for (int d = 2; d <= 6; ++d) {
    for (int n = 2; n <= 7; ++n) {
      for (int m = 2; m <= n; ++m) {
        const IntMatrix a = companion_matrix(chern_coeffs(d, n, m));
        const auto last = static_cast<std::size_t>(m - 1);
        for (int i = 1; i < m; ++i) {
          const IntMatrix ai = a.pow(static_cast<unsigned>(i));
          for (int j = 0; j < m - i - 1; ++j) EXPECT_EQ(ai.at(last, static_cast<std::size_t>(j)), 0);
          for (int l = 0; l <= i; ++l) {
            EXPECT_EQ(ai.at(last, static_cast<std::size_t>(m - i - 1 + l)),
                      oracle::ipow(d - 1, l) * oracle::binomial(n + 1, l))
                << d << " " << n << " " << m << " " << i << " " << l;
          }
        }
      }
    }
  }
}

TEST(SigmaDegree, Examples) {
  EXPECT_EQ(sigma_degree(3, 2), 12);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(sigma_degree(2, n), n + 1);
  EXPECT_EQ(sigma_degree(4, 1), 6);
  for (int d = 2; d <= 12; ++d) EXPECT_EQ(sigma_degree(d, 1), 2 * (d - 1));
  EXPECT_THROW(sigma_degree(3, 0), DomainError);
}

}  // namespace
}  // namespace autbound
