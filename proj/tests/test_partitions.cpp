#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fqfrieze/errors.hpp"
#include "fqfrieze/partitions.hpp"
#include "oracles.hpp"

using namespace fqfrieze;

TEST(Partitions, SmallExamples) {
  const auto p = enumerate_cyclic_partitions(4, 2);
  ASSERT_EQ(p.size(), 1U);
  EXPECT_EQ(p[0].blocks, (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
  EXPECT_EQ(count_cyclic_partitions(5, 3), 5U);
  EXPECT_EQ(count_cyclic_partitions(3, 2), 0U);
  EXPECT_EQ(count_cyclic_partitions(3, 3), 1U);
  EXPECT_EQ(count_cyclic_partitions(4, 3), 2U);
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(count_cyclic_partitions(n, 1), 0U);
  EXPECT_EQ(count_cyclic_partitions(4, 5), 0U);
  EXPECT_THROW(count_cyclic_partitions(1, 1), InputError);
}

TEST(Partitions, EveryPartitionValidAndDistinct) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::set<std::vector<std::vector<int>>> seen;
      for (const auto& p : enumerate_cyclic_partitions(n, k)) {
        EXPECT_EQ(p.n, n);
        EXPECT_EQ(p.k(), k);
        EXPECT_TRUE(is_valid_cyclic_partition(p));
        EXPECT_TRUE(seen.insert(p.blocks).second);
        for (std::size_t b = 1; b < p.blocks.size(); ++b) {
          EXPECT_LT(p.blocks[b - 1].front(), p.blocks[b].front());
        }
      }
    }
  }
}

TEST(Partitions, PrunedWalkMatchesUnprunedOracle) {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k <= n; ++k)
      EXPECT_EQ(count_cyclic_partitions(n, k), oracle::cyclic_partitions(n, k));
}

TEST(Partitions, ClosedFormMatchesEnumeration) {
  EXPECT_EQ(a_kn_closed_form(3, 4), 2);
  EXPECT_EQ(a_kn_closed_form(2, 4), 1);
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(a_kn_closed_form(n, n), 1);
    for (int k = 2; k <= n; ++k) {
      EXPECT_EQ(a_kn_closed_form(k, n), count_cyclic_partitions(n, k)) << k << " " << n;
      EXPECT_EQ(a_kn_via_expansion(k, n), a_kn_closed_form(k, n)) << k << " " << n;
    }
  }
  EXPECT_THROW(a_kn_closed_form(1, 4), InputError);
  EXPECT_THROW(a_kn_closed_form(5, 4), InputError);
}

TEST(Partitions, ReferenceRows) {
  // Rows n = 6 and n = 7, k = 2..n, evaluated by hand.
  const std::vector<int> six{1, 10, 20, 9, 1};
  const std::vector<int> seven{0, 21, 70, 56, 14, 1};
  for (int k = 2; k <= 6; ++k) EXPECT_EQ(a_kn_closed_form(k, 6), six[k - 2]);
  for (int k = 2; k <= 7; ++k) EXPECT_EQ(a_kn_closed_form(k, 7), seven[k - 2]);
}

TEST(FallingFactorials, BasisElementsAndSquares) {
  std::vector<BigInt> cube;
  for (int x = 0; x <= 3; ++x) cube.push_back(falling_factorial(x, 3));
  EXPECT_EQ(falling_factorial_expand(cube).coefficients,
            (std::vector<BigInt>{0, 0, 0, 1}));
  const std::vector<BigInt> squares{0, 1, 4};
  EXPECT_EQ(falling_factorial_expand(squares).coefficients, (std::vector<BigInt>{0, 1, 1}));
}

TEST(FallingFactorials, ReconstructionOnRandomPolynomials) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-50, 50), deg(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = deg(rng);
    std::vector<BigInt> poly(d + 1);
    for (auto& c : poly) c = coef(rng);
    auto eval = [&](const BigInt& x) {
      BigInt r = 0;
      for (int i = d; i >= 0; --i) r = r * x + poly[i];
      return r;
    };
    std::vector<BigInt> values;
    for (int x = 0; x <= d; ++x) values.push_back(eval(x));
    const auto e = falling_factorial_expand(values);
    ASSERT_EQ(static_cast<int>(e.coefficients.size()), d + 1);
    for (int x = -5; x <= d + 5; ++x) EXPECT_EQ(e.evaluate(x), eval(x));
  }
}

TEST(Identity, PartitionSumEqualsConfigurationCount) {
  for (const char* d : {"2", "3", "2^2", "5", "7", "2^3", "3^2"}) {
    const Field f = Field::parse(d);
    for (int n = 2; n <= 10; ++n) {
      const auto r = verify_partition_identity(f, n, 2e6);
      EXPECT_TRUE(r.identity_holds) << d << " " << n;
      EXPECT_TRUE(r.ok()) << d << " " << n;
    }
  }
}

TEST(Identity, DirectClassificationOfConfigurations) {
  const auto a = verify_partition_identity(Field::parse("2"), 4);
  EXPECT_TRUE(a.classified);
  EXPECT_TRUE(a.classification_holds);
  EXPECT_EQ(a.configurations, 18);
  const auto b = verify_partition_identity(Field::parse("3"), 5);
  EXPECT_TRUE(b.classified && b.classification_holds);
  const auto c = verify_partition_identity(Field::parse("2"), 3);
  EXPECT_EQ(c.partition_sum, 6);
  const auto skipped = verify_partition_identity(Field::parse("3^2"), 9, 1e6);
  EXPECT_FALSE(skipped.classified);
  EXPECT_TRUE(skipped.ok());
  EXPECT_THROW(verify_partition_identity(Field::parse("2"), 20, 1e6), BudgetExceeded);
}
