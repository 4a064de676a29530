#include <gtest/gtest.h>

#include "fqfrieze/errors.hpp"
#include "fqfrieze/formulas.hpp"

using namespace fqfrieze;

namespace {

const int kPrimePowers[] = {2, 3, 4, 5, 7, 8, 9};

bool char2(int q) { return q % 2 == 0; }

// Partitions fitting in a 2 x (m-2) box, weighted by size.
BigInt gauss_binom2(int m, const BigInt& q) {
  BigInt sum = 0;
  for (int a = 0; a <= m - 2; ++a)
    for (int b = a; b <= m - 2; ++b) sum += ipow(q, a + b);
  return sum;
}

}  // namespace

TEST(Formulas, FriezeTablesFromTheLiterature) {
  // The q = 4, w = 7 entry is pinned by Search.WidthSevenOverF4ByBruteForce.
  const std::vector<std::vector<int>> table{
      {3, 5, 11, 21, 43, 85, 171},
      {2, 10, 35, 91, 260, 820, 2501},
      {7, 17, 79, 273, 1135, 4369, 17647},
  };
  for (int i = 0; i < 3; ++i) {
    const int q = i + 2;
    for (int w = 1; w <= 7; ++w) {
      EXPECT_EQ(count_friezes(q, char2(q), w), table[i][w - 1]) << q << " " << w;
    }
  }
}

TEST(Formulas, SmallWidthsInClosedForm) {
  for (int q : kPrimePowers) {
    const BigInt Q = q;
    EXPECT_EQ(count_friezes(Q, char2(q), 1), char2(q) ? BigInt(2 * Q - 1) : BigInt(Q - 1));
    EXPECT_EQ(count_friezes(Q, char2(q), 2), 1 + Q * Q);
    EXPECT_EQ(count_friezes(Q, char2(q), 3), Q * Q * Q + Q * Q - 1);
  }
}

TEST(Formulas, QBinomialAgainstBoxSum) {
  for (int q = 2; q <= 12; ++q)
    for (int m = 2; m <= 12; ++m) EXPECT_EQ(q_binom2(m, q), gauss_binom2(m, q)) << q << " " << m;
  EXPECT_EQ(q_binom2(4, 2), 35);
  EXPECT_EQ(q_binom2(1, 5), 0);
  EXPECT_EQ(q_binom2(2, 5), 1);
}

TEST(Formulas, QIntegers) {
  EXPECT_EQ(q_int(0, 7), 0);
  EXPECT_EQ(q_int(1, 7), 1);
  EXPECT_EQ(q_int(3, 4), 21);
  EXPECT_THROW(q_int(-1, 2), InputError);
}

TEST(Formulas, ConfigurationCountsAndRecursion) {
  EXPECT_EQ(count_configurations(3, 4), 84);
  EXPECT_EQ(count_configurations(2, 3), 6);
  for (int q = 2; q <= 9; ++q)
    for (int n = 2; n <= 20; ++n) EXPECT_TRUE(configuration_recursion_holds(q, n));
}

TEST(Formulas, ModuliCounts) {
  EXPECT_EQ(count_moduli(2, 6), 11);
  EXPECT_EQ(count_moduli(3, 5), 10);
  for (int q = 2; q <= 9; ++q) {
    for (int m = 1; m <= 10; ++m) {
      EXPECT_EQ(count_moduli(q, 2 * m + 1), count_moduli_odd_by_division(q, m));
    }
  }
}

TEST(Formulas, WidthsRelateToModuli) {
  for (int q : kPrimePowers) {
    for (int m = 2; m <= 10; ++m) {
      EXPECT_EQ(count_friezes(q, char2(q), 2 * m - 2), count_moduli(q, 2 * m + 1));
      const BigInt plus = count_moduli_plus(q, char2(q), m);
      const BigInt f = count_friezes(q, char2(q), 2 * m - 3);
      if (!char2(q) && m % 2 == 0) {
        EXPECT_EQ(f, (q - 1) * plus);
      } else {
        EXPECT_EQ(f, (q - 1) * (plus - 1) + 1);
      }
    }
  }
}

TEST(Formulas, SignedCounts) {
  const auto s = count_signed_configurations(3, false, 4);
  EXPECT_EQ(s.plus, 24);
  EXPECT_EQ(s.minus, 60);
  EXPECT_EQ(count_signed_configurations(5, false, 2).minus, 0);
  EXPECT_EQ(count_signed_configurations(4, true, 2).minus, 20);
  for (int q : kPrimePowers) {
    for (int n = 2; n <= 16; n += 2) {
      const auto c = count_signed_configurations(q, char2(q), n);
      if (char2(q)) {
        EXPECT_EQ(c.plus, c.minus);
        EXPECT_LE(c.plus, count_configurations(q, n));
      } else if (q == 3 || n == 2) {
        EXPECT_EQ(c.plus + c.minus, count_configurations(q, n));
      } else {
        EXPECT_LT(c.plus + c.minus, count_configurations(q, n));
      }
    }
  }
  EXPECT_THROW(count_signed_configurations(3, false, 5), InputError);
}

TEST(Formulas, ModuliPlusBranches) {
  EXPECT_EQ(count_moduli_plus(3, false, 2), 1);
  EXPECT_EQ(count_moduli_plus(3, false, 1), 1);
  EXPECT_EQ(count_moduli_plus(2, true, 3), 11);
  for (int q : kPrimePowers) {
    for (int m = 1; m <= 10; ++m) {
      EXPECT_EQ(count_moduli_plus(q, char2(q), m), moduli_plus_from_signed(q, char2(q), m))
          << q << " " << m;
      EXPECT_EQ(moduli_plus_sum_form(q, m), q_binom2(m, q));
    }
  }
}

TEST(Formulas, AlternatingPowerForm) {
  for (int q = 2; q <= 9; ++q)
    for (int m = 2; m <= 12; ++m)
      EXPECT_EQ(alternating_power_form(q, m), (q - 1) * q_binom2(m, q)) << q << " " << m;
}

TEST(Formulas, ExactDivisionGuards) {
  EXPECT_EQ(exact_div(12, 4), 3);
  EXPECT_THROW(exact_div(13, 4), InexactDivision);
  EXPECT_THROW(exact_div(1, 0), InexactDivision);
  EXPECT_THROW(count_friezes(1, false, 3), InputError);
  EXPECT_THROW(count_friezes(3, false, 0), InputError);
  EXPECT_TRUE(is_power_of_two(8));
  EXPECT_FALSE(is_power_of_two(12));
}

TEST(Formulas, HugeArgumentsStayExact) {
  const BigInt q = ipow(2, 61) - 1;
  EXPECT_EQ(count_friezes(q, false, 2), 1 + q * q);
  EXPECT_EQ(count_moduli_odd_by_division(q, 5), count_moduli(q, 11));
}
