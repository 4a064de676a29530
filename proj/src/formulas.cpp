#include "fqfrieze/formulas.hpp"

#include <stdexcept>
#include <string>

#include "fqfrieze/errors.hpp"

namespace fqfrieze {

namespace {

void require_q(const BigInt& q) {
  if (q < 2) throw InputError("q must be at least 2");
}

}  // namespace

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw InexactDivision("division by zero");
  BigInt quot, rem;
  boost::multiprecision::divide_qr(a, b, quot, rem);
  if (rem != 0) {
    throw InexactDivision(a.str() + " is not divisible by " + b.str());
  }
  return quot;
}

bool is_power_of_two(const BigInt& q) { return q > 0 && (q & (q - 1)) == 0; }

BigInt q_int(int m, const BigInt& base) {
  if (m < 0) throw InputError("q-integer index must be nonnegative");
  BigInt sum = 0;
  BigInt term = 1;
  for (int i = 0; i < m; ++i) {
    sum += term;
    term *= base;
  }
  return sum;
}

BigInt q_binom2(int m, const BigInt& q) {
  require_q(q);
  if (m < 1) throw InputError("q-binomial index must be at least 1");
  const BigInt num = (ipow(q, m) - 1) * (ipow(q, m - 1) - 1);
  return exact_div(num, (q - 1) * (q * q - 1));
}

BigInt count_friezes(const BigInt& q, bool char_is_2, int w) {
  require_q(q);
  if (w < 1) throw InputError("frieze width must be at least 1, got " + std::to_string(w));
  if (w % 2 == 0) return q_int((w + 2) / 2, q * q);
  const int m = (w + 3) / 2;
  BigInt result = (q - 1) * q_binom2(m, q);
  if (char_is_2 || m % 2 == 1) result += ipow(q, m - 1);
  return result;
}

BigInt count_configurations(const BigInt& q, int n) {
  require_q(q);
  if (n < 2) throw InputError("configurations need n >= 2");
  return n % 2 == 0 ? ipow(q, n) + q : ipow(q, n) - q;
}

bool configuration_recursion_holds(const BigInt& q, int n) {
  return count_configurations(q, n + 2) ==
         (q - 1) * count_configurations(q, n + 1) + q * count_configurations(q, n);
}

BigInt count_moduli(const BigInt& q, int n) {
  require_q(q);
  if (n < 2) throw InputError("moduli count needs n >= 2");
  if (n % 2 == 1) return q_int((n - 1) / 2, q * q);
  return 1 + q * q_int(n / 2 - 1, q * q);
}

BigInt count_moduli_odd_by_division(const BigInt& q, int m) {
  return exact_div(count_configurations(q, 2 * m + 1), q * q * q - q);
}

SignedCounts count_signed_configurations(const BigInt& q, bool char_is_2, int n) {
  require_q(q);
  if (n < 2 || n % 2 != 0) {
    throw InputError("signed configuration counts need even n >= 2, got " + std::to_string(n));
  }
  SignedCounts c{q * (q + 1), char_is_2 ? q * (q + 1) : BigInt(0)};
  for (int k = 4; k <= n; k += 2) {
    const BigInt odd = count_configurations(q, k - 1);
    c = SignedCounts{odd + q * c.minus, odd + q * c.plus};
  }
  return c;
}

BigInt moduli_plus_sum_form(const BigInt& q, int m) {
  require_q(q);
  BigInt sum = 0;
  for (int k = 1; k <= m - 1; ++k) sum += ipow(q, k - 1) * q_int(m - k, q * q);
  return sum;
}

BigInt count_moduli_plus(const BigInt& q, bool char_is_2, int m) {
  require_q(q);
  if (m < 1) throw InputError("count_moduli_plus needs m >= 1");
  const BigInt binom = q_binom2(m, q);
  if (binom != moduli_plus_sum_form(q, m)) {
    throw std::logic_error("sum form and q-binomial disagree at m = " + std::to_string(m));
  }
  if (!char_is_2 && m % 2 == 0) return binom;
  return binom + q_int(m - 1, q) + 1;
}

BigInt moduli_plus_from_signed(const BigInt& q, bool char_is_2, int m) {
  const BigInt plus = count_signed_configurations(q, char_is_2, 2 * m).plus;
  const BigInt group = q * q * q - q;
  if (!char_is_2 && m % 2 == 0) return exact_div(plus, group);
  return exact_div(plus - q * (q + 1), group) + 1;
}

BigInt alternating_power_form(const BigInt& q, int m) {
  require_q(q);
  BigInt sum = 0;
  if (m < 2) return sum;
  const int lowest_odd = m % 2 == 0 ? m - 1 : m;
  for (int e = lowest_odd; e <= 2 * m - 3; e += 2) sum += ipow(q, e);
  const int highest_even = m % 2 == 0 ? m - 2 : m - 3;
  for (int e = 0; e <= highest_even; e += 2) sum -= ipow(q, e);
  return sum;
}

}  // namespace fqfrieze
