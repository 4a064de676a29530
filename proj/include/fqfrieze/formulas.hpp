#pragma once

// Closed-form counts as exact integer polynomials in q. Every function
// accepts any integer q >= 2, prime power or not; only comparisons against
// enumeration need a real field.

#include <boost/multiprecision/cpp_int.hpp>

namespace fqfrieze {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(const BigInt& base, unsigned exponent);

// a / b, throwing InexactDivision when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

bool is_power_of_two(const BigInt& q);

// [m]_Q = 1 + Q + ... + Q^{m-1}; 0 for m = 0.
BigInt q_int(int m, const BigInt& base);

// (q^m - 1)(q^{m-1} - 1) / ((q - 1)(q^2 - 1)).
BigInt q_binom2(int m, const BigInt& q);

// Number of tame friezes of width w >= 1 (throws InputError otherwise):
//   w = 2m - 2:  [m]_{q^2}
//   w = 2m - 3:  (q-1) C(m,2)_q, plus q^{m-1} unless char != 2 and m even.
BigInt count_friezes(const BigInt& q, bool char_is_2, int w);

// |C_n| = q^n + (-1)^n q for n >= 2.
BigInt count_configurations(const BigInt& q, int n);

// c_{n+2} == (q-1) c_{n+1} + q c_n, checked on the closed form.
bool configuration_recursion_holds(const BigInt& q, int n);

// Points of the completed moduli space for n >= 2:
//   n = 2m + 1:  [m]_{q^2}
//   n = 2m:      1 + q [m-1]_{q^2}
BigInt count_moduli(const BigInt& q, int n);

// c_{2m+1} / (q^3 - q), the free-orbit count (exact division enforced).
BigInt count_moduli_odd_by_division(const BigInt& q, int m);

struct SignedCounts {
  BigInt plus;
  BigInt minus;
};

// |C_n^+| and |C_n^-| for even n >= 2 from c_n^± = c_{n-1} + q c_{n-2}^∓,
// seeded with c_2^+ = q(q+1) and c_2^- = 0 (char != 2) or q(q+1) (char 2).
// Throws InputError for odd n.
SignedCounts count_signed_configurations(const BigInt& q, bool char_is_2, int n);

// sum_{k=1}^{m-1} q^{k-1} [m-k]_{q^2}, which equals C(m,2)_q.
BigInt moduli_plus_sum_form(const BigInt& q, int m);

// Points of the "+" moduli space for n = 2m, m >= 1:
//   C(m,2)_q                      if char != 2 and m even
//   C(m,2)_q + [m-1]_q + 1        otherwise
// Cross-checks the closed form against the sum form and throws
// std::logic_error if they ever differ.
BigInt count_moduli_plus(const BigInt& q, bool char_is_2, int m);

// Same quantity obtained from the signed configuration counts by
// splitting off the single non-free orbit of alternating configurations.
BigInt moduli_plus_from_signed(const BigInt& q, bool char_is_2, int m);

// (q-1) C(m,2)_q written as a sum of odd powers minus a sum of even powers.
BigInt alternating_power_form(const BigInt& q, int m);

}  // namespace fqfrieze
