#pragma once

// Partitions of n cyclically ordered points into k blocks, no block holding
// two consecutive points (n and 1 count as consecutive). A_{k,n} counts them.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fqfrieze/formulas.hpp"
#include "fqfrieze/gf.hpp"

namespace fqfrieze {

struct CyclicPartition {
  int n = 0;
  // 1-based labels, each block sorted, blocks ordered by least element.
  std::vector<std::vector<int>> blocks;

  int k() const { return static_cast<int>(blocks.size()); }
};

// Restricted-growth labels s_0..s_{n-1} (s_0 = 0, block of point i+1) of
// every valid partition into exactly k blocks, in lexicographic order.
// Requires n >= 2 and k >= 1 (InputError).
void for_each_cyclic_partition(int n, int k,
                               const std::function<void(std::span<const int>)>& visit);

std::vector<CyclicPartition> enumerate_cyclic_partitions(int n, int k);
std::uint64_t count_cyclic_partitions(int n, int k);

CyclicPartition partition_from_labels(std::span<const int> labels);
bool is_valid_cyclic_partition(const CyclicPartition& p);

// k! A_{k,n} = sum_{j=2}^{k} (-1)^{k+j} C(k,j) ((j-1)^n + (-1)^n (j-1)),
// divided exactly. Requires n >= 2 and 2 <= k <= n.
BigInt a_kn_closed_form(int k, int n);

// (x)_k = x (x-1) ... (x-k+1).
BigInt falling_factorial(const BigInt& x, int k);

struct FallingFactorialExpansion {
  std::vector<BigInt> coefficients;  // B_0..B_d

  BigInt evaluate(const BigInt& x) const;
};

// Coefficients of the polynomial of degree <= d through P(0), ..., P(d):
// k! B_k = sum_{j=0}^{k} (-1)^{k-j} C(k,j) P(j).
FallingFactorialExpansion falling_factorial_expand(std::span<const BigInt> values);

// A_{k,n} read off the expansion of c_n / (q (q+1)) in the basis (q-1)_{k-2}.
BigInt a_kn_via_expansion(int k, int n);

struct PartitionIdentityReport {
  int n = 0;
  BigInt configurations;  // q^n + (-1)^n q
  BigInt partition_sum;   // q (q+1) sum_k A_{k,n} (q-1)(q-2)...(q-k+2)
  bool identity_holds = false;
  // Direct classification of C_n(F_q) by equality pattern; skipped when
  // (q+1)^n is over budget.
  bool classified = false;
  bool classification_holds = false;

  bool ok() const { return identity_holds && (!classified || classification_holds); }
};

// Throws BudgetExceeded when the partition enumeration itself (bounded by
// the Bell number of n) exceeds the budget.
PartitionIdentityReport verify_partition_identity(const Field& f, int n, double budget = 1e8);

}  // namespace fqfrieze
