#include "fqfrieze/partitions.hpp"

#include <map>
#include <string>

#include "fqfrieze/errors.hpp"
#include "fqfrieze/moduli.hpp"

namespace fqfrieze {

namespace {

void check_nk(int n, int k) {
  if (n < 2) throw InputError("cyclic partitions need n >= 2, got " + std::to_string(n));
  if (k < 1) throw InputError("cyclic partitions need k >= 1, got " + std::to_string(k));
}

class RgsWalker {
 public:
  RgsWalker(int n, int k, const std::function<void(std::span<const int>)>& visit)
      : n_(n), k_(k), visit_(visit), s_(n, 0) {}

  void run() {
    if (k_ > n_) return;
    step(1, 1);
  }

 private:
  void step(int i, int used) {
    if (i == n_) {
      if (used == k_) visit_(std::span<const int>(s_));
      return;
    }
    const int top = std::min(used, k_ - 1);
    for (int label = 0; label <= top; ++label) {
      if (label == s_[i - 1]) continue;
      if (i == n_ - 1 && label == s_[0]) continue;
      const int now = used + (label == used ? 1 : 0);
      if (k_ - now > n_ - 1 - i) continue;
      s_[i] = label;
      step(i + 1, now);
    }
  }

  int n_;
  int k_;
  const std::function<void(std::span<const int>)>& visit_;
  std::vector<int> s_;
};

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

double bell_estimate(int n) {
  std::vector<double> row{1.0};
  for (int i = 1; i < n; ++i) {
    std::vector<double> next{row.back()};
    for (double v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

// q^n + (-1)^n q for any integer q, including q = 1.
BigInt config_poly(const BigInt& q, int n) { return n % 2 == 0 ? ipow(q, n) + q : ipow(q, n) - q; }

}  // namespace

void for_each_cyclic_partition(int n, int k,
                               const std::function<void(std::span<const int>)>& visit) {
  check_nk(n, k);
  RgsWalker(n, k, visit).run();
}

std::vector<CyclicPartition> enumerate_cyclic_partitions(int n, int k) {
  std::vector<CyclicPartition> out;
  for_each_cyclic_partition(n, k,
                            [&](std::span<const int> s) { out.push_back(partition_from_labels(s)); });
  return out;
}

std::uint64_t count_cyclic_partitions(int n, int k) {
  std::uint64_t count = 0;
  for_each_cyclic_partition(n, k, [&](std::span<const int>) { ++count; });
  return count;
}

CyclicPartition partition_from_labels(std::span<const int> labels) {
  CyclicPartition p;
  p.n = static_cast<int>(labels.size());
  std::map<int, int> order;
  for (int i = 0; i < p.n; ++i) {
    auto [it, fresh] = order.try_emplace(labels[i], static_cast<int>(order.size()));
    if (fresh) p.blocks.emplace_back();
    p.blocks[it->second].push_back(i + 1);
  }
  return p;
}

bool is_valid_cyclic_partition(const CyclicPartition& p) {
  if (p.n < 2) return false;
  std::vector<int> owner(p.n + 1, -1);
  for (int b = 0; b < p.k(); ++b) {
    if (p.blocks[b].empty()) return false;
    for (int x : p.blocks[b]) {
      if (x < 1 || x > p.n || owner[x] != -1) return false;
      owner[x] = b;
    }
  }
  for (int i = 1; i <= p.n; ++i) {
    if (owner[i] == -1) return false;
    if (owner[i] == owner[i % p.n + 1]) return false;
  }
  return true;
}

BigInt a_kn_closed_form(int k, int n) {
  if (n < 2 || k < 2 || k > n) {
    throw InputError("closed form needs n >= 2 and 2 <= k <= n, got k = " + std::to_string(k) +
                     ", n = " + std::to_string(n));
  }
  BigInt scaled = 0;
  for (int j = 2; j <= k; ++j) {
    BigInt term = ipow(BigInt(j - 1), n);
    if (n % 2 == 0) {
      term += j - 1;
    } else {
      term -= j - 1;
    }
    term *= binomial(k, j);
    if ((k + j) % 2 == 0) {
      scaled += term;
    } else {
      scaled -= term;
    }
  }
  return exact_div(scaled, factorial(k));
}

BigInt falling_factorial(const BigInt& x, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

BigInt FallingFactorialExpansion::evaluate(const BigInt& x) const {
  BigInt sum = 0;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    sum += coefficients[k] * falling_factorial(x, static_cast<int>(k));
  }
  return sum;
}

FallingFactorialExpansion falling_factorial_expand(std::span<const BigInt> values) {
  FallingFactorialExpansion e;
  const int d = static_cast<int>(values.size()) - 1;
  for (int k = 0; k <= d; ++k) {
    BigInt scaled = 0;
    for (int j = 0; j <= k; ++j) {
      const BigInt term = binomial(k, j) * values[j];
      if ((k - j) % 2 == 0) {
        scaled += term;
      } else {
        scaled -= term;
      }
    }
    e.coefficients.push_back(exact_div(scaled, factorial(k)));
  }
  return e;
}

BigInt a_kn_via_expansion(int k, int n) {
  if (n < 2 || k < 2 || k > n) {
    throw InputError("expansion needs n >= 2 and 2 <= k <= n");
  }
  // P(x) = c_n(x+1) / ((x+1)(x+2)) = sum_k A_{k,n} (x)_{k-2}, degree n-2.
  std::vector<BigInt> values;
  for (int j = 0; j <= n - 2; ++j) {
    const BigInt q = j + 1;
    values.push_back(exact_div(config_poly(q, n), q * (q + 1)));
  }
  return falling_factorial_expand(values).coefficients[k - 2];
}

PartitionIdentityReport verify_partition_identity(const Field& f, int n, double budget) {
  if (n < 2) throw InputError("partition identity needs n >= 2");
  const double bell = bell_estimate(n);
  if (bell > budget) {
    throw BudgetExceeded("enumerating cyclic partitions of " + std::to_string(n) +
                             " points visits up to " + std::to_string(bell) + " labelings",
                         bell, budget);
  }
  const BigInt q = f.order();
  PartitionIdentityReport r;
  r.n = n;
  r.configurations = count_configurations(q, n);

  std::vector<std::uint64_t> a(n + 1, 0);
  BigInt sum = 0;
  for (int k = 2; k <= n; ++k) {
    a[k] = count_cyclic_partitions(n, k);
    sum += BigInt(a[k]) * falling_factorial(q - 1, k - 2);
  }
  r.partition_sum = q * (q + 1) * sum;
  r.identity_holds = r.partition_sum == r.configurations;

  double points = 1;
  for (int i = 0; i < n; ++i) points *= static_cast<double>(f.order() + 1);
  if (points > budget) return r;

  // Each configuration determines a partition by which points coincide; a
  // pattern with k blocks is realized by (q+1)_k configurations.
  std::map<std::vector<int>, std::uint64_t> patterns;
  ModuliOptions opts;
  opts.budget = budget;
  std::vector<int> label(f.order() + 1);
  for_each_configuration(
      f, n, SignFilter::all,
      [&](std::span<const int> v) {
        std::fill(label.begin(), label.end(), -1);
        std::vector<int> s(v.size());
        int next = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (label[v[i]] < 0) label[v[i]] = next++;
          s[i] = label[v[i]];
        }
        ++patterns[s];
      },
      opts);
  r.classified = true;
  bool ok = true;
  std::vector<std::uint64_t> per_k(n + 1, 0);
  for (const auto& [s, count] : patterns) {
    const CyclicPartition p = partition_from_labels(s);
    ok = ok && is_valid_cyclic_partition(p);
    ok = ok && BigInt(count) == falling_factorial(q + 1, p.k());
    ++per_k[p.k()];
  }
  for (int k = 2; k <= n; ++k) {
    const std::uint64_t expect = k <= f.order() + 1 ? a[k] : 0;
    ok = ok && per_k[k] == expect;
  }
  r.classification_holds = ok;
  return r;
}

}  // namespace fqfrieze
