#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace unimap {

// Partition into odd parts, stored non-increasing.
struct OddPartition {
  std::vector<int> parts;

  int size() const { return static_cast<int>(parts.size()); }
  int total() const;
  // (part, multiplicity) pairs, part ascending.
  std::vector<std::pair<int, int>> multiplicities() const;
};

// Calls `visit` once for every partition of `total` into exactly `s` odd
// parts. Yields nothing when total < s or total and s differ in parity.
// Throws std::invalid_argument on negative arguments.
void for_each_odd_partition(int total, int s, const std::function<void(const OddPartition&)>& visit);
std::vector<OddPartition> odd_partitions(int total, int s);

// Number of integer partitions of g (all parts, any size).
mpz_class partition_count(int g);

// m! / prod_i (m_i! i^{m_i}): permutations of m elements with cycle type
// `lambda`. Throws std::invalid_argument unless lambda sums to m.
mpz_class perm_count_for_type(const OddPartition& lambda, int m);

// Table of a(m, j), the number of permutations of m elements with exactly j
// cycles, all of odd length, for j <= max_cycles and m - j <= 2 * max_half_excess.
// Built from the recurrence on the cycle through one fixed element:
//   a(m, j) = sum_{odd k} (m-1)!/(m-k)! * a(m-k, j-1),  a(0, 0) = 1.
class OddCycleTable {
 public:
  OddCycleTable(int max_cycles, int max_half_excess);

  // a(m, j); zero when m < j or m - j is odd.
  const mpz_class& at(int m, int j) const;
  int max_cycles() const { return max_cycles_; }
  int max_half_excess() const { return max_half_excess_; }

 private:
  int max_cycles_;
  int max_half_excess_;
  // table_[j][h] = a(j + 2h, j)
  std::vector<std::vector<mpz_class>> table_;
  mpz_class zero_;
};

mpz_class odd_cycle_perm_count(int m, int j);

// #U_{g,n} = Cat(n) * 2^{s-n-1} * sum over odd cycle types with s = n+1-2g
// parts, summed with the DP route. Zero when 2g > n. The division by
// 2^{n+1-s} is checked to be exact.
mpz_class lehman_walsh_count(int n, int g);

// Same count through explicit enumeration of odd partitions. Refuses
// (std::domain_error) when p(g) >= 10^6.
mpz_class lehman_walsh_count_by_partitions(int n, int g);

// (2n-1)!!, the number of gluings of a 2n-gon.
mpz_class polygon_gluing_count(int n);

// (n, g) -> #U_{g,n} for 1 <= n <= max_n and 0 <= 2g <= n.
using CountTable = std::map<std::pair<int, int>, mpz_class>;
CountTable count_table(int max_n);

// sum over odd partitions lambda of `total` with s parts of
// s! / prod_i (m_i! i^{m_i}), i.e. sum over ordered odd compositions of
// prod 1/k_i. Exact.
mpq_class ordered_composition_weight(int s, int total);

// P(X_1 + ... + X_s = total) for i.i.d. X_beta. Exact combinatorial weight
// (rational) for total <= 200; convolution powers in long double above.
long double conditioned_sum_pmf(double beta, int s, int total);

// Natural logarithm of a positive big integer / rational.
double log_of(const mpz_class& x);
double log_of(const mpq_class& x);

}  // namespace unimap
