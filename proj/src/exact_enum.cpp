#include "unimap/exact_enum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "unimap/plane_tree.hpp"

namespace unimap {

int OddPartition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<std::pair<int, int>> OddPartition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!out.empty() && out.back().first == *it)
      ++out.back().second;
    else
      out.emplace_back(*it, 1);
  }
  return out;
}

void for_each_odd_partition(int total, int s, const std::function<void(const OddPartition&)>& visit) {
  if (total < 0 || s < 0) throw std::invalid_argument("odd_partitions: negative argument");
  if (total < s || (total - s) % 2 != 0) return;
  OddPartition current;
  current.parts.reserve(s);
  // Each remaining slot takes at least 1, so the next part is bounded both by
  // the previous part and by what the other slots leave over.
  std::function<void(int, int, int)> rec = [&](int remaining, int slots, int max_part) {
    if (slots == 0) {
      if (remaining == 0) visit(current);
      return;
    }
    int hi = std::min(max_part, remaining - (slots - 1));
    if (hi % 2 == 0) --hi;
    for (int part = hi; part >= 1; part -= 2) {
      // The rest must fit under `part` in every slot.
      if (static_cast<long long>(part) * slots < remaining) break;
      current.parts.push_back(part);
      rec(remaining - part, slots - 1, part);
      current.parts.pop_back();
    }
  };
  rec(total, s, total);
}

std::vector<OddPartition> odd_partitions(int total, int s) {
  std::vector<OddPartition> out;
  for_each_odd_partition(total, s, [&](const OddPartition& p) { out.push_back(p); });
  return out;
}

mpz_class partition_count(int g) {
  if (g < 0) return 0;
  std::vector<mpz_class> p(g + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= g; ++part)
    for (int x = part; x <= g; ++x) p[x] += p[x - part];
  return p[g];
}

mpz_class perm_count_for_type(const OddPartition& lambda, int m) {
  if (lambda.total() != m) throw std::invalid_argument("cycle type does not sum to the ground-set size");
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_class den = 1;
  for (auto [part, mult] : lambda.multiplicities()) {
    mpz_class f, pw;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mult));
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
    den *= f * pw;
  }
  return num / den;
}

OddCycleTable::OddCycleTable(int max_cycles, int max_half_excess)
    : max_cycles_(max_cycles), max_half_excess_(max_half_excess), zero_(0) {
  if (max_cycles < 0 || max_half_excess < 0) throw std::invalid_argument("OddCycleTable: negative size");
  table_.assign(max_cycles + 1, std::vector<mpz_class>(max_half_excess + 1, 0));
  table_[0][0] = 1;
  mpz_class falling;
  for (int j = 1; j <= max_cycles; ++j) {
    for (int h = 0; h <= max_half_excess; ++h) {
      const long m = j + 2L * h;
      mpz_class& acc = table_[j][h];
      // Cycle through element 1 of length k = 2i+1 leaves m-k elements in
      // j-1 cycles, i.e. half-excess h-i at j-1 cycles.
      falling = 1;
      for (int i = 0; i <= h; ++i) {
        if (i > 0) {
          falling *= static_cast<unsigned long>(m - 2 * i + 1);
          falling *= static_cast<unsigned long>(m - 2 * i);
        }
        const mpz_class& rest = table_[j - 1][h - i];
        if (rest != 0) acc += falling * rest;
      }
    }
  }
}

const mpz_class& OddCycleTable::at(int m, int j) const {
  if (j < 0 || m < j || (m - j) % 2 != 0) return zero_;
  const int h = (m - j) / 2;
  if (j > max_cycles_ || h > max_half_excess_) throw std::out_of_range("OddCycleTable: entry outside table");
  return table_[j][h];
}

mpz_class odd_cycle_perm_count(int m, int j) {
  if (m < 0 || j < 0 || m < j || (m - j) % 2 != 0) return 0;
  return OddCycleTable(j, (m - j) / 2).at(m, j);
}

namespace {

mpz_class lehman_walsh_from_sum(int n, int g, const mpz_class& perm_sum) {
  mpz_class numerator = catalan(static_cast<unsigned>(n)) * perm_sum;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 4, static_cast<unsigned long>(g));  // 2^{n+1-s}
  if (!mpz_divisible_p(numerator.get_mpz_t(), power.get_mpz_t()))
    throw std::logic_error("Lehman-Walsh sum not divisible by 2^{n+1-s}");
  return numerator / power;
}

}  // namespace

mpz_class lehman_walsh_count(int n, int g) {
  if (n < 0 || g < 0) throw std::invalid_argument("lehman_walsh_count: negative argument");
  if (2 * g > n) return 0;
  const int s = n + 1 - 2 * g;
  return lehman_walsh_from_sum(n, g, odd_cycle_perm_count(n + 1, s));
}

mpz_class lehman_walsh_count_by_partitions(int n, int g) {
  if (n < 0 || g < 0) throw std::invalid_argument("lehman_walsh_count: negative argument");
  if (2 * g > n) return 0;
  if (partition_count(g) >= 1000000) throw std::domain_error("partition route disabled: p(g) >= 10^6");
  const int s = n + 1 - 2 * g;
  mpz_class sum = 0;
  for_each_odd_partition(n + 1, s, [&](const OddPartition& p) { sum += perm_count_for_type(p, n + 1); });
  return lehman_walsh_from_sum(n, g, sum);
}

mpz_class polygon_gluing_count(int n) {
  mpz_class out = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) out *= k;
  return out;
}

CountTable count_table(int max_n) {
  CountTable out;
  for (int n = 1; n <= max_n; ++n)
    for (int g = 0; 2 * g <= n; ++g) out[{n, g}] = lehman_walsh_count(n, g);
  return out;
}

mpq_class ordered_composition_weight(int s, int total) {
  if (s < 0 || total < 0) throw std::invalid_argument("ordered_composition_weight: negative argument");
  const mpz_class& a = odd_cycle_perm_count(total, s);
  if (a == 0) return 0;
  mpz_class sf, tf;
  mpz_fac_ui(sf.get_mpz_t(), static_cast<unsigned long>(s));
  mpz_fac_ui(tf.get_mpz_t(), static_cast<unsigned long>(total));
  mpq_class w(sf * a, tf);
  w.canonicalize();
  return w;
}

double log_of(const mpz_class& x) {
  if (x <= 0) throw std::domain_error("log of non-positive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double log_of(const mpq_class& x) { return log_of(mpz_class(x.get_num())) - log_of(mpz_class(x.get_den())); }

namespace {

using Series = std::vector<long double>;

Series convolve(const Series& a, const Series& b, std::size_t len) {
  Series out(len, 0.0L);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0.0L) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

long double conditioned_sum_pmf(double beta, int s, int total) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("conditioned_sum_pmf: beta must lie in (0,1)");
  if (s < 1) throw std::invalid_argument("conditioned_sum_pmf: s must be >= 1");
  if (total < s || (total - s) % 2 != 0) return 0.0L;
  const long double b = beta;
  const long double z = std::atanh(b);
  if (total <= 200) {
    const mpq_class w = ordered_composition_weight(s, total);
    const long double lg = static_cast<long double>(log_of(w)) + total * std::log(b) - s * std::log(z);
    return std::exp(lg);
  }
  // Binary powering of the truncated pmf; entries only shrink, and
  // long double's exponent range covers every index up to `total`.
  const std::size_t len = static_cast<std::size_t>(total) + 1;
  Series base(len, 0.0L);
  long double term = b / z;
  for (std::size_t k = 1; k < len; k += 2) {
    base[k] = term / static_cast<long double>(k);
    term *= b * b;
  }
  Series result(1, 1.0L);
  for (int e = s; e > 0; e >>= 1) {
    if (e & 1) result = convolve(result, base, len);
    if (e > 1) base = convolve(base, base, len);
  }
  return total < static_cast<int>(result.size()) ? result[total] : 0.0L;
}

}  // namespace unimap
