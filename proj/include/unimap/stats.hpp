#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace unimap {

// Total variation distance (1/2) sum |p - q| over the union of supports.
// Mass missing from either table (1 - sum) is lumped into one extra
// "other" outcome. Throws std::invalid_argument on negative entries.
template <class Key>
double tv_distance(const std::map<Key, double>& p, const std::map<Key, double>& q) {
  double sum = 0.0, mass_p = 0.0, mass_q = 0.0;
  for (const auto& [k, v] : p) {
    if (v < 0.0) throw std::invalid_argument("tv_distance: negative entry");
    mass_p += v;
    auto it = q.find(k);
    sum += std::abs(v - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [k, v] : q) {
    if (v < 0.0) throw std::invalid_argument("tv_distance: negative entry");
    mass_q += v;
    if (!p.count(k)) sum += v;
  }
  const double other_p = std::max(0.0, 1.0 - mass_p), other_q = std::max(0.0, 1.0 - mass_q);
  sum += std::abs(other_p - other_q);
  return 0.5 * sum;
}

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Upper tail of the chi-square law with `dof` degrees of freedom.
double chi_square_survival(double statistic, int dof);

// Pearson test of observed counts against theoretical probabilities over
// `n_samples` draws. Outcomes whose expected count is below `min_expected`,
// observations outside the theoretical support and the theoretical mass not
// listed are merged into one "other" bin.
template <class Key>
ChiSquareResult chi_square(const std::map<Key, std::uint64_t>& observed, const std::map<Key, double>& theory,
                           std::uint64_t n_samples, double min_expected = 10.0) {
  if (n_samples == 0) throw std::invalid_argument("chi_square: no samples");
  const double n = static_cast<double>(n_samples);
  double stat = 0.0, listed = 0.0, other_expected = 0.0;
  double other_observed = 0.0;
  int bins = 0;
  for (const auto& [k, p] : theory) {
    if (p < 0.0) throw std::invalid_argument("chi_square: negative probability");
    listed += p;
    auto it = observed.find(k);
    const double obs = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    const double exp = p * n;
    if (exp < min_expected) {
      other_expected += exp;
      other_observed += obs;
      continue;
    }
    stat += (obs - exp) * (obs - exp) / exp;
    ++bins;
  }
  for (const auto& [k, c] : observed)
    if (!theory.count(k)) other_observed += static_cast<double>(c);
  other_expected += std::max(0.0, 1.0 - listed) * n;
  if (other_expected > 0.0) {
    stat += (other_observed - other_expected) * (other_observed - other_expected) / other_expected;
    ++bins;
  } else if (other_observed > 0.0) {
    stat = INFINITY;
  }
  ChiSquareResult r;
  r.statistic = stat;
  r.dof = std::max(bins - 1, 1);
  r.p_value = std::isinf(stat) ? 0.0 : chi_square_survival(stat, r.dof);
  return r;
}

// (count - n p) / sqrt(n p (1 - p)); 0 when p is 0 or 1 and the count agrees.
double z_score(double count, double n, double p);

}  // namespace unimap
