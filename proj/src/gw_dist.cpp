#include "unimap/gw_dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unimap/asymptotics.hpp"

namespace unimap {

namespace {

void check_xi(double xi) {
  if (!(xi > 0.0 && xi <= 0.5)) throw std::domain_error("xi must lie in (0, 1/2]");
}

}  // namespace

XBetaLaw::XBetaLaw(double beta) : beta_(beta), z_(0.0) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("X_beta: beta must lie in (0, 1)");
  z_ = std::atanh(beta);
  constexpr std::size_t max_table = 1u << 16;
  double cum = 0.0;
  double pw = beta / z_;  // beta^{2k+1} / Z
  for (std::size_t k = 0; k < max_table; ++k) {
    cum += pw / static_cast<double>(2 * k + 1);
    cdf_.push_back(cum);
    if (1.0 - cum < 1e-17 || pw == 0.0) break;
    pw *= beta * beta;
  }
}

double XBetaLaw::pmf(long value) const {
  if (value <= 0 || value % 2 == 0) return 0.0;
  return std::exp(static_cast<double>(value) * std::log(beta_) - std::log(z_) - std::log(static_cast<double>(value)));
}

long XBetaLaw::sample(Rng& rng) const {
  const double u = uniform01(rng);
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it != cdf_.end()) return 2 * static_cast<long>(it - cdf_.begin()) + 1;
  // Tail beyond the table.
  long k = static_cast<long>(cdf_.size());
  double cum = cdf_.back();
  for (;;) {
    const double p = pmf(2 * k + 1);
    if (p == 0.0) return 2 * k + 1;
    cum += p;
    if (u < cum) return 2 * k + 1;
    ++k;
  }
}

double x_beta_pmf(double beta, long value) { return XBetaLaw(beta).pmf(value); }

long x_beta_sample(double beta, Rng& rng) { return XBetaLaw(beta).sample(rng); }

double size_biased_cycle_pmf(double beta, long value) {
  if (!(beta >= 0.0 && beta < 1.0)) throw std::domain_error("size_biased_cycle_pmf: beta must lie in [0, 1)");
  if (value <= 0 || value % 2 == 0) return 0.0;
  return (1.0 - beta * beta) * std::pow(beta, static_cast<double>(value - 1));
}

double root_degree_pmf_beta(double beta, int d) {
  if (!(beta >= 0.0 && beta < 1.0)) throw std::domain_error("root degree law: beta must lie in [0, 1)");
  if (d <= 0) return 0.0;
  // ((1+b)^d - (1-b)^d) / (2^d b) = ((1+b)/2)^d (1 - e^{-2 d atanh b}) / b,
  // which has the finite limit 2d / 2^d at b = 0 and never overflows.
  double ratio;
  if (beta == 0.0) {
    ratio = 2.0 * d * std::pow(0.5, d);
  } else {
    ratio = std::pow((1.0 + beta) / 2.0, d) * -std::expm1(-2.0 * d * std::atanh(beta)) / beta;
  }
  return (1.0 - beta * beta) / 4.0 * ratio;
}

double root_degree_limit_pmf(double theta, int d) { return root_degree_pmf_beta(solve_beta_theta(theta), d); }

double root_degree_convolution_pmf(double beta, int d) {
  if (d <= 0) return 0.0;
  const double p1 = (1.0 + beta) / 2.0, p2 = (1.0 - beta) / 2.0;
  double sum = 0.0;
  // G1 = i, G2 = d + 1 - i, both >= 1.
  for (int i = 1; i <= d; ++i)
    sum += std::pow(1.0 - p1, i - 1) * p1 * std::pow(1.0 - p2, d - i) * p2;
  return sum;
}

double extinction_prob(double xi) {
  check_xi(xi);
  return xi / (1.0 - xi);
}

int sample_gw_offspring(double xi, Rng& rng) { return std::geometric_distribution<int>(xi)(rng); }

int sample_doomed_offspring(double xi, Rng& rng) { return std::geometric_distribution<int>(1.0 - xi)(rng); }

SurvivorOffspring sample_survivor_offspring(double xi, Rng& rng) {
  SurvivorOffspring out;
  out.doomed_before = std::geometric_distribution<int>(1.0 - xi)(rng);
  out.after = std::geometric_distribution<int>(xi)(rng);
  const double survive = 1.0 - xi / (1.0 - xi);
  out.after_survives.resize(out.after);
  for (int i = 0; i < out.after; ++i) out.after_survives[i] = survive > 0.0 && uniform01(rng) < survive;
  return out;
}

PlaneTree gw_ball_sample(double xi, int r, Rng& rng) {
  check_xi(xi);
  if (r < 0) throw std::invalid_argument("negative radius");
  std::vector<std::vector<int>> kids(1);
  std::vector<int> frontier{0};
  for (int level = 0; level < r && !frontier.empty(); ++level) {
    std::vector<int> next;
    for (int v : frontier) {
      const int k = sample_gw_offspring(xi, rng);
      for (int i = 0; i < k; ++i) {
        int c = static_cast<int>(kids.size());
        kids.emplace_back();
        kids[v].push_back(c);
        next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return PlaneTree(kids);
}

PlaneTree gw_inf_ball_sample(double xi, int r, Rng& rng) {
  check_xi(xi);
  if (r < 0) throw std::invalid_argument("negative radius");
  std::vector<std::vector<int>> kids(1);
  std::vector<char> surviving{1};
  std::vector<int> frontier{0};
  auto add_child = [&](int parent, bool alive, std::vector<int>& next) {
    int c = static_cast<int>(kids.size());
    kids.emplace_back();
    surviving.push_back(alive ? 1 : 0);
    kids[parent].push_back(c);
    next.push_back(c);
  };
  for (int level = 0; level < r; ++level) {
    std::vector<int> next;
    for (int v : frontier) {
      if (surviving[v]) {
        const auto off = sample_survivor_offspring(xi, rng);
        for (int i = 0; i < off.doomed_before; ++i) add_child(v, false, next);
        add_child(v, true, next);
        for (int i = 0; i < off.after; ++i) add_child(v, off.after_survives[i], next);
      } else {
        const int k = sample_doomed_offspring(xi, rng);
        for (int i = 0; i < k; ++i) add_child(v, false, next);
      }
    }
    frontier = std::move(next);
  }
  return PlaneTree(kids);
}

bool gw_reaches_height(double xi, int h, Rng& rng) {
  check_xi(xi);
  long long alive = 1;
  for (int level = 0; level < h; ++level) {
    if (alive == 0) return false;
    alive = std::negative_binomial_distribution<long long>(alive, xi)(rng);
  }
  return alive > 0;
}

double ball_probability_kd(double xi, int k, int d) {
  check_xi(xi);
  if (d < 1 || k < d) throw std::invalid_argument("ball_probability: need 1 <= d <= k");
  // ((1-xi)^d - xi^d) / (1 - 2xi) = sum_{i<d} (1-xi)^i xi^{d-1-i}; the sum
  // form stays exact at the critical point xi = 1/2.
  double tail = 0.0;
  for (int i = 0; i < d; ++i) tail += std::pow(1.0 - xi, i) * std::pow(xi, d - 1 - i);
  return std::pow(xi * (1.0 - xi), k + 1 - d) * tail;
}

double ball_probability(double xi, const PlaneTree& t) {
  if (t.height() < 1) throw std::invalid_argument("ball_probability: tree must have height >= 1");
  return ball_probability_kd(xi, t.edge_count(), t.count_at_depth(t.height()));
}

std::vector<std::int64_t> gw_inf_generation_sizes(double xi, int r, Rng& rng) {
  check_xi(xi);
  if (r < 0) throw std::invalid_argument("negative radius");
  using Count = long long;
  const double survive = 1.0 - xi / (1.0 - xi);
  auto negbin = [&](Count trials, double p) -> Count {
    if (trials == 0) return 0;
    return std::negative_binomial_distribution<Count>(trials, p)(rng);
  };
  std::vector<std::int64_t> sizes{1};
  Count alive = 1, doomed = 0;
  for (int level = 0; level < r; ++level) {
    const Count before = negbin(alive, 1.0 - xi);
    const Count after = negbin(alive, xi);
    const Count after_alive =
        (after == 0 || survive <= 0.0) ? 0 : std::binomial_distribution<Count>(after, survive)(rng);
    const Count doomed_kids = negbin(doomed, 1.0 - xi);
    const Count next_alive = alive + after_alive;
    const Count next_doomed = before + (after - after_alive) + doomed_kids;
    alive = next_alive;
    doomed = next_doomed;
    sizes.push_back(alive + doomed);
  }
  return sizes;
}

double ball_mean_degree(const std::vector<std::int64_t>& generation_sizes, int r) {
  if (r < 1 || static_cast<int>(generation_sizes.size()) < r + 1)
    throw std::invalid_argument("ball_mean_degree: need generation sizes 0..r with r >= 1");
  long double inner = 0.0L, children = 0.0L;
  for (int j = 0; j < r; ++j) inner += static_cast<long double>(generation_sizes[j]);
  for (int j = 1; j <= r; ++j) children += static_cast<long double>(generation_sizes[j]);
  // Every non-root vertex of V_r also carries its parent edge.
  return static_cast<double>((children + inner - 1.0L) / inner);
}

}  // namespace unimap
