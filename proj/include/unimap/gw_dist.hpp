#pragma once

#include <cstdint>
#include <vector>

#include "unimap/plane_tree.hpp"
#include "unimap/rng.hpp"

namespace unimap {

// Law of X_beta on the odd integers: P(X = 2k+1) = beta^{2k+1} / (Z (2k+1)),
// Z = arctanh(beta).
class XBetaLaw {
 public:
  explicit XBetaLaw(double beta);

  double beta() const { return beta_; }
  double z_beta() const { return z_; }
  // Zero for even or non-positive values.
  double pmf(long value) const;
  // Exact inverse-CDF draw: a precomputed table covers all but < 1e-17 of
  // the mass, the remainder is walked term by term.
  long sample(Rng& rng) const;

 private:
  double beta_;
  double z_;
  std::vector<double> cdf_;  // cdf_[k] = P(X <= 2k+1)
};

double x_beta_pmf(double beta, long value);
long x_beta_sample(double beta, Rng& rng);

// Size-biased X_beta: P(K = 2k+1) = (1 - beta^2) beta^{2k}.
double size_biased_cycle_pmf(double beta, long value);

// Limit law of the root degree of U_{g,n} for g/n -> theta:
// ((1 - b^2)/4) ((1+b)^d - (1-b)^d) / (2^d b), b = beta_theta.
// Zero for d <= 0. At theta = 0 the continuous limit d 2^{-(d+1)} is used.
double root_degree_limit_pmf(double theta, int d);
// Same law as the convolution Geom((1+b)/2) + Geom((1-b)/2) - 1, both
// geometrics supported on {1, 2, ...}; evaluated termwise.
double root_degree_convolution_pmf(double beta, int d);
// Root-degree law written in terms of beta (theta already resolved).
double root_degree_pmf_beta(double beta, int d);

// p_die = xi / (1 - xi) for the Geom(xi)-1 offspring law.
double extinction_prob(double xi);

// Offspring laws of the surviving/doomed decomposition of T_xi conditioned
// to survive. A doomed vertex has Geom(1-xi)-1 children, all doomed. A
// surviving vertex has B doomed children, then one surviving child, then A
// children each surviving independently with probability 1 - p_die, where
//   P(B = j) = (1 - xi) xi^j,   P(A = a) = xi (1 - xi)^a.
// This reproduces P(k children | survive) = P(k)(1 - p_die^k)/(1 - p_die).
// At xi = 1/2 it is Kesten's tree (size-biased spine, uniform spine child).
struct SurvivorOffspring {
  int doomed_before;
  int after;  // children after the surviving one
  std::vector<bool> after_survives;
};
SurvivorOffspring sample_survivor_offspring(double xi, Rng& rng);
int sample_doomed_offspring(double xi, Rng& rng);
// Geom(xi) - 1 children: P(k) = (1 - xi)^k xi.
int sample_gw_offspring(double xi, Rng& rng);

// Height-r truncation of T_xi. Requires xi in (0, 1/2].
PlaneTree gw_ball_sample(double xi, int r, Rng& rng);
// B_r(T_xi^infty): T_xi conditioned to survive (Kesten's tree at xi = 1/2).
PlaneTree gw_inf_ball_sample(double xi, int r, Rng& rng);
// Whether an unconditioned T_xi reaches height `h`.
bool gw_reaches_height(double xi, int h, Rng& rng);

// P(B_r(T_xi^infty) = t) for t of height exactly r >= 1 with k edges and d
// vertices at height r:
//   (xi (1-xi))^{k+1-d} ((1-xi)^d - xi^d) / (1 - 2 xi),
// and (1/4)^{k+1-d} d (1/2)^{d-1} at xi = 1/2.
// Throws std::invalid_argument for a height-0 tree.
double ball_probability(double xi, const PlaneTree& t);
double ball_probability_kd(double xi, int k, int d);

// Generation sizes Z_0..Z_r of T_xi^infty, drawn exactly by summing i.i.d.
// offspring counts through negative-binomial and binomial laws.
std::vector<std::int64_t> gw_inf_generation_sizes(double xi, int r, Rng& rng);

// Mean degree over V_r, the vertices at distance < r from the root, in a
// tree with the given generation sizes (needs sizes for 0..r).
double ball_mean_degree(const std::vector<std::int64_t>& generation_sizes, int r);

}  // namespace unimap
