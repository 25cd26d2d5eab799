#pragma once

namespace unimap {

// Resolved parameters of the high-genus regime g/n -> theta.
struct Regime {
  double theta = 0.0;
  double beta = 0.0;
  double xi = 0.5;      // (1 - beta) / 2
  double z_beta = 0.0;  // arctanh(beta)
  double mean_x = 1.0;  // E[X_beta]
  double var_x = 0.0;   // Var(X_beta)
  double a_theta = 0.0; // 2 / sqrt(2 pi Var(X_beta)); 0 when theta = 0
};

// (1/2)(1/beta - beta) log((1+beta)/(1-beta)), extended by f(0) = 1 and
// f(1) = 0. Strictly decreasing. Throws std::domain_error outside [0, 1].
double f_beta(double beta);

// Unique beta in [0, 1) with f(beta) = 1 - 2 theta, by bisection.
// theta = 0 returns exactly 0. Throws std::domain_error unless 0 <= theta < 1/2.
double solve_beta_theta(double theta);

struct XMoments {
  double z_beta;
  double mean;
  double variance;
};

// Z = arctanh(beta), E[X] = beta / (Z (1 - beta^2)),
// E[X^2] = beta (1 + beta^2) / (Z (1 - beta^2)^2); mean 1, variance 0 at beta = 0.
XMoments x_moments(double beta);

// beta with E[X_beta] = (n+1)/s exactly. Returns 0 when s = n+1.
// Throws std::domain_error when s > n+1, s < 1 or s and n+1 differ in parity.
double solve_beta_n(int n, int s);

Regime resolve_regime(double theta);

// log of A_theta (2n)! / (n! s! sqrt(s)) Z^s / (4^g beta^{n+1}) with
// beta = solve_beta_n(n, s), s = n + 1 - 2g and A_theta taken at theta = g/n.
// Requires 0 < 2g <= n.
double log_asymptotic_count(int n, int g);

// ((1 - beta_theta^2) / 4)^(k - d), the limit of #U_{g,n-k+d} / #U_{g,n}.
double count_ratio_limit(double theta, int k, int d);

}  // namespace unimap
