#include "unimap/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unimap {

namespace {

// (1 - b^2) * sum_k b^{2k} / (2k+1); accurate where atanh(b)/b cancels badly.
long double f_series(long double b) {
  long double sum = 0.0L, pw = 1.0L;
  for (int k = 0; k < 60; ++k) {
    sum += pw / (2 * k + 1);
    pw *= b * b;
  }
  return (1.0L - b * b) * sum;
}

long double f_long(long double b) {
  if (b <= 0.0L) return 1.0L;
  if (b >= 1.0L) return 0.0L;
  if (b < 1e-3L) return f_series(b);
  return (1.0L / b - b) * std::atanh(b);
}

long double mean_long(long double b) {
  if (b <= 0.0L) return 1.0L;
  return 1.0L / f_long(b);
}

}  // namespace

double f_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::domain_error("f_beta: beta must lie in [0, 1]");
  return static_cast<double>(f_long(beta));
}

double solve_beta_theta(double theta) {
  if (!(theta >= 0.0 && theta < 0.5)) throw std::domain_error("solve_beta_theta: theta must lie in [0, 1/2)");
  if (theta == 0.0) return 0.0;
  const long double target = 1.0L - 2.0L * theta;
  long double lo = 0.0L, hi = 1.0L;
  // f is strictly decreasing; run until the bracket stops shrinking.
  for (int it = 0; it < 200; ++it) {
    long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f_long(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

XMoments x_moments(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw std::domain_error("x_moments: beta must lie in [0, 1)");
  // X_0 = 1 almost surely.
  if (beta == 0.0) return {0.0, 1.0, 0.0};
  const long double b = beta;
  const long double z = std::atanh(b);
  const long double one_minus = 1.0L - b * b;
  const long double mean = b / (z * one_minus);
  const long double second = b * (1.0L + b * b) / (z * one_minus * one_minus);
  return {static_cast<double>(z), static_cast<double>(mean), static_cast<double>(second - mean * mean)};
}

double solve_beta_n(int n, int s) {
  if (s < 1 || s > n + 1) throw std::domain_error("solve_beta_n: need 1 <= s <= n+1");
  if ((n + 1 - s) % 2 != 0) throw std::domain_error("solve_beta_n: s and n+1 must have equal parity");
  if (s == n + 1) return 0.0;
  const long double target = static_cast<long double>(n + 1) / s;
  long double lo = 0.0L, hi = 1.0L;
  for (int it = 0; it < 200; ++it) {
    long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mean_long(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

Regime resolve_regime(double theta) {
  Regime r;
  r.theta = theta;
  r.beta = solve_beta_theta(theta);
  r.xi = (1.0 - r.beta) / 2.0;
  if (r.beta > 0.0) {
    auto m = x_moments(r.beta);
    r.z_beta = m.z_beta;
    r.mean_x = m.mean;
    r.var_x = m.variance;
    r.a_theta = 2.0 / std::sqrt(2.0 * std::numbers::pi * m.variance);
  }
  return r;
}

double log_asymptotic_count(int n, int g) {
  if (g <= 0 || 2 * g > n) throw std::domain_error("log_asymptotic_count: need 0 < 2g <= n");
  const int s = n + 1 - 2 * g;
  const double beta = solve_beta_n(n, s);
  const Regime reg = resolve_regime(static_cast<double>(g) / n);
  const double z = std::atanh(beta);
  return std::log(reg.a_theta) + std::lgamma(2.0 * n + 1) - std::lgamma(n + 1.0) - std::lgamma(s + 1.0) -
         0.5 * std::log(static_cast<double>(s)) + s * std::log(z) - g * std::log(4.0) - (n + 1) * std::log(beta);
}

double count_ratio_limit(double theta, int k, int d) {
  if (!(theta >= 0.0 && theta < 0.5)) throw std::domain_error("count_ratio_limit: theta must lie in [0, 1/2)");
  const double beta = solve_beta_theta(theta);
  return std::pow((1.0 - beta * beta) / 4.0, k - d);
}

}  // namespace unimap
