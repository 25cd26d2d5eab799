#include <doctest.h>

#include <cmath>
#include <map>

#include "unimap/asymptotics.hpp"
#include "unimap/gw_dist.hpp"
#include "unimap/stats.hpp"

using namespace unimap;

namespace {

// P(B_r(T_xi^inf) = t): offspring probabilities of the depth < r vertices,
// times P(survive | d vertices at depth r) / P(survive).
double ball_probability_by_conditioning(double xi, const PlaneTree& t) {
  const int r = t.height();
  double p = 1.0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.depth(v) >= r) continue;
    const auto c = static_cast<int>(t.children(v).size());
    p *= std::pow(1 - xi, c) * xi;
  }
  const int d = t.count_at_depth(r);
  const double q = xi / (1 - xi);
  const double lift = q == 1.0 ? d : (1 - std::pow(q, d)) / (1 - q);
  return p * lift;
}

}  // namespace

TEST_CASE("X_beta law") {
  XBetaLaw law(0.7);
  double mass = 0.0;
  for (long k = 1; k < 5000; ++k) mass += law.pmf(k);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(law.pmf(4) == 0.0);
  CHECK(law.pmf(-1) == 0.0);
  CHECK_THROWS_AS(XBetaLaw(1.0), std::domain_error);

  Rng rng(5);
  std::map<long, std::uint64_t> counts;
  const std::uint64_t draws = 100000;
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[law.sample(rng)];
  std::map<long, double> theory;
  for (long k = 1; k < 200; k += 2) theory[k] = law.pmf(k);
  CHECK(chi_square(counts, theory, draws).p_value > 0.001);
}

TEST_CASE("size-biased cycle law") {
  for (double b : {0.0, 0.4, 0.9}) {
    double mass = 0.0;
    for (long k = 1; k < 4000; ++k) mass += size_biased_cycle_pmf(b, k);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  }
  const double b = 0.4;
  const double mean = x_moments(b).mean;
  for (long k = 1; k < 12; k += 2) CHECK(size_biased_cycle_pmf(b, k) == doctest::Approx(k * x_beta_pmf(b, k) / mean));
}

TEST_CASE("root degree limit law") {
  for (int d = 1; d <= 10; ++d) CHECK(root_degree_limit_pmf(0.0, d) == doctest::Approx(d / std::pow(2.0, d + 1)));
  CHECK(root_degree_limit_pmf(0.2, 0) == 0.0);
  for (double theta : {0.0, 0.05, 0.25, 0.45}) {
    const double b = solve_beta_theta(theta);
    double mass = 0.0;
    for (int d = 1; d < 20000; ++d) mass += root_degree_pmf_beta(b, d);
    for (int d = 1; d < 60; ++d)
      CHECK(root_degree_limit_pmf(theta, d) == doctest::Approx(root_degree_convolution_pmf(b, d)).epsilon(1e-12));
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  }
  // Near-zero beta stays continuous.
  CHECK(root_degree_pmf_beta(1e-12, 3) == doctest::Approx(3.0 / 16));
}

TEST_CASE("extinction probability") {
  CHECK(extinction_prob(0.5) == 1.0);
  CHECK(extinction_prob(0.25) == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(extinction_prob(0.6), std::domain_error);
  CHECK_THROWS_AS(extinction_prob(0.0), std::domain_error);
}

TEST_CASE("ball probability matches conditioning on survival") {
  for (double xi : {0.1, 0.3, 0.5}) {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& t : all_plane_trees(n)) {
        CAPTURE(xi);
        CAPTURE(t.code());
        CHECK(ball_probability(xi, t) == doctest::Approx(ball_probability_by_conditioning(xi, t)).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(ball_probability(0.3, PlaneTree()), std::invalid_argument);
  CHECK_THROWS_AS(ball_probability_kd(0.3, 2, 3), std::invalid_argument);
}

TEST_CASE("height-1 stars carry all the mass") {
  for (double xi : {0.1, 0.3, 0.5}) {
    double mass = 0.0;
    for (int k = 1; k < 3000; ++k) mass += ball_probability_kd(xi, k, k);
    CHECK(std::abs(mass - 1.0) < 1e-12);
  }
}

TEST_CASE("sampled T_inf balls follow the ball law") {
  Rng rng(17);
  for (double xi : {0.3, 0.5}) {
    for (int r : {1, 2}) {
      std::map<std::string, std::uint64_t> counts;
      const std::uint64_t draws = 40000;
      for (std::uint64_t i = 0; i < draws; ++i) ++counts[plane_code(gw_inf_ball_sample(xi, r, rng))];
      std::map<std::string, double> theory;
      for (int n = 1; n <= 9; ++n)
        for (const auto& t : all_plane_trees(n))
          if (t.height() == r) theory[plane_code(t)] = ball_probability(xi, t);
      CAPTURE(xi);
      CAPTURE(r);
      CHECK(chi_square(counts, theory, draws).p_value > 0.001);
    }
  }
}

TEST_CASE("unconditioned GW ball and survival") {
  Rng rng(23);
  const double xi = 0.3;
  const int draws = 40000;
  int reach = 0, single = 0;
  for (int i = 0; i < draws; ++i) {
    reach += gw_reaches_height(xi, 40, rng);
    single += gw_ball_sample(xi, 1, rng).vertex_count() == 1;
  }
  const double p_surv = 1 - extinction_prob(xi);
  CHECK(std::abs(z_score(reach, draws, p_surv)) < 4);
  CHECK(std::abs(z_score(single, draws, xi)) < 4);
}

TEST_CASE("generation sizes agree with the explicit tree") {
  Rng rng(29);
  const double xi = 0.3;
  const int draws = 20000, r = 3;
  std::vector<double> sum_fast(r + 1, 0.0), sum_tree(r + 1, 0.0), sq_tree(r + 1, 0.0);
  for (int i = 0; i < draws; ++i) {
    auto sizes = gw_inf_generation_sizes(xi, r, rng);
    REQUIRE(sizes.size() == static_cast<std::size_t>(r + 1));
    CHECK(sizes[0] == 1);
    auto t = gw_inf_ball_sample(xi, r, rng);
    for (int j = 0; j <= r; ++j) {
      sum_fast[j] += static_cast<double>(sizes[j]);
      const double c = t.count_at_depth(j);
      sum_tree[j] += c;
      sq_tree[j] += c * c;
    }
  }
  for (int j = 1; j <= r; ++j) {
    const double m = sum_tree[j] / draws;
    const double se = std::sqrt((sq_tree[j] / draws - m * m) / draws);
    CHECK(std::abs(sum_fast[j] / draws - m) < 6 * se);
  }
}

TEST_CASE("ball mean degree") {
  // Path of length 2 seen to radius 2: V_2 = {root, child}, degrees 1 and 2.
  CHECK(ball_mean_degree({1, 1, 1}, 2) == doctest::Approx(1.5));
  // Star with 3 leaves at radius 1: only the root, degree 3.
  CHECK(ball_mean_degree({1, 3}, 1) == doctest::Approx(3.0));
  CHECK_THROWS_AS(ball_mean_degree({1}, 1), std::invalid_argument);
}
