#include <doctest.h>

#include "unimap/experiments.hpp"
#include "unimap/plane_tree.hpp"
#include "unimap/stats.hpp"

using namespace unimap;

TEST_CASE("tv distance") {
  std::map<std::string, double> p{{"a", 0.5}, {"b", 0.5}};
  CHECK(tv_distance(p, p) == 0.0);
  CHECK(tv_distance(p, std::map<std::string, double>{{"c", 1.0}}) == doctest::Approx(1.0));
  CHECK(tv_distance(p, std::map<std::string, double>{{"a", 1.0}}) == doctest::Approx(0.5));
  // Unlisted mass goes to one extra outcome.
  CHECK(tv_distance(std::map<int, double>{{1, 0.5}}, std::map<int, double>{{1, 0.5}}) == 0.0);
  CHECK_THROWS_AS(tv_distance(std::map<int, double>{{1, -0.1}}, std::map<int, double>{}), std::invalid_argument);
}

TEST_CASE("chi-square") {
  CHECK(chi_square_survival(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(chi_square_survival(0.0, 3) == 1.0);
  std::map<int, std::uint64_t> obs{{0, 50}, {1, 50}};
  std::map<int, double> th{{0, 0.5}, {1, 0.5}};
  auto res = chi_square(obs, th, 100);
  CHECK(res.statistic == 0.0);
  CHECK(res.p_value == doctest::Approx(1.0));
  // Observation outside the support with no room left in the theory.
  std::map<int, std::uint64_t> stray{{0, 50}, {1, 49}, {2, 1}};
  CHECK(chi_square(stray, th, 100).p_value == 0.0);
  CHECK_THROWS_AS(chi_square(obs, th, 0), std::invalid_argument);
}

TEST_CASE("z score") {
  CHECK(z_score(50, 100, 0.5) == 0.0);
  CHECK(z_score(60, 100, 0.5) == doctest::Approx(2.0));
  CHECK(z_score(0, 100, 0.0) == 0.0);
}

TEST_CASE("config validation") {
  ExperimentConfig c;
  c.n = 10;
  c.g = 6;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.g = 2;
  c.samples = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.samples = 1;
  CHECK_NOTHROW(c.validate());
  CHECK(c.theta() == doctest::Approx(0.2));
  c.limit_theta = 0.0;
  CHECK(c.theta() == 0.0);
  c.r = 0;
  CHECK_THROWS_AS(run_local_limit(c), ConfigError);
}

TEST_CASE("local limit at small size is the exact law") {
  ExperimentConfig c;
  c.n = 4;
  c.g = 0;
  c.r = 2;
  auto rep = run_local_limit(c);
  CHECK(rep.exact);
  CHECK(rep.samples == 14);
  std::map<std::string, int> trees;
  for (const auto& t : all_plane_trees(4)) ++trees[t.truncate(2).code()];
  REQUIRE(rep.outcomes.size() == trees.size());
  for (const auto& o : rep.outcomes) CHECK(o.count == static_cast<std::uint64_t>(trees[o.key]));
  CHECK(rep.extra("non_tree_fraction") == 0.0);
}

TEST_CASE("local limit at theta = 0") {
  ExperimentConfig c;
  c.n = 400;
  c.g = 1;
  c.r = 1;
  c.samples = 4000;
  c.seed = 77;
  c.limit_theta = 0.0;
  auto rep = run_local_limit(c);
  CHECK_FALSE(rep.exact);
  CHECK(rep.regime.xi == 0.5);
  CHECK(rep.tested >= 5);
  CHECK(rep.pass());
  double listed = 0.0;
  for (const auto& o : rep.outcomes) listed += o.frequency;
  CHECK(listed + rep.extra("non_tree_fraction") == doctest::Approx(1.0));
}

TEST_CASE("root degree against the exact law") {
  ExperimentConfig c;
  c.n = 4;
  c.g = 1;
  c.samples = 50000;
  c.reference = Reference::exact;
  auto rep = run_root_degree(c);
  CHECK(rep.tv < 0.01);
  CHECK(rep.pass());
  c.n = 9;
  CHECK_THROWS_AS(run_root_degree(c), ConfigError);
}

TEST_CASE("degree profile") {
  ExperimentConfig c;
  c.n = 2000;
  c.g = 500;
  c.r = 3;
  c.samples = 200;
  auto p = degree_profile(c);
  CHECK(p.global_mean_degree == doctest::Approx(4000.0 / 1001));
  CHECK(p.global_limit == doctest::Approx(4.0));
  CHECK(p.local_limit == doctest::Approx(2.0 / (1.0 - solve_beta_theta(0.25))));
  CHECK(p.rows.size() == 3);
  c.g = 0;
  c.n = 10;
  auto flat = degree_profile(c);
  CHECK(flat.global_limit == 2.0);
  CHECK(flat.local_limit == 2.0);
}

TEST_CASE("reports are deterministic and carry the header") {
  ExperimentConfig c;
  c.n = 300;
  c.g = 60;
  c.r = 2;
  c.samples = 1500;
  c.seed = 5;
  c.workers = 1;
  const auto a = run_local_limit(c);
  c.workers = 3;
  const auto b = run_local_limit(c);
  c.workers = 1;
  CHECK(render(a) == render(run_local_limit(c)));
  CHECK(report_json(a)["outcomes"] == report_json(b)["outcomes"]);

  auto j = report_json(a);
  for (const char* key : {"beta", "xi", "z_beta", "build_id", "seed"}) CHECK(j["header"].contains(key));
  CHECK(j["header"]["build_id"] == build_id());
  c.format = Format::csv;
  const std::string csv = render(run_local_limit(c));
  CHECK(csv.find("# beta: ") != std::string::npos);
  CHECK(csv.find("# xi: ") != std::string::npos);
  CHECK(csv.find("\nkey,count,frequency,probability,std_error,z,tested\n") != std::string::npos);
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("gw ball comparison") {
  ExperimentConfig c;
  c.r = 2;
  c.samples = 20000;
  c.seed = 8;
  auto rep = run_gw_ball(c, 0.3);
  CHECK(rep.tested > 3);
  CHECK(rep.pass());
  CHECK(rep.regime.xi == 0.3);
  CHECK_THROWS_AS(run_gw_ball(c, 0.7), ConfigError);
}
