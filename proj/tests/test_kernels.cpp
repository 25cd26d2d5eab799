#include <doctest.h>

#include "unimap/kernels.hpp"

using namespace unimap;

TEST_CASE("parallel census equals serial census") {
  for (int n = 1; n <= 6; ++n)
    for (int w : {1, 2, 3}) CHECK(census_parallel(n, w) == census_serial(n));
  CHECK_THROWS_AS(census_parallel(0), std::invalid_argument);
}

TEST_CASE("parallel tallies equal serial tallies") {
  for (int w : {1, 2, 4}) {
    CAPTURE(w);
    CHECK(root_degree_tally_parallel(50, 10, 3000, 99, w) == root_degree_tally_serial(50, 10, 3000, 99));
    CHECK(ball_tally_parallel(80, 20, 2, 2000, 7, w) == ball_tally_serial(80, 20, 2, 2000, 7));
    CHECK(gw_ball_tally_parallel(0.3, 2, 3000, 5, w) == gw_ball_tally_serial(0.3, 2, 3000, 5));
    CHECK(degree_profile_parallel(0.3, 5, 500, 3, w) == degree_profile_serial(0.3, 5, 500, 3));
  }
}

TEST_CASE("tallies") {
  auto b = ball_tally_serial(40, 5, 1, 1000, 11);
  CHECK(b.samples == 1000);
  CHECK(b.non_tree + b.shapes.total() == 1000);
  CHECK(b.planes.total() == b.plane_recovered);
  CHECK(b.merged_vertices <= b.ball_vertices);
  // Seeds give independent streams.
  CHECK_FALSE(root_degree_tally_serial(50, 10, 500, 1) == root_degree_tally_serial(50, 10, 500, 2));
  CHECK_THROWS_AS(gw_ball_tally_parallel(0.7, 2, 10, 1), std::domain_error);
  CHECK_THROWS_AS(degree_profile_parallel(0.3, 0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(ball_tally_parallel(4, 3, 1, 10, 1), std::invalid_argument);
}
