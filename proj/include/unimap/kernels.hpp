#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unimap/dist_table.hpp"
#include "unimap/gluing_oracle.hpp"

namespace unimap {

// Data-parallel kernels. Sample i always draws from make_stream(seed, i),
// so every parallel kernel returns exactly what its serial twin returns,
// whatever the worker count. workers <= 0 leaves the OpenMP default.

GluingCensus census_serial(int n);
GluingCensus census_parallel(int n, int workers = 0);

DistTable<int> root_degree_tally_serial(int n, int g, std::uint64_t samples, std::uint64_t seed);
DistTable<int> root_degree_tally_parallel(int n, int g, std::uint64_t samples, std::uint64_t seed, int workers = 0);

// Radius-r balls of sampled U_{g,n}.
struct BallTally {
  std::uint64_t samples = 0;
  std::uint64_t non_tree = 0;
  std::uint64_t plane_recovered = 0;
  // Tree balls by unordered shape (sorted parenthesis code).
  DistTable<std::string> shapes;
  // Plane-recovered balls by plane code.
  DistTable<std::string> planes;
  // Vertices of all balls, and those coming from cycles of length >= 3.
  std::uint64_t ball_vertices = 0;
  std::uint64_t merged_vertices = 0;

  void merge(const BallTally& other);
  friend bool operator==(const BallTally&, const BallTally&) = default;
};

BallTally ball_tally_serial(int n, int g, int r, std::uint64_t samples, std::uint64_t seed);
BallTally ball_tally_parallel(int n, int g, int r, std::uint64_t samples, std::uint64_t seed, int workers = 0);

// B_r(T_xi^inf) by plane code.
DistTable<std::string> gw_ball_tally_serial(double xi, int r, std::uint64_t samples, std::uint64_t seed);
DistTable<std::string> gw_ball_tally_parallel(double xi, int r, std::uint64_t samples, std::uint64_t seed,
                                              int workers = 0);

// Per-sample mean degree over V_r(T_xi^inf), in sample order.
std::vector<double> degree_profile_serial(double xi, int r, std::uint64_t samples, std::uint64_t seed);
std::vector<double> degree_profile_parallel(double xi, int r, std::uint64_t samples, std::uint64_t seed,
                                            int workers = 0);

}  // namespace unimap
