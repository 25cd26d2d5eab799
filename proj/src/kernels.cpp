#include "unimap/kernels.hpp"

#include <omp.h>

#include <stdexcept>

#include "unimap/gw_dist.hpp"
#include "unimap/rng.hpp"
#include "unimap/unicellular_sampler.hpp"

namespace unimap {

namespace {

// Exceptions must not escape an OpenMP region: arguments are checked first.
void check_gw_args(double xi, int r, int min_r) {
  extinction_prob(xi);
  if (r < min_r) throw std::invalid_argument("radius out of range");
}

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Runs body(i, local) for i in [0, samples) and sums the thread-local tables.
template <class Table, class Body>
Table tally_parallel(std::uint64_t samples, int workers, Body body) {
  Table total;
#pragma omp parallel num_threads(thread_count(workers))
  {
    Table local;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(samples); ++i) body(static_cast<std::uint64_t>(i), local);
#pragma omp critical(unimap_tally_merge)
    total.merge(local);
  }
  return total;
}

template <class Table, class Body>
Table tally_serial(std::uint64_t samples, Body body) {
  Table total;
  for (std::uint64_t i = 0; i < samples; ++i) body(i, total);
  return total;
}

auto root_degree_body(const UnicellularSampler& sampler, std::uint64_t seed) {
  return [&sampler, seed](std::uint64_t i, DistTable<int>& out) {
    Rng rng = make_stream(seed, i);
    out.add(root_degree(sampler.sample(rng)));
  };
}

auto ball_body(const UnicellularSampler& sampler, int r, std::uint64_t seed) {
  return [&sampler, r, seed](std::uint64_t i, BallTally& out) {
    Rng rng = make_stream(seed, i);
    const auto view = ball_as_tree(sampler.sample(rng), r);
    ++out.samples;
    out.ball_vertices += static_cast<std::uint64_t>(view.vertex_count);
    out.merged_vertices += static_cast<std::uint64_t>(view.merged_vertices);
    if (!view.is_tree) {
      ++out.non_tree;
      return;
    }
    out.shapes.add(view.unordered_code);
    if (view.plane_recovered) {
      ++out.plane_recovered;
      out.planes.add(view.plane->code());
    }
  };
}

auto gw_body(double xi, int r, std::uint64_t seed) {
  return [xi, r, seed](std::uint64_t i, DistTable<std::string>& out) {
    Rng rng = make_stream(seed, i);
    out.add(gw_inf_ball_sample(xi, r, rng).code());
  };
}

}  // namespace

void BallTally::merge(const BallTally& other) {
  samples += other.samples;
  non_tree += other.non_tree;
  plane_recovered += other.plane_recovered;
  shapes.merge(other.shapes);
  planes.merge(other.planes);
  ball_vertices += other.ball_vertices;
  merged_vertices += other.merged_vertices;
}

GluingCensus census_serial(int n) { return gluing_census(n); }

GluingCensus census_parallel(int n, int workers) {
  if (n < 1 || n > kOracleMaxEdges) return gluing_census(n);  // same errors
  GluingCensus total;
  total.n = n;
#pragma omp parallel num_threads(thread_count(workers))
  {
    GluingCensus local;
    local.n = n;
#pragma omp for schedule(dynamic, 1)
    for (int branch = 1; branch < 2 * n; ++branch)
      for_each_unicellular_branch(n, branch, [&](const RotationMap&, int genus) { ++local.counts[genus]; });
#pragma omp critical(unimap_census_merge)
    total.merge(local);
  }
  return total;
}

DistTable<int> root_degree_tally_serial(int n, int g, std::uint64_t samples, std::uint64_t seed) {
  const UnicellularSampler sampler(n, g);
  return tally_serial<DistTable<int>>(samples, root_degree_body(sampler, seed));
}

DistTable<int> root_degree_tally_parallel(int n, int g, std::uint64_t samples, std::uint64_t seed, int workers) {
  const UnicellularSampler sampler(n, g);
  return tally_parallel<DistTable<int>>(samples, workers, root_degree_body(sampler, seed));
}

BallTally ball_tally_serial(int n, int g, int r, std::uint64_t samples, std::uint64_t seed) {
  const UnicellularSampler sampler(n, g);
  return tally_serial<BallTally>(samples, ball_body(sampler, r, seed));
}

BallTally ball_tally_parallel(int n, int g, int r, std::uint64_t samples, std::uint64_t seed, int workers) {
  const UnicellularSampler sampler(n, g);
  return tally_parallel<BallTally>(samples, workers, ball_body(sampler, r, seed));
}

DistTable<std::string> gw_ball_tally_serial(double xi, int r, std::uint64_t samples, std::uint64_t seed) {
  check_gw_args(xi, r, 0);
  return tally_serial<DistTable<std::string>>(samples, gw_body(xi, r, seed));
}

DistTable<std::string> gw_ball_tally_parallel(double xi, int r, std::uint64_t samples, std::uint64_t seed,
                                              int workers) {
  check_gw_args(xi, r, 0);
  return tally_parallel<DistTable<std::string>>(samples, workers, gw_body(xi, r, seed));
}

std::vector<double> degree_profile_serial(double xi, int r, std::uint64_t samples, std::uint64_t seed) {
  check_gw_args(xi, r, 1);
  std::vector<double> out(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng = make_stream(seed, i);
    out[i] = ball_mean_degree(gw_inf_generation_sizes(xi, r, rng), r);
  }
  return out;
}

std::vector<double> degree_profile_parallel(double xi, int r, std::uint64_t samples, std::uint64_t seed,
                                            int workers) {
  check_gw_args(xi, r, 1);
  std::vector<double> out(samples);
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(workers))
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(samples); ++i) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] = ball_mean_degree(gw_inf_generation_sizes(xi, r, rng), r);
  }
  return out;
}

}  // namespace unimap
