#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unimap/exact_enum.hpp"
#include "unimap/gw_dist.hpp"
#include "unimap/permutation.hpp"
#include "unimap/plane_tree.hpp"
#include "unimap/rng.hpp"
#include "unimap/rooted_graph.hpp"

namespace unimap {

// Plane tree with a permutation of its vertices whose cycles all have odd
// length, and a sign per cycle (in the order of Permutation::cycles()).
struct CDecoratedTree {
  PlaneTree tree;
  Permutation perm;
  std::vector<int> signs;

  int genus() const { return (tree.vertex_count() - perm.cycle_count()) / 2; }
};

// Underlying graph of a uniform element of U_{g,n}: the tree with the
// vertices of each cycle identified.
struct UnicellularSample {
  CDecoratedTree source;
  RootedGraph graph;
  // Per tree vertex: true when the vertex is a fixed point of the permutation.
  std::vector<bool> fixed_point_mask;
  // Graph vertex of each tree vertex.
  std::vector<int> vertex_class;
  // Cycle length behind each graph vertex.
  std::vector<int> class_size;
};

// Uniform permutation of {0..m-1} with exactly s cycles, all odd.
//
// Ordered cycle sizes are i.i.d. X_beta conditioned on summing to m; the
// weights prod beta^{k_i}/k_i are then turned into a uniform permutation by
// a uniform labelling and an independent uniform cyclic order per block.
// The conditioned sizes come from rejection (draw s-1 sizes, accept the
// forced last one with probability P(X = last)/P(X = 1)) or, for m <= 200,
// from exact sequential sampling over the odd-cycle count table.
class OddCyclePermutationSampler {
 public:
  enum class Method { rejection, exact_table };

  // beta_hint <= 0 selects beta from E[X_beta] = m/s.
  // Throws std::invalid_argument on parity mismatch or s > m.
  OddCyclePermutationSampler(int m, int s, double beta_hint = 0.0, Method method = Method::rejection);

  Permutation sample(Rng& rng) const;
  // Ordered block sizes only (exposed for tests of the conditioned sum).
  std::vector<int> sample_sizes(Rng& rng) const;

  int m() const { return m_; }
  int s() const { return s_; }
  double beta() const { return beta_; }
  Method method() const { return method_; }

 private:
  Permutation sample_exact(Rng& rng) const;

  int m_;
  int s_;
  double beta_;
  Method method_;
  std::optional<XBetaLaw> law_;
  std::optional<OddCycleTable> table_;
};

Permutation sample_odd_cycle_permutation(int m, int s, double beta_hint, Rng& rng);

class UnicellularSampler {
 public:
  // Throws std::invalid_argument when 2g > n or n < 0.
  UnicellularSampler(int n, int g);

  UnicellularSample sample(Rng& rng) const;
  int n() const { return n_; }
  int g() const { return g_; }

 private:
  int n_;
  int g_;
  OddCyclePermutationSampler perms_;
};

UnicellularSample sample_unicellular(int n, int g, Rng& rng);

// Quotient of a C-decorated tree: graph vertices are the cycles, numbered by
// their first tree vertex in preorder; edge i is the image of the tree edge
// into vertex i+1, the root edge the image of the tree's root edge.
UnicellularSample quotient(CDecoratedTree cdt);

// Edge endpoints at the root vertex; loops count twice.
int root_degree(const UnicellularSample& sample);

struct BallView {
  bool is_tree = false;
  // Every ball vertex is a fixed point, so the rotation around each of them
  // is the tree's and the plane structure is read off the tree.
  bool plane_recovered = false;
  std::optional<PlaneTree> plane;
  std::string unordered_code;  // empty unless is_tree
  int height = 0;
  int vertex_count = 0;
  // Ball vertices that come from cycles of length >= 3.
  int merged_vertices = 0;
};

BallView ball_as_tree(const UnicellularSample& sample, int r);

// One JSON record per sample: the rooted graph, plus the C-decorated tree
// (parenthesis code, permutation image, signs) when `with_cdt` is set.
nlohmann::json sample_to_json(const UnicellularSample& sample, bool with_cdt);

}  // namespace unimap
