#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "unimap/plane_tree.hpp"

namespace unimap {

// Connected multigraph with a distinguished vertex and oriented edge. Loops
// and parallel edges are allowed. When root_edge >= 0 the pair
// edges[root_edge] is stored with root_vertex first.
struct RootedGraph {
  int v = 1;
  std::vector<std::pair<int, int>> edges;
  int root_vertex = 0;
  int root_edge = -1;

  int edge_count() const { return static_cast<int>(edges.size()); }

  // Edge endpoints at vertex x; loops count twice.
  int degree(int x) const;
  std::vector<int> degrees() const;
  // Breadth-first distances from root_vertex (-1 when unreachable).
  std::vector<int> distances() const;
  bool is_connected() const;
  bool is_tree() const;

  friend bool operator==(const RootedGraph&, const RootedGraph&) = default;
};

// The plane tree as a graph: edge i joins the parent of vertex i+1 to i+1,
// rooted at the edge from the root to its first child.
RootedGraph rooted_graph_of(const PlaneTree& t);

// Vertices at distance <= r from the root, and the edges with at least one
// endpoint at distance <= r-1. An edge joining two vertices at distance
// exactly r is dropped, so the ball of a tree is its height-r truncation.
// Vertices are relabelled in BFS order (root = 0); edge order is preserved.
RootedGraph ball(const RootedGraph& g, int r);

// AHU-style canonical code of a tree rooted at root_vertex: concatenation of
// "(" + code(child) + ")" over children sorted by code. Invariant exactly
// under rooted-tree isomorphism. Throws std::invalid_argument("not a tree").
std::string unordered_code(const RootedGraph& g);

// Unordered code of a plane tree (forgets the child order).
std::string unordered_code(const PlaneTree& t);

void to_json(nlohmann::json& j, const RootedGraph& g);
void from_json(const nlohmann::json& j, RootedGraph& g);

}  // namespace unimap
