#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "unimap/plane_tree.hpp"
#include "unimap/rooted_graph.hpp"

namespace unimap {

// Dart-level rooted map on 2n darts. Darts 2i and 2i+1 form edge i.
// sigma[d] is the next dart counterclockwise around the origin of d;
// vertices are the cycles of sigma and faces the cycles of sigma o alpha.
struct RotationMap {
  int n = 0;
  std::vector<int> alpha;
  std::vector<int> sigma;
  int root_dart = 0;

  int dart_count() const { return 2 * n; }

  // Throws std::invalid_argument on size mismatch, a non fixed-point-free
  // alpha, or a sigma that is not a permutation.
  void validate() const;

  // vertex_of()[d] = vertex (sigma-cycle) of dart d; the root dart's vertex is 0.
  std::vector<int> vertex_of() const;
  int vertex_count() const;
  // Darts around the origin of the root dart, starting at the root dart.
  int root_degree() const;

  // Underlying multigraph: vertex labels from vertex_of(), edge i joins the
  // origins of darts 2i and 2i+1, the root edge oriented out of the root.
  RootedGraph underlying_graph() const;
};

struct FacesGenus {
  int faces;
  int genus;
};

// Face count (cycles of sigma o alpha) and genus from v - n + f = 2 - 2g.
// Throws on inconsistent sizes or a non-integral / negative genus.
FacesGenus faces_and_genus(const RotationMap& m);

// Gluing of the sides of a rooted 2n-gon: partner[i] is the side glued to
// side i, and the polygon contour (i -> i+1 mod 2n) is the unique face.
// Edges are numbered by their smaller side so that side 0 becomes dart 0,
// the root dart.
RotationMap map_from_polygon_gluing(const std::vector<int>& partner);

// The contour map of a plane tree: dart i is the i-th step of the contour,
// rooted at the edge from the root to its first child.
RotationMap rotation_map_of(const PlaneTree& t);

// Ball of radius r with its map structure. When the ball is a tree, `code`
// is the plane code read off the rotation, rooted at the root dart;
// otherwise `code` is empty.
struct MapBall {
  bool is_tree = false;
  int height = 0;
  std::string code;
};
MapBall ball_of_rotation_map(const RotationMap& m, int r);

void to_json(nlohmann::json& j, const RotationMap& m);
void from_json(const nlohmann::json& j, RotationMap& m);

}  // namespace unimap
