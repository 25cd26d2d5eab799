#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "unimap/dist_table.hpp"
#include "unimap/plane_tree.hpp"
#include "unimap/rotation_map.hpp"

namespace unimap {

// Exhaustive enumeration is refused above this many edges ((2n-1)!! maps).
inline constexpr int kOracleMaxEdges = 8;

// Visits every rooted unicellular map with n edges exactly once, as a gluing
// of the sides of a rooted 2n-gon, together with its genus. Throws
// std::invalid_argument when n > kOracleMaxEdges or n < 1.
using MapVisitor = std::function<void(const RotationMap&, int genus)>;
void for_each_unicellular(int n, const MapVisitor& visit);

// The sub-stream in which side 0 is glued to side `partner_of_root`
// (any side in [1, 2n-1]); the 2n-1 branches partition the stream.
void for_each_unicellular_branch(int n, int partner_of_root, const MapVisitor& visit);

std::vector<RotationMap> enumerate_unicellular(int n);

struct GluingCensus {
  int n = 0;
  std::map<int, std::uint64_t> counts;  // genus -> number of maps

  std::uint64_t total() const;
  void merge(const GluingCensus& other);
  friend bool operator==(const GluingCensus&, const GluingCensus&) = default;
};

GluingCensus gluing_census(int n);
// {"n": n, "counts": {"0": c0, "1": c1, ...}}
nlohmann::json census_to_json(const GluingCensus& c);

// Exact law of the root degree over uniform U_{g,n}.
// Throws std::domain_error("no maps") when U_{g,n} is empty.
DistTable<int> exact_root_degree_dist(int n, int g);

// Exact law of B_r over uniform U_{g,n}: tree balls keyed by their plane
// code, every other ball under kNonTreeBall.
inline const std::string kNonTreeBall = "#non-tree";
DistTable<std::string> exact_ball_dist(int n, int g, int r);

struct SurgeryCheck {
  std::uint64_t lhs = 0;  // #{m in U_{g,n} : B_r(m) = t}
  std::uint64_t rhs = 0;  // #{m in U_{g,n-k+d} with root degree d}
  // Those of the rhs maps whose root has d distinct neighbours, no loop and
  // no multiple edge: the image of the contraction.
  std::uint64_t rhs_star = 0;
  bool equal() const { return lhs == rhs; }
  bool star_equal() const { return lhs == rhs_star; }
};

// Both sides of the surgery identity for a plane tree t of height r >= 1
// with k edges and d vertices at height r, each counted by exhaustive scan.
// Requires n - k + d >= 1 and n <= kOracleMaxEdges.
SurgeryCheck verify_surgery(int n, int g, const PlaneTree& t);

}  // namespace unimap
