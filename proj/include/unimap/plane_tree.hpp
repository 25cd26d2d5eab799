#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "unimap/rng.hpp"

namespace unimap {

// Rooted ordered tree. Vertices are numbered in depth-first preorder, so the
// root is vertex 0 and, when it exists, vertex 1 is the root's first child.
// Viewed as a map, the tree is rooted at the edge from 0 to 1.
class PlaneTree {
 public:
  // Single vertex, no edges.
  PlaneTree();

  // Children lists per vertex, vertex 0 is the root. Any labelling is
  // accepted; the stored tree is relabelled to preorder.
  // Throws std::invalid_argument when the lists do not describe a tree.
  explicit PlaneTree(const std::vector<std::vector<int>>& children);

  // Parses a balanced-parenthesis contour code, e.g. "(())()" is the tree
  // whose root has a child with one child, followed by a leaf child.
  static PlaneTree from_code(std::string_view code);

  int vertex_count() const { return static_cast<int>(children_.size()); }
  int edge_count() const { return vertex_count() - 1; }

  std::span<const int> children(int v) const { return children_[v]; }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  int height() const { return height_; }

  // Number of vertices at depth exactly `level`.
  int count_at_depth(int level) const;

  // Height-r truncation: every vertex at depth <= r.
  PlaneTree truncate(int r) const;

  std::string code() const;

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
    return a.children_ == b.children_;
  }

 private:
  void rebuild_from_preorder_children();

  std::vector<std::vector<int>> children_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  int height_ = 0;
};

// Balanced-parenthesis encoding of the depth-first contour; bijective on
// plane trees. The single-vertex tree encodes to "".
std::string plane_code(const PlaneTree& t);

// Cat(n) = (2n)! / (n! (n+1)!), the number of plane trees with n edges.
mpz_class catalan(unsigned n);

// Exactly uniform plane tree with n edges (cycle lemma on a shuffled
// sequence of n up-steps and n+1 down-steps).
PlaneTree sample_plane_tree(int n, Rng& rng);

// All plane trees with n edges in lexicographic code order. Intended for
// small n (Cat(n) trees).
std::vector<PlaneTree> all_plane_trees(int n);

// Number of plane trees sharing the unordered shape of `t`, i.e. the number
// of distinct child orderings modulo isomorphic siblings.
mpz_class plane_embedding_count(const PlaneTree& t);

}  // namespace unimap
