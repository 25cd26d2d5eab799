#include "unimap/plane_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace unimap {

PlaneTree::PlaneTree() : children_(1), parent_{-1}, depth_{0} {}

PlaneTree::PlaneTree(const std::vector<std::vector<int>>& children) {
  const int nv = static_cast<int>(children.size());
  if (nv == 0) throw std::invalid_argument("plane tree needs a root vertex");
  std::vector<int> seen_parent(nv, -1);
  std::size_t edge_total = 0;
  for (int v = 0; v < nv; ++v) {
    for (int c : children[v]) {
      if (c <= 0 || c >= nv) throw std::invalid_argument("not a tree: bad child index");
      if (seen_parent[c] != -1) throw std::invalid_argument("not a tree: vertex with two parents");
      seen_parent[c] = v;
      ++edge_total;
    }
  }
  if (edge_total != static_cast<std::size_t>(nv - 1))
    throw std::invalid_argument("not a tree: wrong edge count");

  // Relabel to preorder with an explicit stack; a cycle among non-root
  // vertices would leave some vertex unvisited.
  std::vector<int> order;
  order.reserve(nv);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
    if (static_cast<int>(order.size()) > nv) break;
  }
  if (static_cast<int>(order.size()) != nv)
    throw std::invalid_argument("not a tree: disconnected");
  std::vector<int> label(nv);
  for (int i = 0; i < nv; ++i) label[order[i]] = i;
  children_.assign(nv, {});
  for (int v = 0; v < nv; ++v)
    for (int c : children[v]) children_[label[v]].push_back(label[c]);
  rebuild_from_preorder_children();
}

void PlaneTree::rebuild_from_preorder_children() {
  const int nv = vertex_count();
  parent_.assign(nv, -1);
  depth_.assign(nv, 0);
  height_ = 0;
  // Preorder guarantees parents precede children.
  for (int v = 0; v < nv; ++v) {
    for (int c : children_[v]) {
      parent_[c] = v;
      depth_[c] = depth_[v] + 1;
      height_ = std::max(height_, depth_[c]);
    }
  }
}

PlaneTree PlaneTree::from_code(std::string_view code) {
  PlaneTree t;
  t.children_.assign(1, {});
  std::vector<int> path{0};
  for (char ch : code) {
    if (ch == '(') {
      int v = static_cast<int>(t.children_.size());
      t.children_.emplace_back();
      t.children_[path.back()].push_back(v);
      path.push_back(v);
    } else if (ch == ')') {
      if (path.size() <= 1) throw std::invalid_argument("unbalanced tree code");
      path.pop_back();
    } else {
      throw std::invalid_argument("tree code may only contain '(' and ')'");
    }
  }
  if (path.size() != 1) throw std::invalid_argument("unbalanced tree code");
  t.rebuild_from_preorder_children();
  return t;
}

int PlaneTree::count_at_depth(int level) const {
  return static_cast<int>(std::count(depth_.begin(), depth_.end(), level));
}

PlaneTree PlaneTree::truncate(int r) const {
  if (r >= height_) return *this;
  std::string out;
  std::function<void(int)> walk = [&](int v) {
    if (depth_[v] >= r) return;
    for (int c : children_[v]) {
      out.push_back('(');
      walk(c);
      out.push_back(')');
    }
  };
  walk(0);
  return from_code(out);
}

std::string PlaneTree::code() const {
  std::string out;
  out.reserve(2 * static_cast<std::size_t>(edge_count()));
  // Iterative contour so deep trees do not blow the stack.
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children_[v].size()) {
      int c = children_[v][next++];
      out.push_back('(');
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) out.push_back(')');
    }
  }
  return out;
}

std::string plane_code(const PlaneTree& t) { return t.code(); }

mpz_class catalan(unsigned n) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  c /= (n + 1);
  return c;
}

PlaneTree sample_plane_tree(int n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("negative edge count");
  if (n == 0) return PlaneTree();
  const int len = 2 * n + 1;
  std::vector<signed char> steps(len, -1);
  std::fill(steps.begin(), steps.begin() + n, 1);
  std::shuffle(steps.begin(), steps.end(), rng);
  // Start right after the first minimum of the prefix sums; the rotated walk
  // stays >= 0 until its final step, so dropping that step gives a Dyck path.
  int sum = 0, best = 0, start = 0;
  for (int i = 0; i < len; ++i) {
    sum += steps[i];
    if (sum < best) {
      best = sum;
      start = i + 1;
    }
  }
  std::string code;
  code.reserve(2 * n);
  for (int i = 0; i < len - 1; ++i) code.push_back(steps[(start + i) % len] > 0 ? '(' : ')');
  return PlaneTree::from_code(code);
}

std::vector<PlaneTree> all_plane_trees(int n) {
  std::vector<PlaneTree> out;
  std::string buf;
  std::function<void(int, int)> rec = [&](int open, int close) {
    if (open == n && close == n) {
      out.push_back(PlaneTree::from_code(buf));
      return;
    }
    if (open < n) {
      buf.push_back('(');
      rec(open + 1, close);
      buf.pop_back();
    }
    if (close < open) {
      buf.push_back(')');
      rec(open, close + 1);
      buf.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

mpz_class plane_embedding_count(const PlaneTree& t) {
  mpz_class total = 1;
  std::vector<std::string> shape(t.vertex_count());
  for (int v = t.vertex_count() - 1; v >= 0; --v) {
    std::vector<std::string> kids;
    for (int c : t.children(v)) kids.push_back(shape[c]);
    std::sort(kids.begin(), kids.end());
    mpz_class ways;
    mpz_fac_ui(ways.get_mpz_t(), kids.size());
    std::map<std::string, unsigned long> mult;
    for (const auto& k : kids) ++mult[k];
    for (const auto& [k, m] : mult) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), m);
      ways /= f;
    }
    total *= ways;
    std::string s;
    for (const auto& k : kids) s += "(" + k + ")";
    shape[v] = std::move(s);
  }
  return total;
}

}  // namespace unimap
