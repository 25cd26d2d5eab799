#include "unimap/rooted_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace unimap {

int RootedGraph::degree(int x) const {
  int d = 0;
  for (auto [a, b] : edges) d += (a == x) + (b == x);
  return d;
}

std::vector<int> RootedGraph::degrees() const {
  std::vector<int> deg(v, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

namespace {

std::vector<std::vector<int>> adjacency(const RootedGraph& g) {
  std::vector<std::vector<int>> adj(g.v);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    if (a != b) adj[b].push_back(a);
  }
  return adj;
}

}  // namespace

std::vector<int> RootedGraph::distances() const {
  auto adj = adjacency(*this);
  std::vector<int> dist(v, -1);
  std::queue<int> q;
  dist[root_vertex] = 0;
  q.push(root_vertex);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

bool RootedGraph::is_connected() const {
  auto dist = distances();
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool RootedGraph::is_tree() const {
  return edge_count() == v - 1 && is_connected();
}

RootedGraph rooted_graph_of(const PlaneTree& t) {
  RootedGraph g;
  g.v = t.vertex_count();
  g.edges.reserve(t.edge_count());
  for (int c = 1; c < t.vertex_count(); ++c) g.edges.emplace_back(t.parent(c), c);
  g.root_vertex = 0;
  g.root_edge = t.edge_count() > 0 ? 0 : -1;
  return g;
}

RootedGraph ball(const RootedGraph& g, int r) {
  if (r < 0) throw std::invalid_argument("negative radius");
  auto adj = adjacency(g);
  std::vector<int> dist(g.v, -1), label(g.v, -1);
  std::vector<int> order;
  std::queue<int> q;
  dist[g.root_vertex] = 0;
  q.push(g.root_vertex);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    label[x] = static_cast<int>(order.size());
    order.push_back(x);
    if (dist[x] == r) continue;
    for (int y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  RootedGraph out;
  out.v = static_cast<int>(order.size());
  out.root_vertex = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edges[e];
    bool inner_a = dist[a] >= 0 && dist[a] <= r - 1;
    bool inner_b = dist[b] >= 0 && dist[b] <= r - 1;
    if (!inner_a && !inner_b) continue;
    if (e == g.root_edge) out.root_edge = out.edge_count();
    out.edges.emplace_back(label[a], label[b]);
  }
  return out;
}

namespace {

std::string sorted_code(const std::vector<std::vector<int>>& kids, int root) {
  // Post-order without recursion: balls and samples can be deep.
  std::vector<std::string> code(kids.size());
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [x, done] = stack.back();
    stack.pop_back();
    if (!done) {
      stack.emplace_back(x, true);
      for (int c : kids[x]) stack.emplace_back(c, false);
      continue;
    }
    std::vector<std::string> parts;
    parts.reserve(kids[x].size());
    for (int c : kids[x]) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) {
      s.push_back('(');
      s += p;
      s.push_back(')');
    }
    code[x] = std::move(s);
  }
  return code[root];
}

}  // namespace

std::string unordered_code(const RootedGraph& g) {
  if (!g.is_tree()) throw std::invalid_argument("not a tree");
  auto adj = adjacency(g);
  std::vector<std::vector<int>> kids(g.v);
  std::vector<char> seen(g.v, 0);
  std::queue<int> q;
  seen[g.root_vertex] = 1;
  q.push(g.root_vertex);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        kids[x].push_back(y);
        q.push(y);
      }
    }
  }
  return sorted_code(kids, g.root_vertex);
}

std::string unordered_code(const PlaneTree& t) {
  std::vector<std::vector<int>> kids(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) kids[v].assign(t.children(v).begin(), t.children(v).end());
  return sorted_code(kids, 0);
}

void to_json(nlohmann::json& j, const RootedGraph& g) {
  auto edges = nlohmann::json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  j = nlohmann::json{{"v", g.v}, {"edges", edges}, {"root_vertex", g.root_vertex}, {"root_edge", g.root_edge}};
}

void from_json(const nlohmann::json& j, RootedGraph& g) {
  g.v = j.at("v").get<int>();
  g.edges.clear();
  for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  g.root_vertex = j.at("root_vertex").get<int>();
  g.root_edge = j.at("root_edge").get<int>();
}

}  // namespace unimap
