#include "unimap/rotation_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace unimap {

namespace {

int count_cycles(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return cycles;
}

}  // namespace

void RotationMap::validate() const {
  const std::size_t m = static_cast<std::size_t>(dart_count());
  if (n < 0 || alpha.size() != m || sigma.size() != m)
    throw std::invalid_argument("rotation map: alpha/sigma sizes do not match 2n");
  if (n > 0 && (root_dart < 0 || root_dart >= dart_count()))
    throw std::invalid_argument("rotation map: root dart out of range");
  std::vector<char> hit(m, 0);
  for (std::size_t d = 0; d < m; ++d) {
    int a = alpha[d];
    if (a < 0 || static_cast<std::size_t>(a) >= m || static_cast<std::size_t>(a) == d ||
        alpha[a] != static_cast<int>(d))
      throw std::invalid_argument("rotation map: alpha is not a fixed-point-free involution");
    int s = sigma[d];
    if (s < 0 || static_cast<std::size_t>(s) >= m || hit[s])
      throw std::invalid_argument("rotation map: sigma is not a permutation");
    hit[s] = 1;
  }
}

std::vector<int> RotationMap::vertex_of() const {
  const int m = dart_count();
  std::vector<int> vid(m, -1);
  int next = 0;
  auto label = [&](int start) {
    for (int d = start; vid[d] < 0; d = sigma[d]) vid[d] = next;
    ++next;
  };
  if (m > 0) label(root_dart);
  for (int d = 0; d < m; ++d)
    if (vid[d] < 0) label(d);
  return vid;
}

int RotationMap::vertex_count() const {
  return n == 0 ? 1 : count_cycles(sigma);
}

int RotationMap::root_degree() const {
  if (n == 0) return 0;
  int deg = 1;
  for (int d = sigma[root_dart]; d != root_dart; d = sigma[d]) ++deg;
  return deg;
}

RootedGraph RotationMap::underlying_graph() const {
  RootedGraph g;
  g.v = vertex_count();
  g.root_vertex = 0;
  if (n == 0) return g;
  auto vid = vertex_of();
  for (int e = 0; e < n; ++e) {
    int a = 2 * e, b = 2 * e + 1;
    if (e == root_dart / 2 && root_dart == b) std::swap(a, b);
    g.edges.emplace_back(vid[a], vid[b]);
  }
  g.root_edge = root_dart / 2;
  return g;
}

FacesGenus faces_and_genus(const RotationMap& m) {
  m.validate();
  if (m.n == 0) return {1, 0};
  std::vector<int> phi(m.dart_count());
  for (int d = 0; d < m.dart_count(); ++d) phi[d] = m.sigma[m.alpha[d]];
  const int f = count_cycles(phi);
  const int v = count_cycles(m.sigma);
  const int twice_genus = 2 - v + m.n - f;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::invalid_argument("rotation map: Euler characteristic gives a non-integral genus");
  return {f, twice_genus / 2};
}

RotationMap map_from_polygon_gluing(const std::vector<int>& partner) {
  const int m = static_cast<int>(partner.size());
  if (m % 2 != 0) throw std::invalid_argument("polygon gluing needs an even number of sides");
  std::vector<int> dart(m, -1);
  int edge = 0;
  for (int i = 0; i < m; ++i) {
    int j = partner[i];
    if (j < 0 || j >= m || j == i || partner[j] != i)
      throw std::invalid_argument("polygon gluing is not a perfect matching");
    if (i < j) {
      dart[i] = 2 * edge;
      dart[j] = 2 * edge + 1;
      ++edge;
    }
  }
  RotationMap out;
  out.n = m / 2;
  out.alpha.resize(m);
  out.sigma.resize(m);
  out.root_dart = 0;
  for (int i = 0; i < m; ++i) {
    out.alpha[dart[i]] = dart[partner[i]];
    // The side following the partner leaves the same corner as side i.
    out.sigma[dart[i]] = dart[(partner[i] + 1) % m];
  }
  return out;
}

RotationMap rotation_map_of(const PlaneTree& t) {
  const std::string code = t.code();
  std::vector<int> partner(code.size(), -1), open;
  for (int i = 0; i < static_cast<int>(code.size()); ++i) {
    if (code[i] == '(') {
      open.push_back(i);
    } else {
      partner[i] = open.back();
      partner[open.back()] = i;
      open.pop_back();
    }
  }
  return map_from_polygon_gluing(partner);
}

MapBall ball_of_rotation_map(const RotationMap& m, int r) {
  if (r < 0) throw std::invalid_argument("negative radius");
  MapBall out;
  if (m.n == 0 || r == 0) {
    out.is_tree = true;
    return out;
  }
  const auto vid = m.vertex_of();
  const auto g = m.underlying_graph();
  const auto dist = g.distances();

  auto in_ball = [&](int d) {
    int a = vid[d], b = vid[m.alpha[d]];
    return dist[a] <= r - 1 || dist[b] <= r - 1;
  };
  int ball_vertices = 0, ball_edges = 0;
  for (int x = 0; x < g.v; ++x) {
    if (dist[x] <= r) {
      ++ball_vertices;
      out.height = std::max(out.height, dist[x]);
    }
  }
  for (int e = 0; e < m.n; ++e) ball_edges += in_ball(2 * e) ? 1 : 0;
  out.is_tree = ball_edges == ball_vertices - 1;
  if (!out.is_tree) return out;

  // Children of a vertex entered through dart p are the ball darts met going
  // around from sigma(alpha(p)) back to alpha(p); at the root the walk is the
  // full rotation starting at the root dart.
  struct Frame {
    int stop;
    int current;
    bool fresh;
  };
  std::string code;
  std::vector<Frame> stack{{m.root_dart, m.root_dart, true}};
  while (!stack.empty()) {
    auto& f = stack.back();
    if (!f.fresh && f.current == f.stop) {
      stack.pop_back();
      if (!stack.empty()) code.push_back(')');
      continue;
    }
    f.fresh = false;
    const int d = f.current;
    f.current = m.sigma[d];
    if (!in_ball(d)) continue;
    code.push_back('(');
    const int back = m.alpha[d];
    stack.push_back({back, m.sigma[back], false});
  }
  out.code = std::move(code);
  return out;
}

void to_json(nlohmann::json& j, const RotationMap& m) {
  j = nlohmann::json{{"n", m.n}, {"alpha", m.alpha}, {"sigma", m.sigma}, {"root_dart", m.root_dart}};
}

void from_json(const nlohmann::json& j, RotationMap& m) {
  m.n = j.at("n").get<int>();
  m.alpha = j.at("alpha").get<std::vector<int>>();
  m.sigma = j.at("sigma").get<std::vector<int>>();
  m.root_dart = j.at("root_dart").get<int>();
}

}  // namespace unimap
