#include "unimap/gluing_oracle.hpp"

#include <stdexcept>

#include "unimap/exact_enum.hpp"

namespace unimap {

namespace {

void check_oracle_size(int n) {
  if (n < 1) throw std::invalid_argument("oracle: need n >= 1");
  if (n > kOracleMaxEdges) throw std::invalid_argument("oracle: n exceeds the enumeration cap");
}

void complete_matchings(std::vector<int>& partner, const MapVisitor& visit) {
  const int m = static_cast<int>(partner.size());
  int i = 0;
  while (i < m && partner[i] >= 0) ++i;
  if (i == m) {
    const RotationMap map = map_from_polygon_gluing(partner);
    visit(map, faces_and_genus(map).genus);
    return;
  }
  for (int j = i + 1; j < m; ++j) {
    if (partner[j] >= 0) continue;
    partner[i] = j;
    partner[j] = i;
    complete_matchings(partner, visit);
    partner[i] = partner[j] = -1;
  }
}

}  // namespace

void for_each_unicellular_branch(int n, int partner_of_root, const MapVisitor& visit) {
  check_oracle_size(n);
  if (partner_of_root < 1 || partner_of_root >= 2 * n) throw std::invalid_argument("oracle: bad branch");
  std::vector<int> partner(2 * n, -1);
  partner[0] = partner_of_root;
  partner[partner_of_root] = 0;
  complete_matchings(partner, visit);
}

void for_each_unicellular(int n, const MapVisitor& visit) {
  check_oracle_size(n);
  for (int p = 1; p < 2 * n; ++p) for_each_unicellular_branch(n, p, visit);
}

std::vector<RotationMap> enumerate_unicellular(int n) {
  std::vector<RotationMap> out;
  for_each_unicellular(n, [&](const RotationMap& m, int) { out.push_back(m); });
  return out;
}

std::uint64_t GluingCensus::total() const {
  std::uint64_t t = 0;
  for (const auto& [g, c] : counts) t += c;
  return t;
}

void GluingCensus::merge(const GluingCensus& other) {
  for (const auto& [g, c] : other.counts) counts[g] += c;
}

GluingCensus gluing_census(int n) {
  GluingCensus c;
  c.n = n;
  for_each_unicellular(n, [&](const RotationMap&, int genus) { ++c.counts[genus]; });
  return c;
}

nlohmann::json census_to_json(const GluingCensus& c) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [g, k] : c.counts) counts[std::to_string(g)] = k;
  return {{"n", c.n}, {"counts", counts}};
}

DistTable<int> exact_root_degree_dist(int n, int g) {
  DistTable<int> out;
  for_each_unicellular(n, [&](const RotationMap& m, int genus) {
    if (genus == g) out.add(m.root_degree());
  });
  if (out.empty()) throw std::domain_error("no maps");
  return out;
}

DistTable<std::string> exact_ball_dist(int n, int g, int r) {
  DistTable<std::string> out;
  for_each_unicellular(n, [&](const RotationMap& m, int genus) {
    if (genus != g) return;
    const MapBall b = ball_of_rotation_map(m, r);
    out.add(b.is_tree ? b.code : kNonTreeBall);
  });
  if (out.empty()) throw std::domain_error("no maps");
  return out;
}

SurgeryCheck verify_surgery(int n, int g, const PlaneTree& t) {
  const int r = t.height();
  if (r < 1) throw std::invalid_argument("verify_surgery: tree must have height >= 1");
  const int k = t.edge_count();
  const int d = t.count_at_depth(r);
  const int reduced = n - k + d;
  if (reduced < 1) throw std::invalid_argument("verify_surgery: need n - k + d >= 1");
  check_oracle_size(n);
  check_oracle_size(reduced);
  const std::string code = t.code();
  SurgeryCheck out;
  for_each_unicellular(n, [&](const RotationMap& m, int genus) {
    if (genus != g) return;
    const MapBall b = ball_of_rotation_map(m, r);
    if (b.is_tree && b.code == code) ++out.lhs;
  });
  std::string star;
  for (int i = 0; i < d; ++i) star += "()";
  for_each_unicellular(reduced, [&](const RotationMap& m, int genus) {
    if (genus != g || m.root_degree() != d) return;
    ++out.rhs;
    const MapBall b = ball_of_rotation_map(m, 1);
    if (b.is_tree && b.code == star) ++out.rhs_star;
  });
  return out;
}

}  // namespace unimap
