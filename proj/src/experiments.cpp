#include "unimap/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "unimap/gluing_oracle.hpp"
#include "unimap/gw_dist.hpp"
#include "unimap/kernels.hpp"
#include "unimap/plane_tree.hpp"
#include "unimap/stats.hpp"

#ifndef UNIMAP_BUILD_ID
#define UNIMAP_BUILD_ID "unknown"
#endif

namespace unimap {

namespace {

constexpr int kExactBallMaxEdges = 6;
// Unobserved shapes are listed up to this many edges, so that a shape
// with a large expected count cannot escape the test by never appearing.
constexpr int kShapeListMaxEdges = 8;

Regime regime_of(const ExperimentConfig& cfg) {
  const double theta = cfg.theta();
  if (!(theta >= 0.0 && theta < 0.5)) throw ConfigError("limit theta must lie in [0, 1/2)");
  return resolve_regime(theta);
}

void fill_z(Outcome& o, std::uint64_t samples) {
  const double n = static_cast<double>(samples);
  o.frequency = static_cast<double>(o.count) / n;
  o.std_error = std::sqrt(o.probability * (1.0 - o.probability) / n);
  o.z = z_score(static_cast<double>(o.count), n, o.probability);
}

void finish(ComparisonReport& rep) {
  std::map<std::string, double> p, q;
  for (const auto& o : rep.outcomes) {
    if (o.frequency > 0.0) p[o.key] = o.frequency;
    if (o.probability > 0.0) q[o.key] = o.probability;
    if (!o.tested) continue;
    ++rep.tested;
    rep.max_abs_z = std::max(rep.max_abs_z, std::abs(o.z));
  }
  rep.tv = tv_distance(p, q);
  rep.z_pass = rep.max_abs_z <= rep.config.z_threshold;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 0 || g < 0) throw ConfigError("n and g must be non-negative");
  if (2 * g > n) throw ConfigError("need 2g <= n");
  if (samples < 1) throw ConfigError("need at least one sample");
  if (r < 0) throw ConfigError("radius must be non-negative");
  if (workers < 0) throw ConfigError("workers must be non-negative");
}

double ComparisonReport::extra(const std::string& name) const {
  for (const auto& [k, v] : extras)
    if (k == name) return v;
  throw std::out_of_range("no extra named " + name);
}

const std::string& build_id() {
  static const std::string id = UNIMAP_BUILD_ID;
  return id;
}

ComparisonReport run_local_limit(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.r < 1) throw ConfigError("local-limit needs r >= 1");
  if (cfg.n < 1) throw ConfigError("local-limit needs n >= 1");
  ComparisonReport rep;
  rep.experiment = "local-limit";
  rep.config = cfg;
  rep.regime = regime_of(cfg);
  const double xi = rep.regime.xi;

  if (cfg.n <= kExactBallMaxEdges) {
    rep.exact = true;
    const auto dist = exact_ball_dist(cfg.n, cfg.g, cfg.r);
    rep.samples = dist.total();
    for (const auto& [code, c] : dist.counts()) {
      Outcome o;
      o.key = code;
      o.count = c;
      o.frequency = dist.frequency(code);
      if (code != kNonTreeBall) {
        const PlaneTree t = PlaneTree::from_code(code);
        if (t.height() == cfg.r) o.probability = ball_probability(xi, t);
      }
      rep.outcomes.push_back(o);
    }
    finish(rep);
    rep.extras = {{"non_tree_fraction", dist.frequency(kNonTreeBall)}};
    return rep;
  }

  const BallTally tally = ball_tally_parallel(cfg.n, cfg.g, cfg.r, cfg.samples, cfg.seed, cfg.workers);
  rep.samples = tally.samples;
  std::set<std::string> shapes;
  for (const auto& [code, c] : tally.shapes.counts()) shapes.insert(code);
  if (cfg.r == 1) {
    // Stars: P(B_1 = star_d) summed over plane stars is one per shape.
    std::string star;
    for (int d = 1; d <= 4096; ++d) {
      star += "()";
      if (ball_probability_kd(xi, d, d) * static_cast<double>(cfg.samples) < 1e-3 && d > 8) break;
      shapes.insert(star);
    }
  } else {
    for (int k = cfg.r; k <= kShapeListMaxEdges; ++k)
      for (const auto& t : all_plane_trees(k))
        if (t.height() == cfg.r) shapes.insert(unordered_code(t));
  }
  for (const auto& code : shapes) {
    Outcome o;
    o.key = code;
    o.count = tally.shapes.count(code);
    const PlaneTree rep_tree = PlaneTree::from_code(code);
    if (rep_tree.height() == cfg.r)
      o.probability = plane_embedding_count(rep_tree).get_d() * ball_probability(xi, rep_tree);
    fill_z(o, tally.samples);
    o.tested = o.probability * static_cast<double>(tally.samples) >= cfg.min_expected;
    rep.outcomes.push_back(o);
  }
  finish(rep);
  const double n = static_cast<double>(tally.samples);
  rep.extras = {
      {"non_tree_fraction", static_cast<double>(tally.non_tree) / n},
      {"plane_unrecoverable_fraction", 1.0 - static_cast<double>(tally.plane_recovered) / n},
      {"merged_vertex_fraction",
       tally.ball_vertices == 0 ? 0.0
                                : static_cast<double>(tally.merged_vertices) / static_cast<double>(tally.ball_vertices)},
  };
  return rep;
}

ComparisonReport run_root_degree(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.n < 1) throw ConfigError("root-degree needs n >= 1");
  ComparisonReport rep;
  rep.experiment = "root-degree";
  rep.config = cfg;
  rep.regime = regime_of(cfg);
  const bool exact = cfg.reference == Reference::exact;
  if (exact && cfg.n > kOracleMaxEdges) throw ConfigError("exact reference needs n <= 8");
  rep.tv_pass = true;

  const DistTable<int> tally = root_degree_tally_parallel(cfg.n, cfg.g, cfg.samples, cfg.seed, cfg.workers);
  rep.samples = tally.total();
  std::map<int, double> theory;
  if (exact) {
    const auto law = exact_root_degree_dist(cfg.n, cfg.g);
    for (const auto& [d, c] : law.counts()) theory[d] = law.frequency(d);
  } else {
    for (int d = 1; d <= 2 * cfg.n; ++d) {
      const double p = root_degree_pmf_beta(rep.regime.beta, d);
      if (p * static_cast<double>(cfg.samples) < 1e-3 && d > cfg.max_tested_degree) break;
      theory[d] = p;
    }
  }
  std::set<int> degrees;
  for (const auto& [d, p] : theory) degrees.insert(d);
  for (const auto& [d, c] : tally.counts()) degrees.insert(d);
  for (int d : degrees) {
    Outcome o;
    o.key = std::to_string(d);
    o.count = tally.count(d);
    auto it = theory.find(d);
    o.probability = it == theory.end() ? 0.0 : it->second;
    fill_z(o, tally.total());
    o.tested = d <= cfg.max_tested_degree && o.probability > 0.0;
    rep.outcomes.push_back(o);
  }
  finish(rep);
  const double bound = cfg.tv_threshold ? *cfg.tv_threshold : (exact ? 0.01 : 0.05);
  rep.tv_pass = rep.tv <= bound;
  rep.extras = {{"tv_threshold", bound}};
  return rep;
}

ComparisonReport run_gw_ball(const ExperimentConfig& cfg, double xi) {
  if (cfg.samples < 1) throw ConfigError("need at least one sample");
  if (cfg.r < 1 || cfg.r > 4) throw ConfigError("gw ball radius must lie in 1..4");
  if (!(xi > 0.0 && xi <= 0.5)) throw ConfigError("xi must lie in (0, 1/2]");
  ComparisonReport rep;
  rep.experiment = "gw-ball";
  rep.config = cfg;
  rep.regime.beta = 1.0 - 2.0 * xi;
  rep.regime.xi = xi;
  rep.regime.z_beta = std::atanh(rep.regime.beta);
  const auto tally = gw_ball_tally_parallel(xi, cfg.r, cfg.samples, cfg.seed, cfg.workers);
  rep.samples = tally.total();
  std::set<std::string> codes;
  for (const auto& [code, c] : tally.counts()) codes.insert(code);
  for (int k = cfg.r; k <= 10; ++k)
    for (const auto& t : all_plane_trees(k))
      if (t.height() == cfg.r) codes.insert(t.code());
  for (const auto& code : codes) {
    Outcome o;
    o.key = code;
    o.count = tally.count(code);
    o.probability = ball_probability(xi, PlaneTree::from_code(code));
    fill_z(o, rep.samples);
    o.tested = o.probability * static_cast<double>(rep.samples) >= cfg.min_expected;
    rep.outcomes.push_back(o);
  }
  finish(rep);
  return rep;
}

DegreeProfile degree_profile(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.r < 1) throw ConfigError("degree-profile needs r >= 1");
  DegreeProfile out;
  out.config = cfg;
  out.regime = regime_of(cfg);
  const double theta = cfg.theta();
  if (cfg.n > 0) out.global_mean_degree = 2.0 * cfg.n / (cfg.n + 1 - 2 * cfg.g);
  out.global_limit = 2.0 / (1.0 - 2.0 * theta);
  out.local_limit = 2.0 / (1.0 - out.regime.beta);
  for (int r = 1; r <= cfg.r; ++r) {
    // Distinct seed per radius keeps rows independent.
    const auto means = degree_profile_parallel(out.regime.xi, r, cfg.samples, mix64(cfg.seed + static_cast<std::uint64_t>(r)),
                                               cfg.workers);
    double sum = 0.0, sq = 0.0;
    for (double m : means) {
      sum += m;
      sq += m * m;
    }
    const double k = static_cast<double>(means.size());
    DegreeProfileRow row;
    row.r = r;
    row.mean = sum / k;
    row.std_error = k > 1 ? std::sqrt(std::max(0.0, sq / k - row.mean * row.mean) / (k - 1)) : 0.0;
    out.rows.push_back(row);
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::json header_json(const ExperimentConfig& cfg, const Regime& regime) {
  return {{"build_id", build_id()},
          {"n", cfg.n},
          {"g", cfg.g},
          {"r", cfg.r},
          {"samples", cfg.samples},
          {"seed", cfg.seed},
          {"workers", cfg.workers},
          {"theta", regime.theta},
          {"beta", regime.beta},
          {"xi", regime.xi},
          {"z_beta", regime.z_beta}};
}

nlohmann::json report_json(const ComparisonReport& report) {
  nlohmann::json j;
  j["experiment"] = report.experiment;
  j["header"] = header_json(report.config, report.regime);
  j["exact"] = report.exact;
  j["samples"] = report.samples;
  auto outcomes = nlohmann::json::array();
  for (const auto& o : report.outcomes)
    outcomes.push_back({{"key", o.key},
                        {"count", o.count},
                        {"frequency", o.frequency},
                        {"probability", o.probability},
                        {"std_error", o.std_error},
                        {"z", o.z},
                        {"tested", o.tested}});
  j["outcomes"] = outcomes;
  j["tv"] = report.tv;
  j["max_abs_z"] = report.max_abs_z;
  j["tested"] = report.tested;
  for (const auto& [k, v] : report.extras) j["extras"][k] = v;
  j["pass"] = report.pass();
  return j;
}

nlohmann::json profile_json(const DegreeProfile& profile) {
  nlohmann::json j;
  j["experiment"] = "degree-profile";
  j["header"] = header_json(profile.config, profile.regime);
  j["global_mean_degree"] = profile.global_mean_degree;
  j["global_limit"] = profile.global_limit;
  j["local_limit"] = profile.local_limit;
  auto rows = nlohmann::json::array();
  for (const auto& row : profile.rows) rows.push_back({{"r", row.r}, {"mean", row.mean}, {"std_error", row.std_error}});
  j["rows"] = rows;
  return j;
}

namespace {

void write_header(std::ostringstream& os, const nlohmann::json& header) {
  for (const auto& [k, v] : header.items()) {
    os << "# " << k << ": ";
    if (v.is_number_float())
      os << format_double(v.get<double>());
    else if (v.is_string())
      os << v.get<std::string>();
    else
      os << v.dump();
    os << '\n';
  }
}

}  // namespace

std::string report_csv(const ComparisonReport& report) {
  std::ostringstream os;
  os << "# experiment: " << report.experiment << '\n';
  write_header(os, header_json(report.config, report.regime));
  os << "# tv: " << format_double(report.tv) << '\n';
  os << "# max_abs_z: " << format_double(report.max_abs_z) << '\n';
  for (const auto& [k, v] : report.extras) os << "# " << k << ": " << format_double(v) << '\n';
  os << "# pass: " << (report.pass() ? "true" : "false") << '\n';
  os << "key,count,frequency,probability,std_error,z,tested\n";
  for (const auto& o : report.outcomes)
    os << o.key << ',' << o.count << ',' << format_double(o.frequency) << ',' << format_double(o.probability) << ','
       << format_double(o.std_error) << ',' << format_double(o.z) << ',' << (o.tested ? 1 : 0) << '\n';
  return os.str();
}

std::string profile_csv(const DegreeProfile& profile) {
  std::ostringstream os;
  os << "# experiment: degree-profile\n";
  write_header(os, header_json(profile.config, profile.regime));
  os << "# global_mean_degree: " << format_double(profile.global_mean_degree) << '\n';
  os << "# global_limit: " << format_double(profile.global_limit) << '\n';
  os << "# local_limit: " << format_double(profile.local_limit) << '\n';
  os << "r,mean,std_error\n";
  for (const auto& row : profile.rows)
    os << row.r << ',' << format_double(row.mean) << ',' << format_double(row.std_error) << '\n';
  return os.str();
}

std::string render(const ComparisonReport& report) {
  return report.config.format == Format::csv ? report_csv(report) : report_json(report).dump(2) + "\n";
}

std::string render(const DegreeProfile& profile) {
  return profile.config.format == Format::csv ? profile_csv(profile) : profile_json(profile).dump(2) + "\n";
}

}  // namespace unimap
