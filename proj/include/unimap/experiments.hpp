#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unimap/asymptotics.hpp"

namespace unimap {

// Bad experiment parameters; the CLI maps it to the usage exit code.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Format { csv, json };
enum class Reference { limit, exact };

struct ExperimentConfig {
  int n = 0;
  int g = 0;
  int r = 1;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string out;  // empty: stdout
  Format format = Format::json;
  // theta of the limit law; g/n when unset. 0 selects the critical law for
  // fixed genus.
  std::optional<double> limit_theta;
  Reference reference = Reference::limit;
  double z_threshold = 4.0;
  // Outcomes whose expected count is below this are reported, not tested.
  double min_expected = 50.0;
  // Largest root degree that is z-tested by run_root_degree.
  int max_tested_degree = 8;
  // Aggregate TV bound; unset means 0.05 against the limit, 0.01 exact.
  std::optional<double> tv_threshold;

  double theta() const { return limit_theta ? *limit_theta : (n > 0 ? static_cast<double>(g) / n : 0.0); }
  // Throws ConfigError unless 0 <= 2g <= n, samples >= 1, r >= 0.
  void validate() const;
};

struct Outcome {
  std::string key;
  std::uint64_t count = 0;
  double frequency = 0.0;
  double probability = 0.0;
  double std_error = 0.0;
  double z = 0.0;
  bool tested = false;
};

struct ComparisonReport {
  std::string experiment;
  ExperimentConfig config;
  Regime regime;
  bool exact = false;  // frequencies come from full enumeration
  std::uint64_t samples = 0;
  std::vector<Outcome> outcomes;
  double tv = 0.0;
  double max_abs_z = 0.0;
  int tested = 0;
  // Named scalar side results (non-tree fraction and the like).
  std::vector<std::pair<std::string, double>> extras;
  bool tv_pass = true;
  bool z_pass = true;
  bool pass() const { return tv_pass && z_pass; }
  double extra(const std::string& name) const;
};

// git describe of the source tree at configure time.
const std::string& build_id();

// Radius-r balls of sampled U_{g,n} against B_r(T_xi^inf).
//
// Tree balls are tallied by unordered shape tau and compared with
// N(tau) P(k, d), N(tau) the number of plane trees of shape tau; the ball
// law depends on the plane tree only through k and d, so this is the
// limit law of the shape. Non-tree and plane-unrecoverable fractions are
// reported as extras. For n <= 6 the sampled tally is replaced by the
// oracle's exact ball law (keyed by plane code, nothing tested).
ComparisonReport run_local_limit(const ExperimentConfig& cfg);

// Sampled root degree against the limit law, or against the oracle's exact
// finite-n law when cfg.reference is exact (n <= 8).
ComparisonReport run_root_degree(const ExperimentConfig& cfg);

// Sampled B_r(T_xi^inf) by plane code against the closed-form ball law;
// every plane tree of height r with at most 10 edges is listed.
ComparisonReport run_gw_ball(const ExperimentConfig& cfg, double xi);

struct DegreeProfileRow {
  int r = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

struct DegreeProfile {
  ExperimentConfig config;
  Regime regime;
  double global_mean_degree = 0.0;  // 2n / (n + 1 - 2g)
  double global_limit = 0.0;        // 2 / (1 - 2 theta)
  double local_limit = 0.0;         // 2 / (1 - beta_theta)
  std::vector<DegreeProfileRow> rows;  // radii 1..cfg.r
};

// Global mean degree identity and the Monte Carlo mean degree over
// V_r(T_xi^inf) for r = 1..cfg.r.
DegreeProfile degree_profile(const ExperimentConfig& cfg);

nlohmann::json header_json(const ExperimentConfig& cfg, const Regime& regime);
nlohmann::json report_json(const ComparisonReport& report);
nlohmann::json profile_json(const DegreeProfile& profile);
// '#'-prefixed header lines, then a column row and one row per record.
std::string report_csv(const ComparisonReport& report);
std::string profile_csv(const DegreeProfile& profile);
// Serialized in cfg.format.
std::string render(const ComparisonReport& report);
std::string render(const DegreeProfile& profile);

// Fixed-precision decimal used in every CSV cell.
std::string format_double(double x);

}  // namespace unimap
