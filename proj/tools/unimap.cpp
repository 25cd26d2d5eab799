// Command-line driver for counting, sampling and the local-limit experiments.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "unimap/asymptotics.hpp"
#include "unimap/exact_enum.hpp"
#include "unimap/experiments.hpp"
#include "unimap/gluing_oracle.hpp"
#include "unimap/kernels.hpp"
#include "unimap/unicellular_sampler.hpp"

using namespace unimap;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitStatFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Globals {
  std::uint64_t seed = 1;
  int workers = 0;
  std::string format = "json";
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + g.out);
  f << text;
}

ExperimentConfig base_config(const Globals& g) {
  ExperimentConfig c;
  c.seed = g.seed;
  c.workers = g.workers;
  c.out = g.out;
  c.format = g.format == "csv" ? Format::csv : Format::json;
  return c;
}

// Applies --theta to g when given: g = round(theta n).
void resolve_genus(ExperimentConfig& c, const std::optional<double>& theta) {
  if (!theta) return;
  if (!(*theta >= 0.0 && *theta < 0.5)) throw ConfigError("theta must lie in [0, 1/2)");
  c.g = static_cast<int>(std::lround(*theta * c.n));
}

std::string count_output(const Globals& g, int n_lo, int n_hi, std::optional<int> only_g, bool asymptotic) {
  std::ostringstream os;
  nlohmann::json rows = nlohmann::json::array();
  if (g.format == "csv") os << (asymptotic ? "n,g,count,asymptotic,ratio\n" : "n,g,count\n");
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int genus = 0; 2 * genus <= n; ++genus) {
      if (only_g && *only_g != genus) continue;
      const mpz_class c = lehman_walsh_count(n, genus);
      const bool has_asym = asymptotic && genus > 0;
      double log_asym = 0.0, ratio = 0.0;
      if (has_asym) {
        log_asym = log_asymptotic_count(n, genus);
        ratio = std::exp(log_asym - log_of(c));
      }
      if (g.format == "csv") {
        os << n << ',' << genus << ',' << c.get_str();
        if (asymptotic) os << ',' << (has_asym ? format_double(log_asym) : "") << ',' << (has_asym ? format_double(ratio) : "");
        os << '\n';
      } else {
        nlohmann::json row{{"n", n}, {"g", genus}, {"count", c.get_str()}};
        if (has_asym) {
          row["log_asymptotic"] = log_asym;
          row["ratio"] = ratio;
        }
        rows.push_back(row);
      }
    }
  }
  if (g.format != "csv") os << rows.dump(2) << '\n';
  return os.str();
}

std::string beta_output(const Globals& g, double theta) {
  const Regime r = resolve_regime(theta);
  if (g.format == "csv") {
    std::ostringstream os;
    os << "theta,beta,xi,z_beta,mean_x,var_x,a_theta\n"
       << format_double(r.theta) << ',' << format_double(r.beta) << ',' << format_double(r.xi) << ','
       << format_double(r.z_beta) << ',' << format_double(r.mean_x) << ',' << format_double(r.var_x) << ','
       << format_double(r.a_theta) << '\n';
    return os.str();
  }
  nlohmann::json j{{"theta", r.theta}, {"beta", r.beta},     {"xi", r.xi},          {"z_beta", r.z_beta},
                   {"mean_x", r.mean_x}, {"var_x", r.var_x}, {"a_theta", r.a_theta}, {"build_id", build_id()}};
  return j.dump(2) + "\n";
}

std::string surgery_line(const Globals& g, int n, int genus, const PlaneTree& t, const SurgeryCheck& s, bool header) {
  const int k = t.edge_count(), d = t.count_at_depth(t.height());
  if (g.format == "csv") {
    std::ostringstream os;
    if (header) os << "n,g,tree,k,d,lhs,rhs,rhs_star,equal,star_equal\n";
    os << n << ',' << genus << ',' << t.code() << ',' << k << ',' << d << ',' << s.lhs << ',' << s.rhs << ','
       << s.rhs_star << ',' << (s.equal() ? 1 : 0) << ',' << (s.star_equal() ? 1 : 0) << '\n';
    return os.str();
  }
  nlohmann::json j{{"n", n},         {"g", genus},           {"tree", t.code()},           {"k", k},
                   {"d", d},         {"lhs", s.lhs},         {"rhs", s.rhs},               {"rhs_star", s.rhs_star},
                   {"equal", s.equal()}, {"star_equal", s.star_equal()}};
  return j.dump() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unicellular maps of high genus: exact counts, samplers and local-limit checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  app.add_option("--seed", glob.seed, "64-bit seed of the per-sample RNG streams");
  app.add_option("--workers", glob.workers, "OpenMP worker count (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", glob.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", glob.out, "Output file (default stdout)");

  int exit_code = kExitPass;
  std::function<void()> action;

  // count
  auto* count = app.add_subcommand("count", "Exact counts #U_{g,n}. CSV columns: n,g,count[,asymptotic,ratio]");
  int count_n = 0, count_max_n = 0;
  std::optional<int> count_g;
  bool count_asym = false;
  count->add_option("--n", count_n, "Number of edges");
  count->add_option("--max-n", count_max_n, "Tabulate every n from 1 to this value");
  count->add_option("--g", count_g, "Restrict to one genus");
  count->add_flag("--asymptotic", count_asym, "Add the log of the asymptotic estimate and its ratio to the count");
  count->callback([&] {
    action = [&] {
      if (count_n < 0 || count_max_n < 0) throw ConfigError("n must be non-negative");
      const int lo = count_max_n > 0 ? 1 : count_n, hi = count_max_n > 0 ? count_max_n : count_n;
      emit(glob, count_output(glob, lo, hi, count_g, count_asym));
    };
  });

  // beta
  auto* beta = app.add_subcommand("beta", "Resolve beta_theta, xi_theta and the X_beta moments. CSV columns: "
                                          "theta,beta,xi,z_beta,mean_x,var_x,a_theta");
  double beta_theta = 0.0;
  beta->add_option("--theta", beta_theta, "g/n ratio in [0, 1/2)")->required();
  beta->callback([&] {
    action = [&] {
      if (!(beta_theta >= 0.0 && beta_theta < 0.5)) throw ConfigError("theta must lie in [0, 1/2)");
      emit(glob, beta_output(glob, beta_theta));
    };
  });

  // Shared experiment options.
  ExperimentConfig cfg;
  std::optional<double> theta_opt, limit_theta;
  auto add_experiment_options = [&](CLI::App* sub, bool with_r) {
    sub->add_option("--n", cfg.n, "Number of edges")->required();
    sub->add_option("--g", cfg.g, "Genus");
    sub->add_option("--theta", theta_opt, "Set g = round(theta n)");
    sub->add_option("--samples", cfg.samples, "Number of sampled maps");
    sub->add_option("--limit-theta", limit_theta, "theta of the limit law (default g/n; 0 for fixed genus)");
    if (with_r) sub->add_option("--r", cfg.r, "Ball radius (1..4)")->check(CLI::Range(1, 4));
  };
  auto finish_config = [&] {
    ExperimentConfig c = base_config(glob);
    c.n = cfg.n;
    c.g = cfg.g;
    c.r = cfg.r;
    c.samples = cfg.samples;
    c.reference = cfg.reference;
    c.limit_theta = limit_theta;
    resolve_genus(c, theta_opt);
    return c;
  };
  auto report = [&](const ComparisonReport& rep) {
    emit(glob, render(rep));
    if (!rep.pass()) exit_code = kExitStatFail;
  };

  // root-degree
  auto* rootdeg = app.add_subcommand("root-degree", "Sampled root degree vs the limit (or exact) law. CSV columns: "
                                                    "key,count,frequency,probability,std_error,z,tested");
  add_experiment_options(rootdeg, false);
  bool rootdeg_exact = false;
  rootdeg->add_flag("--exact", rootdeg_exact, "Compare with the oracle's exact law (n <= 8)");
  rootdeg->callback([&] {
    action = [&] {
      cfg.reference = rootdeg_exact ? Reference::exact : Reference::limit;
      report(run_root_degree(finish_config()));
    };
  });

  // sample
  auto* sample = app.add_subcommand("sample", "Uniform samples of U_{g,n} as JSON lines "
                                              "{v, edges, root_vertex, root_edge[, cdt]}");
  int sample_count = 1;
  bool emit_cdt = false;
  sample->add_option("--n", cfg.n, "Number of edges")->required();
  sample->add_option("--g", cfg.g, "Genus");
  sample->add_option("--count", sample_count, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_flag("--emit-cdt", emit_cdt, "Include the C-decorated tree");
  sample->callback([&] {
    action = [&] {
      ExperimentConfig c = finish_config();
      c.samples = static_cast<std::uint64_t>(sample_count);
      c.validate();
      const UnicellularSampler sampler(c.n, c.g);
      std::ostringstream os;
      for (int i = 0; i < sample_count; ++i) {
        Rng rng = make_stream(c.seed, static_cast<std::uint64_t>(i));
        os << sample_to_json(sampler.sample(rng), emit_cdt).dump() << '\n';
      }
      emit(glob, os.str());
    };
  });

  // gw
  auto* gw = app.add_subcommand("gw", "Sampled B_r(T_xi^inf) vs the closed-form ball law. CSV columns: "
                                      "key,count,frequency,probability,std_error,z,tested");
  double gw_xi = 0.5;
  gw->add_option("--xi", gw_xi, "Offspring parameter in (0, 1/2]")->required();
  gw->add_option("--r", cfg.r, "Ball radius (1..4)")->check(CLI::Range(1, 4));
  gw->add_option("--samples", cfg.samples, "Number of sampled balls");
  gw->callback([&] {
    action = [&] {
      ExperimentConfig c = base_config(glob);
      c.r = cfg.r;
      c.samples = cfg.samples;
      report(run_gw_ball(c, gw_xi));
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive polygon-gluing enumeration (n <= 8)");
  oracle->require_subcommand(1);
  auto* census = oracle->add_subcommand("census", "Genus census. JSON {n, counts}; CSV columns: n,g,count");
  int oracle_n = 0, oracle_g = 0;
  std::string oracle_tree;
  census->add_option("--n", oracle_n, "Number of edges")->required();
  census->callback([&] {
    action = [&] {
      const auto c = census_parallel(oracle_n, glob.workers);
      if (glob.format == "csv") {
        std::ostringstream os;
        os << "n,g,count\n";
        for (const auto& [genus, k] : c.counts) os << c.n << ',' << genus << ',' << k << '\n';
        emit(glob, os.str());
      } else {
        emit(glob, census_to_json(c).dump() + "\n");
      }
    };
  });
  auto* surgery = oracle->add_subcommand("surgery", "Both sides of the surgery identity for one tree. CSV columns: "
                                                    "n,g,tree,k,d,lhs,rhs,rhs_star,equal,star_equal");
  surgery->add_option("--n", oracle_n, "Number of edges")->required();
  surgery->add_option("--g", oracle_g, "Genus")->required();
  surgery->add_option("--tree", oracle_tree, "Plane tree as a parenthesis code, e.g. \"(()())\"")->required();
  surgery->callback([&] {
    action = [&] {
      const PlaneTree t = PlaneTree::from_code(oracle_tree);
      const auto s = verify_surgery(oracle_n, oracle_g, t);
      emit(glob, surgery_line(glob, oracle_n, oracle_g, t, s, true));
      if (!s.equal()) exit_code = kExitStatFail;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Pass/fail verification runs");
  verify->require_subcommand(1);
  auto* local = verify->add_subcommand("local-limit", "Sampled ball shapes vs the T_xi^inf limit. CSV columns: "
                                                      "key,count,frequency,probability,std_error,z,tested");
  add_experiment_options(local, true);
  local->callback([&] { action = [&] { report(run_local_limit(finish_config())); }; });
  auto* vsurgery = verify->add_subcommand("surgery", "Surgery identity for every tree with k <= max-k and every "
                                                     "(n, g) with n <= max-n. CSV columns as in oracle surgery");
  int max_n = 6, max_k = 3;
  vsurgery->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(1, kOracleMaxEdges));
  vsurgery->add_option("--max-k", max_k, "Largest tree size")->check(CLI::Range(1, 6));
  vsurgery->callback([&] {
    action = [&] {
      std::ostringstream os;
      bool header = true;
      for (int n = 1; n <= max_n; ++n)
        for (int genus = 0; 2 * genus <= n; ++genus)
          for (int k = 1; k <= max_k; ++k)
            for (const auto& t : all_plane_trees(k)) {
              const int d = t.count_at_depth(t.height());
              if (n - k + d < 1 || n - k + d > kOracleMaxEdges) continue;
              const auto s = verify_surgery(n, genus, t);
              os << surgery_line(glob, n, genus, t, s, header);
              header = false;
              if (!s.equal()) exit_code = kExitStatFail;
            }
      emit(glob, os.str());
    };
  });

  // degree-profile
  auto* profile = app.add_subcommand("degree-profile", "Global mean degree and mean degree over V_r(T_xi^inf). "
                                                       "CSV columns: r,mean,std_error");
  add_experiment_options(profile, false);
  profile->add_option("--r", cfg.r, "Largest radius")->check(CLI::Range(1, 40));
  profile->callback([&] { action = [&] { emit(glob, render(degree_profile(finish_config()))); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  try {
    if (action) action();
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return exit_code;
}
