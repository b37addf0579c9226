#include "ocucb/experiment.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ocucb/analysis.hpp"
#include "ocucb/errors.hpp"

#ifndef OCUCB_VERSION
#define OCUCB_VERSION "unknown"
#endif

namespace ocucb {
namespace {

enum class Sweep { Delta, Horizon, Arms, Instance };

struct ExperimentDefaults {
  std::string_view name;
  Sweep sweep;
  std::string_view description;
  std::size_t arms;
  std::uint64_t horizon;
  std::vector<double> deltas;
  std::vector<std::uint64_t> horizons;
  std::vector<std::size_t> arm_grid;
  std::vector<double> alphas;
  std::size_t runs;
  bool alpha_sweep;  // one OCUCB series per alpha instead of a policy list
  std::vector<Algorithm> policies;
};

const std::vector<Algorithm> kAllPolicies{Algorithm::UCB, Algorithm::OCUCB, Algorithm::AOCUCB,
                                          Algorithm::MOSS, Algorithm::ThompsonGaussian};

const std::vector<ExperimentDefaults>& defaults_table() {
  static const std::vector<ExperimentDefaults> table{
      {"sensitivity-delta", Sweep::Delta,
       "OCUCB for each alpha, one best arm and K-1 arms at gap delta, delta varies",
       2, 10000, {0.1, 0.2, 0.4, 0.6, 0.8, 1.0, 1.5, 2.0}, {}, {}, {1, 2, 3, 6}, 1000, true, {}},
      {"sensitivity-horizon", Sweep::Horizon,
       "OCUCB for each alpha, one best arm and K-1 arms at gap delta, n varies",
       2, 0, {0.2}, {5000, 10000, 20000, 50000, 100000}, {}, {1, 2, 3, 6}, 500, true, {}},
      {"compare-delta", Sweep::Delta, "all policies, one best arm and K-1 arms at gap delta, delta varies",
       2, 10000, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}, {}, {}, {3}, 1000, false,
       kAllPolicies},
      {"compare-horizon", Sweep::Horizon, "all policies, one best arm and K-1 arms at gap delta, n varies",
       2, 0, {0.3}, {1000, 5000, 10000, 20000, 50000, 100000}, {}, {3}, 500, false, kAllPolicies},
      {"moss-failure", Sweep::Arms,
       "means (0, -1/(4K), -1, ..., -1) with n = K^3, K varies",
       0, 0, {}, {}, {5, 10, 20, 50, 100}, {3}, 200, false, {Algorithm::OCUCB, Algorithm::MOSS}},
      {"uniform-arms", Sweep::Horizon, "means -(i-1)/K, n varies", 10, 0, {},
       {1000, 10000, 20000, 50000, 100000}, {}, {3}, 200, false, kAllPolicies},
      {"lower-bound", Sweep::Instance,
       "instance i of the lower-bound family: delta at arm 1, 2 delta at arm i, 0 elsewhere",
       5, 10000, {0.1}, {}, {}, {3}, 500, false, kAllPolicies},
      {"concentration", Sweep::Horizon,
       "P(max_t S_t >= eps) for Gaussian walks of length n, eps = scale * sqrt(n), vs exp(-eps^2/(2n))",
       0, 0, {}, {1, 2, 4, 8, 16, 32, 64, 128}, {}, {}, 100000, false, {}},
  };
  return table;
}

const ExperimentDefaults& defaults_for(const std::string& name) {
  for (const auto& d : defaults_table()) {
    if (d.name == name) return d;
  }
  throw UsageError("unknown experiment '" + name + "'");
}

// Bound exp(-eps^2 / 2n) = 0.1 at every n.
const double kDefaultEpsilonScale = std::sqrt(2.0 * std::log(10.0));

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%g", v);
      out += buf;
    } else if constexpr (std::is_same_v<T, Algorithm>) {
      out += to_string(v);
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

std::string defaults_help() {
  std::ostringstream out;
  out << "Experiments and their defaults:\n";
  for (const auto& d : defaults_table()) {
    out << "  " << d.name << ": " << d.description << "\n    runs=" << d.runs;
    if (d.arms) out << " k=" << d.arms;
    if (d.horizon) out << " n=" << d.horizon;
    if (!d.deltas.empty()) out << " delta-grid=" << join(d.deltas);
    if (!d.horizons.empty()) out << " n-grid=" << join(d.horizons);
    if (!d.arm_grid.empty()) out << " k-grid=" << join(d.arm_grid);
    if (d.alpha_sweep) out << " alpha=" << join(d.alphas);
    if (!d.policies.empty()) out << " policies=" << join(d.policies) << " alpha=" << join(d.alphas);
    if (d.name == "concentration") out << " eps-scale=sqrt(2 log 10)";
    else out << " psi=2";
    out << '\n';
  }
  out << "Policies: UCB, MOSS, OCUCB, AOCUCB, Thompson.\n"
         "Output: --out FILE (default <exp>.txt, '-' for stdout). Exit status: 0 ok, 1 usage, 2 runtime.\n";
  return out.str();
}

void build_app(CLI::App& app, ExperimentSpec& spec, std::vector<std::string>& policy_names,
               bool& fast, bool& naive) {
  app.footer(defaults_help());
  app.add_option("--exp", spec.name, "Experiment to run")
      ->required()
      ->check(CLI::IsMember(experiment_names()));
  app.add_option("--n", spec.horizon, "Horizon for fixed-horizon experiments")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--k", spec.arms, "Number of arms")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  app.add_option("--delta-grid", spec.delta_grid, "Comma-separated gaps")->delimiter(',');
  app.add_option("--n-grid", spec.horizon_grid, "Comma-separated horizons")->delimiter(',');
  app.add_option("--k-grid", spec.arm_grid, "Comma-separated arm counts (moss-failure)")->delimiter(',');
  app.add_option("--alpha", spec.alphas, "OCUCB alpha; a comma-separated list for sensitivity runs")
      ->delimiter(',');
  app.add_option("--psi", spec.psi, "OCUCB psi (default 2)");
  app.add_option("--runs", spec.runs, "Episodes (or trials) per point")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  app.add_option("--eps-scale", spec.epsilon_scale, "concentration: eps = scale * sqrt(n)");
  app.add_option("--seed", spec.seed, "Master seed")->capture_default_str();
  app.add_option("--threads", spec.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  app.add_option("--out", spec.out, "Data file path");
  app.add_option("--raw", spec.raw_out, "Also write per-episode regrets to this file");
  app.add_option("--policies", policy_names, "Comma-separated policy list")->delimiter(',');
  auto* fast_flag = app.add_flag("--fast", fast, "Lazy index scheduler where applicable (default)");
  auto* naive_flag = app.add_flag("--naive", naive, "Naive O(K) argmax every step");
  fast_flag->excludes(naive_flag);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string_view version() { return OCUCB_VERSION; }

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : defaults_table()) out.emplace_back(d.name);
    return out;
  }();
  return names;
}

std::string usage() {
  ExperimentSpec spec;
  std::vector<std::string> names;
  bool fast = false, naive = false;
  CLI::App app("Stochastic bandit regret benchmarks", "ocucb-bench");
  build_app(app, spec, names, fast, naive);
  return app.help();
}

ExperimentSpec parse_flags(int argc, const char* const* argv) {
  if (argc <= 1) throw UsageError(usage());
  ExperimentSpec spec;
  std::vector<std::string> policy_names;
  bool fast = false, naive = false;
  CLI::App app("Stochastic bandit regret benchmarks", "ocucb-bench");
  build_app(app, spec, policy_names, fast, naive);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto& name : policy_names) {
    const auto algorithm = parse_algorithm(name);
    require(algorithm.has_value(), "--policies: unknown policy '" + name + "'");
    spec.policies.push_back(*algorithm);
  }
  spec.scheduler = naive ? Scheduler::Naive : Scheduler::Lazy;
  return spec;
}

ExperimentSpec resolve_defaults(const ExperimentSpec& input) {
  const ExperimentDefaults& d = defaults_for(input.name);
  ExperimentSpec spec = input;
  const bool concentration = d.name == "concentration";

  require(spec.threads >= 1, "--threads must be at least 1");
  if (!spec.runs) spec.runs = d.runs;
  require(*spec.runs >= 2, "--runs must be at least 2");
  if (!spec.psi) spec.psi = 2.0;
  require(*spec.psi > 0.0 && std::isfinite(*spec.psi), "--psi must be positive");

  if (concentration) {
    require(spec.policies.empty() && spec.alphas.empty(),
            "--policies/--alpha do not apply to the concentration experiment");
    require(!spec.horizon && !spec.arms && spec.delta_grid.empty() && spec.arm_grid.empty(),
            "concentration takes --n-grid, --eps-scale and --runs only");
    if (!spec.epsilon_scale) spec.epsilon_scale = kDefaultEpsilonScale;
    require(*spec.epsilon_scale > 0.0, "--eps-scale must be positive");
    if (spec.horizon_grid.empty()) spec.horizon_grid = d.horizons;
    for (auto n : spec.horizon_grid) require(n >= 1, "--n-grid entries must be at least 1");
    return spec;
  }
  require(!spec.epsilon_scale, "--eps-scale only applies to the concentration experiment");

  if (spec.alphas.empty()) spec.alphas = d.alphas;
  for (double a : spec.alphas) require(a > 0.0 && std::isfinite(a), "--alpha values must be positive");
  if (d.alpha_sweep) {
    require(spec.policies.empty(), "--policies does not apply to sensitivity experiments (use --alpha)");
  } else {
    require(spec.alphas.size() == 1, "--alpha takes a single value outside sensitivity experiments");
    if (spec.policies.empty()) spec.policies = d.policies;
  }

  switch (d.sweep) {
    case Sweep::Delta:
      require(spec.horizon_grid.empty() && spec.arm_grid.empty(), "this experiment sweeps --delta-grid");
      if (!spec.horizon) spec.horizon = d.horizon;
      if (!spec.arms) spec.arms = d.arms;
      if (spec.delta_grid.empty()) spec.delta_grid = d.deltas;
      break;
    case Sweep::Horizon:
      require(!spec.horizon, "this experiment sweeps --n-grid; --n does not apply");
      require(spec.arm_grid.empty(), "--k-grid only applies to moss-failure");
      if (!spec.arms) spec.arms = d.arms;
      if (spec.horizon_grid.empty()) spec.horizon_grid = d.horizons;
      if (d.name == "uniform-arms") {
        require(spec.delta_grid.empty(), "--delta-grid does not apply to uniform-arms");
      } else {
        if (spec.delta_grid.empty()) spec.delta_grid = d.deltas;
        require(spec.delta_grid.size() == 1, "horizon sweeps take a single --delta-grid value");
      }
      for (auto n : spec.horizon_grid) {
        require(n >= *spec.arms, "--n-grid entries must be at least the number of arms");
      }
      break;
    case Sweep::Arms:
      require(!spec.horizon && !spec.arms && spec.horizon_grid.empty() && spec.delta_grid.empty(),
              "moss-failure takes --k-grid; n = K^3 is fixed by the instance");
      if (spec.arm_grid.empty()) spec.arm_grid = d.arm_grid;
      for (auto k : spec.arm_grid) require(k >= 3 && k <= 2600, "--k-grid entries must lie in [3, 2600]");
      break;
    case Sweep::Instance:
      require(spec.horizon_grid.empty() && spec.arm_grid.empty(), "lower-bound takes --k, --n, --delta-grid");
      if (!spec.horizon) spec.horizon = d.horizon;
      if (!spec.arms) spec.arms = d.arms;
      if (spec.delta_grid.empty()) spec.delta_grid = d.deltas;
      require(spec.delta_grid.size() == 1, "lower-bound takes a single --delta-grid value");
      require(spec.delta_grid.front() > 0.0, "lower-bound needs delta > 0");
      break;
  }
  for (double delta : spec.delta_grid) {
    require(delta >= 0.0 && std::isfinite(delta), "--delta-grid values must be finite and non-negative");
  }
  if (spec.horizon) require(*spec.horizon >= spec.arms.value_or(2), "--n must be at least --k");
  return spec;
}

namespace {

struct Series {
  std::string label;
  std::string description;
};

ExperimentOutput run_concentration(const ExperimentSpec& spec, std::ostream* summary) {
  ExperimentOutput output;
  DataTable& table = output.table;
  table.metadata = {
      "ocucb-bench " + std::string(version()),
      "experiment: concentration",
      "quantity: P(max_{t<=n} S_t >= eps), S_t a sum of t standard Gaussians",
      "bound: exp(-eps^2/(2n)), eps = " + format_number(*spec.epsilon_scale) + " * sqrt(n)",
      "trials: " + std::to_string(*spec.runs),
      "seed: " + std::to_string(spec.seed),
      "error bars: two standard errors",
  };
  table.columns = {"n", "mean:empirical", "mean:bound", "hw:empirical", "hw:bound"};
  if (summary) *summary << "n  eps  empirical  +-2SE  bound\n";
  for (std::size_t i = 0; i < spec.horizon_grid.size(); ++i) {
    const auto n = spec.horizon_grid[i];
    const double eps = *spec.epsilon_scale * std::sqrt(static_cast<double>(n));
    const auto est = maximal_inequality_check(n, eps, *spec.runs, spec.seed, spec.threads, i);
    table.rows.push_back({static_cast<double>(n), est.empirical, est.bound,
                          2.0 * est.standard_error, 0.0});
    if (summary) {
      *summary << n << "  " << eps << "  " << est.empirical << "  " << 2.0 * est.standard_error
               << "  " << est.bound << '\n';
    }
  }
  return output;
}

}  // namespace

ExperimentOutput run_experiment(const ExperimentSpec& input, std::ostream* summary) {
  const ExperimentSpec spec = resolve_defaults(input);
  const ExperimentDefaults& d = defaults_for(spec.name);
  if (spec.name == "concentration") return run_concentration(spec, summary);

  ExperimentOutput output;

  // Policy columns.
  std::vector<PolicyConfig> policies;
  if (d.alpha_sweep) {
    for (double alpha : spec.alphas) policies.push_back({Algorithm::OCUCB, alpha, *spec.psi, 0, 0});
  } else {
    for (Algorithm a : spec.policies) policies.push_back({a, spec.alphas.front(), *spec.psi, 0, 0});
  }

  // Grid points.
  ExperimentGrid grid;
  grid.runs = *spec.runs;
  grid.master_seed = spec.seed;
  std::string axis;
  std::vector<std::string> setup;
  switch (d.sweep) {
    case Sweep::Delta:
      axis = "delta";
      setup = {"arms: " + std::to_string(*spec.arms), "horizon: " + std::to_string(*spec.horizon)};
      for (double delta : spec.delta_grid) {
        grid.points.push_back({delta, equal_gap_instance(*spec.arms, delta), *spec.horizon});
      }
      break;
    case Sweep::Horizon:
      axis = "n";
      setup = {"arms: " + std::to_string(*spec.arms)};
      if (d.name == "uniform-arms") {
        for (auto n : spec.horizon_grid) {
          grid.points.push_back({static_cast<double>(n), uniform_arms_instance(*spec.arms), n});
        }
      } else {
        setup.push_back("delta: " + format_number(spec.delta_grid.front()));
        for (auto n : spec.horizon_grid) {
          grid.points.push_back(
              {static_cast<double>(n), equal_gap_instance(*spec.arms, spec.delta_grid.front()), n});
        }
      }
      break;
    case Sweep::Arms:
      axis = "K";
      setup = {"horizon: K^3"};
      for (auto k : spec.arm_grid) {
        auto [instance, n] = moss_failure_instance(k);
        grid.points.push_back({static_cast<double>(k), std::move(instance), n});
      }
      break;
    case Sweep::Instance: {
      axis = "instance";
      const double delta = spec.delta_grid.front();
      const double base_h = static_cast<double>(*spec.arms - 1) / (delta * delta);
      setup = {"arms: " + std::to_string(*spec.arms), "horizon: " + std::to_string(*spec.horizon),
               "delta: " + format_number(delta),
               "hardness of instance 1: H = (K-1)/delta^2 = " + format_number(base_h)};
      auto family = lower_bound_family(*spec.arms, delta);
      for (std::size_t i = 0; i < family.size(); ++i) {
        grid.points.push_back({static_cast<double>(i + 1), std::move(family[i]), *spec.horizon});
      }
      break;
    }
  }
  grid.policies = policies;

  for (const auto& p : policies) {
    PolicyConfig probe = p;
    probe.arms = 2;
    probe.horizon = 1;
    try {
      for (auto& w : validate(probe)) output.warnings.push_back(std::move(w));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  MonteCarloOptions options;
  options.threads = spec.threads;
  options.scheduler = spec.scheduler;
  const RawResults raw = monte_carlo_raw(grid, options);
  const auto rows = aggregate(raw);

  DataTable& table = output.table;
  table.metadata = {"ocucb-bench " + std::string(version()), "experiment: " + spec.name,
                    "setup: " + std::string(d.description)};
  for (auto& s : setup) table.metadata.push_back(std::move(s));
  table.metadata.push_back("runs: " + std::to_string(*spec.runs));
  table.metadata.push_back("seed: " + std::to_string(spec.seed));
  table.metadata.push_back("noise: standard Gaussian");
  for (std::size_t k = 0; k < policies.size(); ++k) {
    const auto& p = policies[k];
    std::string line = "policy " + std::to_string(k + 1) + ": " + p.label();
    if (p.algorithm == Algorithm::OCUCB) line += " provable-range=" + yes_no(p.in_provable_range());
    table.metadata.push_back(std::move(line));
  }
  table.metadata.push_back("values: mean pseudo-regret; hw columns are two standard errors");

  table.columns.push_back(axis);
  for (const auto& p : policies) table.columns.push_back("mean:" + p.label());
  for (const auto& p : policies) table.columns.push_back("hw:" + p.label());
  for (const auto& row : rows) {
    std::vector<double> values{row.coordinate};
    for (const auto& s : row.per_policy) values.push_back(s.mean);
    for (const auto& s : row.per_policy) values.push_back(s.half_width);
    table.rows.push_back(std::move(values));
  }

  if (!spec.raw_out.empty()) {
    DataTable raw_table;
    raw_table.metadata = table.metadata;
    raw_table.metadata.push_back("raw episodes: policy is the 1-based column index above");
    raw_table.columns = {axis, "policy", "run", "regret"};
    for (std::size_t p = 0; p < raw.points; ++p) {
      for (std::size_t k = 0; k < raw.policies; ++k) {
        const auto samples = raw.samples(p, k);
        for (std::size_t r = 0; r < samples.size(); ++r) {
          raw_table.rows.push_back({raw.coordinates[p], static_cast<double>(k + 1),
                                    static_cast<double>(r), samples[r]});
        }
      }
    }
    output.raw = std::move(raw_table);
  }

  if (summary) {
    char buf[64];
    *summary << spec.name << " (" << *spec.runs << " runs per point, mean +- 2SE)\n";
    std::snprintf(buf, sizeof buf, "%-10s", axis.c_str());
    *summary << buf;
    for (const auto& p : policies) {
      std::snprintf(buf, sizeof buf, "  %24s", p.label().c_str());
      *summary << buf;
    }
    *summary << '\n';
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof buf, "%-10g", row.coordinate);
      *summary << buf;
      for (const auto& s : row.per_policy) {
        std::snprintf(buf, sizeof buf, "  %13.3f +- %7.3f", s.mean, s.half_width);
        *summary << buf;
      }
      *summary << '\n';
    }
  }
  return output;
}

}  // namespace ocucb
