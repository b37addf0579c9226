#include "ocucb/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "ocucb/errors.hpp"
#include "ocucb/lazy_index.hpp"

namespace ocucb {

EpisodeResult run_episode(const BanditInstance& instance, const PolicyConfig& config,
                          RngStream stream, const RunOptions& options) {
  const std::size_t arms = instance.arm_count();
  if (config.arms != arms) {
    throw ContractError("policy configured for " + std::to_string(config.arms) +
                        " arms, instance has " + std::to_string(arms));
  }
  if (config.horizon < arms) {
    throw InvalidHorizon("horizon " + std::to_string(config.horizon) +
                         " is shorter than the arm count " + std::to_string(arms));
  }

  EpisodeResult result;
  result.stream = stream.id();
  if (options.record_actions) result.actions.reserve(config.horizon);

  PullStats stats(arms);
  const bool lazy =
      options.scheduler == Scheduler::Lazy && index_non_increasing_in_time(config.algorithm);

  auto play = [&](auto&& choose) {
    for (std::uint64_t step = 1; step <= config.horizon; ++step) {
      const std::size_t arm = choose();
      stats.record(arm, pull(instance, arm, stream));
      if (options.record_actions) result.actions.push_back(static_cast<std::uint32_t>(arm));
    }
  };

  if (lazy) {
    LazyArgmax selector(config);
    play([&] { return selector.select(stats); });
    result.index_refreshes = selector.refreshes();
  } else {
    play([&] { return select_arm(config, stats, stream); });
    if (config.algorithm != Algorithm::ThompsonGaussian && config.horizon > arms) {
      result.index_refreshes = (config.horizon - arms) * arms;
    }
  }

  result.pulls.assign(stats.counts().begin(), stats.counts().end());
  result.pseudo_regret = pseudo_regret(compute_gaps(instance), result.pulls);
  return result;
}

PolicySummary summarize(std::span<const double> samples) {
  PolicySummary out;
  out.runs = samples.size();
  if (samples.empty()) return out;
  double sum = 0.0;
  for (double x : samples) sum += x;
  out.mean = sum / static_cast<double>(samples.size());
  if (samples.size() < 2) return out;
  double squares = 0.0;
  for (double x : samples) squares += (x - out.mean) * (x - out.mean);
  const double n = static_cast<double>(samples.size());
  const double sd = std::sqrt(squares / (n - 1.0));
  out.half_width = 2.0 * sd / std::sqrt(n);
  return out;
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count || failed.load(std::memory_order_relaxed)) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

RawResults monte_carlo_raw(const ExperimentGrid& grid, const MonteCarloOptions& options) {
  if (grid.runs < 2) throw std::invalid_argument("an experiment needs at least two runs per point");
  if (grid.points.empty()) throw std::invalid_argument("an experiment needs at least one point");
  if (grid.policies.empty()) throw std::invalid_argument("an experiment needs at least one policy");
  if (options.threads == 0) throw std::invalid_argument("thread count must be at least 1");

  // Resolve per-point configs and validate before spending any time.
  std::vector<PolicyConfig> configs;
  configs.reserve(grid.points.size() * grid.policies.size());
  for (const GridPoint& point : grid.points) {
    if (point.horizon < point.instance.arm_count()) {
      throw InvalidHorizon("horizon " + std::to_string(point.horizon) +
                           " is shorter than the arm count at coordinate " +
                           std::to_string(point.coordinate));
    }
    for (PolicyConfig config : grid.policies) {
      config.horizon = point.horizon;
      config.arms = point.instance.arm_count();
      validate(config);
      configs.push_back(config);
    }
  }

  RawResults raw;
  raw.points = grid.points.size();
  raw.policies = grid.policies.size();
  raw.runs = grid.runs;
  for (const GridPoint& point : grid.points) raw.coordinates.push_back(point.coordinate);
  raw.regrets.assign(raw.points * raw.policies * raw.runs, 0.0);

  const RunOptions run_options{options.scheduler, false};
  parallel_for(raw.regrets.size(), options.threads, [&](std::size_t slot) {
    const std::size_t run = slot % raw.runs;
    const std::size_t cell = slot / raw.runs;
    const std::size_t point = cell / raw.policies;
    const RngStream stream(grid.master_seed, StreamId{point, run});
    raw.regrets[slot] =
        run_episode(grid.points[point].instance, configs[cell], stream, run_options).pseudo_regret;
  });
  return raw;
}

std::vector<AggregateResult> aggregate(const RawResults& raw) {
  std::vector<AggregateResult> out;
  out.reserve(raw.points);
  for (std::size_t p = 0; p < raw.points; ++p) {
    AggregateResult row;
    row.coordinate = raw.coordinates[p];
    for (std::size_t k = 0; k < raw.policies; ++k) row.per_policy.push_back(summarize(raw.samples(p, k)));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<AggregateResult> monte_carlo(const ExperimentGrid& grid,
                                         const MonteCarloOptions& options) {
  return aggregate(monte_carlo_raw(grid, options));
}

}  // namespace ocucb
