#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ocucb/bandit.hpp"
#include "ocucb/policies.hpp"
#include "ocucb/random.hpp"

namespace ocucb {

enum class Scheduler {
  Naive,  // O(K) argmax every step
  Lazy,   // LazyArgmax where the policy allows it, naive otherwise
};

struct RunOptions {
  Scheduler scheduler = Scheduler::Lazy;
  bool record_actions = false;
};

/// Plays one episode of config.horizon steps. Throws InvalidHorizon if the
/// horizon is shorter than the arm count.
EpisodeResult run_episode(const BanditInstance& instance, const PolicyConfig& config,
                          RngStream stream, const RunOptions& options = {});

struct GridPoint {
  double coordinate = 0.0;
  BanditInstance instance;
  std::uint64_t horizon = 0;
};

/// Points x policies x runs. Each policy's horizon and arm count are taken
/// from the point it is run on.
struct ExperimentGrid {
  std::vector<GridPoint> points;
  std::vector<PolicyConfig> policies;
  std::size_t runs = 0;
  std::uint64_t master_seed = 0;
};

struct MonteCarloOptions {
  std::size_t threads = 1;
  Scheduler scheduler = Scheduler::Lazy;
};

struct PolicySummary {
  double mean = 0.0;
  double half_width = 0.0;  // two standard errors
  std::size_t runs = 0;
};

struct AggregateResult {
  double coordinate = 0.0;
  std::vector<PolicySummary> per_policy;
};

/// Raw pseudo-regret of every episode, laid out [point][policy][run].
struct RawResults {
  std::size_t points = 0;
  std::size_t policies = 0;
  std::size_t runs = 0;
  std::vector<double> coordinates;
  std::vector<double> regrets;

  std::span<const double> samples(std::size_t point, std::size_t policy) const {
    return std::span<const double>(regrets).subspan((point * policies + policy) * runs, runs);
  }
};

/// Sample mean and two standard errors (N - 1 denominator), summed in order.
PolicySummary summarize(std::span<const double> samples);

/// Calls body(i) for i in [0, count) on up to `threads` workers. Indices are
/// handed out dynamically; the first exception thrown is rethrown.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

/// Runs every (point, policy, run) episode. Run r of point p uses stream
/// (p, r) for every policy, so policies see common random numbers.
RawResults monte_carlo_raw(const ExperimentGrid& grid, const MonteCarloOptions& options = {});

std::vector<AggregateResult> aggregate(const RawResults& raw);

std::vector<AggregateResult> monte_carlo(const ExperimentGrid& grid,
                                         const MonteCarloOptions& options = {});

}  // namespace ocucb
