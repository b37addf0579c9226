#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ocucb/random.hpp"

namespace ocucb {

/// A K-armed Gaussian bandit: pulling arm i returns means[i] + noise_scale * z
/// with z standard normal. noise_scale is 1 except in noiseless test setups.
class BanditInstance {
 public:
  explicit BanditInstance(std::vector<double> means, double noise_scale = 1.0);

  /// Same means, rewards without noise.
  static BanditInstance noiseless(std::vector<double> means);

  std::span<const double> means() const { return means_; }
  std::size_t arm_count() const { return means_.size(); }
  double noise_scale() const { return noise_scale_; }

 private:
  std::vector<double> means_;
  double noise_scale_;
};

/// gaps[i] = max_j means[j] - means[i]. Every best arm has gap exactly 0.
struct GapVector {
  std::vector<double> gaps;

  std::size_t size() const { return gaps.size(); }
  double operator[](std::size_t i) const { return gaps[i]; }
};

GapVector compute_gaps(std::span<const double> means);
GapVector compute_gaps(const BanditInstance& instance);

/// Sum of gaps[i] * pulls[i].
double pseudo_regret(const GapVector& gaps, std::span<const std::uint64_t> pulls);

double pull(const BanditInstance& instance, std::size_t arm, RngStream& rng);

/// Per-arm counts and reward sums at the start of step t (1-based).
/// Counts exclude step t itself, so sum(counts) == t - 1 always.
class PullStats {
 public:
  explicit PullStats(std::size_t arms);

  std::uint64_t t() const { return t_; }
  std::size_t arm_count() const { return counts_.size(); }
  std::uint64_t count(std::size_t arm) const { return counts_[arm]; }
  std::span<const std::uint64_t> counts() const { return counts_; }
  double reward_sum(std::size_t arm) const { return sums_[arm]; }

  /// Empirical mean; requires count(arm) > 0.
  double mean(std::size_t arm) const;

  /// Records the outcome of step t and advances to t + 1.
  void record(std::size_t arm, double reward);

 private:
  std::uint64_t t_ = 1;
  std::vector<std::uint64_t> counts_;
  std::vector<double> sums_;
};

struct EpisodeResult {
  std::vector<std::uint64_t> pulls;
  double pseudo_regret = 0.0;
  StreamId stream;
  // Filled only when requested by the runner.
  std::vector<std::uint32_t> actions;
  std::uint64_t index_refreshes = 0;
};

}  // namespace ocucb
