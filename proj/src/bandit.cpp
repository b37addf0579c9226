#include "ocucb/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ocucb/errors.hpp"

namespace ocucb {
namespace {

void validate_means(std::span<const double> means) {
  if (means.size() < 2) {
    throw InvalidInstance("a bandit needs at least two arms, got " + std::to_string(means.size()));
  }
  for (std::size_t i = 0; i < means.size(); ++i) {
    if (!std::isfinite(means[i])) {
      throw InvalidInstance("mean of arm " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

BanditInstance::BanditInstance(std::vector<double> means, double noise_scale)
    : means_(std::move(means)), noise_scale_(noise_scale) {
  validate_means(means_);
  if (!std::isfinite(noise_scale_) || noise_scale_ < 0.0) {
    throw InvalidInstance("noise scale must be finite and non-negative");
  }
}

BanditInstance BanditInstance::noiseless(std::vector<double> means) {
  return BanditInstance(std::move(means), 0.0);
}

GapVector compute_gaps(std::span<const double> means) {
  validate_means(means);
  const double best = *std::max_element(means.begin(), means.end());
  GapVector out;
  out.gaps.reserve(means.size());
  for (double m : means) out.gaps.push_back(best - m);
  return out;
}

GapVector compute_gaps(const BanditInstance& instance) { return compute_gaps(instance.means()); }

double pseudo_regret(const GapVector& gaps, std::span<const std::uint64_t> pulls) {
  if (pulls.size() != gaps.size()) {
    throw ContractError("pseudo_regret: " + std::to_string(pulls.size()) + " pull counts for " +
                        std::to_string(gaps.size()) + " gaps");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < pulls.size(); ++i) {
    total += gaps[i] * static_cast<double>(pulls[i]);
  }
  return total;
}

double pull(const BanditInstance& instance, std::size_t arm, RngStream& rng) {
  if (arm >= instance.arm_count()) {
    throw ContractError("arm " + std::to_string(arm) + " out of range for K = " +
                        std::to_string(instance.arm_count()));
  }
  const double z = rng.gaussian();
  return instance.means()[arm] + instance.noise_scale() * z;
}

PullStats::PullStats(std::size_t arms) : counts_(arms, 0), sums_(arms, 0.0) {}

double PullStats::mean(std::size_t arm) const {
  if (counts_[arm] == 0) throw ContractError("empirical mean of an unplayed arm");
  return sums_[arm] / static_cast<double>(counts_[arm]);
}

void PullStats::record(std::size_t arm, double reward) {
  if (arm >= counts_.size()) throw ContractError("record: arm out of range");
  ++counts_[arm];
  sums_[arm] += reward;
  ++t_;
}

}  // namespace ocucb
