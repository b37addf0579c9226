#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocucb/bandit.hpp"
#include "ocucb/random.hpp"

namespace ocucb {

enum class Algorithm { UCB, MOSS, OCUCB, AOCUCB, ThompsonGaussian };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct PolicyConfig {
  Algorithm algorithm = Algorithm::OCUCB;
  double alpha = 3.0;
  double psi = 2.0;
  std::uint64_t horizon = 0;
  std::size_t arms = 0;

  /// alpha > 2 and psi >= 2, the range covered by the regret guarantees.
  bool in_provable_range() const { return alpha > 2.0 && psi >= 2.0; }

  /// Short whitespace-free label, e.g. "OCUCB(alpha=3,psi=2)".
  std::string label() const;
};

/// Throws std::invalid_argument for unusable parameters (non-positive alpha or
/// psi, fewer than two arms, zero horizon). Returns human-readable warnings for
/// parameters outside the provable range; those are legal.
std::vector<std::string> validate(const PolicyConfig& config);

/// Arm and index value, ordered by value then by lower arm index.
struct IndexValue {
  double value;
  std::size_t arm;

  friend bool operator<(const IndexValue& a, const IndexValue& b) {
    return a.value < b.value || (a.value == b.value && a.arm > b.arm);
  }
};

/// mean + sqrt(alpha / count * log(max(1, psi * n / t))).
double ocucb_index(double mean, std::uint64_t count, std::uint64_t t, const PolicyConfig& config);

/// mean + sqrt(2 / count * log(n / count)). The horizon is taken as real so
/// that non-integer values can be probed in tests.
double aocucb_index(double mean, std::uint64_t count, double horizon);

/// mean + sqrt(2 / count * log t).
double ucb_index(double mean, std::uint64_t count, double t);

/// mean + sqrt(2 / count * log(max(1, n / (count * K)))).
double moss_index(double mean, std::uint64_t count, double horizon, std::size_t arms);

/// Posterior draw under a flat Gaussian prior: mean + scale * z / sqrt(count).
/// scale = 0 gives a noiseless hook for tests.
double thompson_sample(double mean, std::uint64_t count, RngStream& rng, double scale = 1.0);

/// Index of one arm under a deterministic index policy at the current stats.
/// Both the naive and the lazy selector go through this function.
double policy_index(const PolicyConfig& config, const PullStats& stats, std::size_t arm);

/// True if the index of an arm never increases while its statistics are fixed.
bool index_non_increasing_in_time(Algorithm algorithm);

/// True if the index depends on t at all.
bool index_depends_on_time(Algorithm algorithm);

/// Chooses the arm for step stats.t(). Steps 1..K play each arm once in
/// order; afterwards the arm with the largest index (or Thompson sample) wins,
/// ties going to the lowest arm index. Thompson draws one Gaussian per arm,
/// in arm order.
std::size_t select_arm(const PolicyConfig& config, const PullStats& stats, RngStream& rng);

}  // namespace ocucb
