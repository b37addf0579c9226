#include "ocucb/policies.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "ocucb/errors.hpp"

namespace ocucb {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kNames{{
    {Algorithm::UCB, "UCB"},
    {Algorithm::MOSS, "MOSS"},
    {Algorithm::OCUCB, "OCUCB"},
    {Algorithm::AOCUCB, "AOCUCB"},
    {Algorithm::ThompsonGaussian, "Thompson"},
}};

void require_played(std::uint64_t count, const char* who) {
  if (count == 0) {
    throw ContractError(std::string(who) + ": arm has not been played (count = 0)");
  }
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  if (name == "ThompsonGaussian" || name == "TS") return Algorithm::ThompsonGaussian;
  return std::nullopt;
}

std::string PolicyConfig::label() const {
  switch (algorithm) {
    case Algorithm::OCUCB:
      return "OCUCB(alpha=" + format_real(alpha) + ",psi=" + format_real(psi) + ")";
    default:
      return std::string(to_string(algorithm));
  }
}

std::vector<std::string> validate(const PolicyConfig& config) {
  if (!(config.alpha > 0.0) || !std::isfinite(config.alpha)) {
    throw std::invalid_argument("alpha must be a positive finite number");
  }
  if (!(config.psi > 0.0) || !std::isfinite(config.psi)) {
    throw std::invalid_argument("psi must be a positive finite number");
  }
  if (config.arms < 2) throw std::invalid_argument("a policy needs at least two arms");
  if (config.horizon == 0) throw std::invalid_argument("horizon must be positive");

  std::vector<std::string> warnings;
  if (config.algorithm == Algorithm::OCUCB && !config.in_provable_range()) {
    warnings.push_back(config.label() +
                       " is outside the provable range alpha > 2, psi >= 2");
  }
  return warnings;
}

double ocucb_index(double mean, std::uint64_t count, std::uint64_t t, const PolicyConfig& config) {
  require_played(count, "ocucb_index");
  const double ratio = config.psi * static_cast<double>(config.horizon) / static_cast<double>(t);
  const double confidence = std::log(std::max(1.0, ratio));
  return mean + std::sqrt(config.alpha / static_cast<double>(count) * confidence);
}

double aocucb_index(double mean, std::uint64_t count, double horizon) {
  require_played(count, "aocucb_index");
  const double c = static_cast<double>(count);
  return mean + std::sqrt(2.0 / c * std::log(std::max(1.0, horizon / c)));
}

double ucb_index(double mean, std::uint64_t count, double t) {
  require_played(count, "ucb_index");
  if (t < 1.0) throw ContractError("ucb_index: t must be at least 1");
  return mean + std::sqrt(2.0 / static_cast<double>(count) * std::log(t));
}

double moss_index(double mean, std::uint64_t count, double horizon, std::size_t arms) {
  require_played(count, "moss_index");
  const double c = static_cast<double>(count);
  const double ratio = horizon / (c * static_cast<double>(arms));
  return mean + std::sqrt(2.0 / c * std::log(std::max(1.0, ratio)));
}

double thompson_sample(double mean, std::uint64_t count, RngStream& rng, double scale) {
  require_played(count, "thompson_sample");
  const double z = rng.gaussian();
  return mean + scale * z / std::sqrt(static_cast<double>(count));
}

double policy_index(const PolicyConfig& config, const PullStats& stats, std::size_t arm) {
  const std::uint64_t count = stats.count(arm);
  require_played(count, "policy_index");
  const double mean = stats.mean(arm);
  const double n = static_cast<double>(config.horizon);
  switch (config.algorithm) {
    case Algorithm::OCUCB:
      return ocucb_index(mean, count, stats.t(), config);
    case Algorithm::AOCUCB:
      return aocucb_index(mean, count, n);
    case Algorithm::UCB:
      return ucb_index(mean, count, static_cast<double>(stats.t()));
    case Algorithm::MOSS:
      return moss_index(mean, count, n, config.arms);
    case Algorithm::ThompsonGaussian:
      break;
  }
  throw UnsupportedPolicy("Thompson sampling has no deterministic index");
}

bool index_non_increasing_in_time(Algorithm algorithm) {
  return algorithm == Algorithm::OCUCB || algorithm == Algorithm::MOSS ||
         algorithm == Algorithm::AOCUCB;
}

bool index_depends_on_time(Algorithm algorithm) {
  return algorithm == Algorithm::OCUCB || algorithm == Algorithm::UCB;
}

std::size_t select_arm(const PolicyConfig& config, const PullStats& stats, RngStream& rng) {
  const std::uint64_t t = stats.t();
  if (t > config.horizon) {
    throw ContractError("select_arm: step " + std::to_string(t) + " is past the horizon " +
                        std::to_string(config.horizon));
  }
  const std::size_t arms = stats.arm_count();
  if (t <= arms) return static_cast<std::size_t>(t - 1);

  IndexValue best{0.0, 0};
  for (std::size_t arm = 0; arm < arms; ++arm) {
    const double value = config.algorithm == Algorithm::ThompsonGaussian
                             ? thompson_sample(stats.mean(arm), stats.count(arm), rng)
                             : policy_index(config, stats, arm);
    const IndexValue candidate{value, arm};
    if (arm == 0 || best < candidate) best = candidate;
  }
  return best.arm;
}

}  // namespace ocucb
