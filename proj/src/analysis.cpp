#include "ocucb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ocucb/errors.hpp"
#include "ocucb/simulation.hpp"

namespace ocucb {

HardnessSummary hardness(const GapVector& gaps) {
  const auto& g = gaps.gaps;
  if (std::none_of(g.begin(), g.end(), [](double d) { return d > 0.0; })) {
    throw UndefinedHardness("hardness is undefined when every gap is zero");
  }
  HardnessSummary out;
  out.per_arm.assign(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] <= 0.0) continue;
    const double own = 1.0 / (g[i] * g[i]);
    out.total += own;
    double sum = 0.0;
    for (double other : g) {
      sum += other > 0.0 ? std::min(own, 1.0 / (other * other)) : own;
    }
    out.per_arm[i] = sum;
  }
  return out;
}

std::vector<BanditInstance> lower_bound_family(std::size_t arms, double gap) {
  if (arms < 2) throw InvalidInstance("lower-bound family needs K >= 2");
  if (!(gap > 0.0) || !std::isfinite(gap)) throw InvalidInstance("lower-bound family needs gap > 0");
  std::vector<BanditInstance> family;
  family.reserve(arms);
  for (std::size_t i = 0; i < arms; ++i) {
    std::vector<double> means(arms, 0.0);
    if (i != 0) means[i] = 2.0 * gap;
    means[0] = gap;
    family.emplace_back(std::move(means));
  }
  return family;
}

InstanceWithHorizon conjecture_counterexample(std::size_t arms) {
  if (arms < 3) throw InvalidInstance("conjecture counterexample needs K >= 3");
  const double k = static_cast<double>(arms);
  std::vector<double> means(arms, 0.0);
  means[0] = 0.5;
  means[1] = 0.5 - 1.0 / k;
  return {BanditInstance(std::move(means)), static_cast<std::uint64_t>(arms) * arms};
}

InstanceWithHorizon moss_failure_instance(std::size_t arms) {
  if (arms < 3) throw InvalidInstance("MOSS failure instance needs K >= 3");
  const double k = static_cast<double>(arms);
  std::vector<double> means(arms, -1.0);
  means[0] = 0.0;
  means[1] = -1.0 / (4.0 * k);
  const auto a = static_cast<std::uint64_t>(arms);
  return {BanditInstance(std::move(means)), a * a * a};
}

BanditInstance uniform_arms_instance(std::size_t arms) {
  if (arms < 2) throw InvalidInstance("uniform arms instance needs K >= 2");
  std::vector<double> means(arms);
  for (std::size_t i = 0; i < arms; ++i) {
    means[i] = -static_cast<double>(i) / static_cast<double>(arms);
  }
  return BanditInstance(std::move(means));
}

BanditInstance equal_gap_instance(std::size_t arms, double gap) {
  if (arms < 2) throw InvalidInstance("equal-gap instance needs K >= 2");
  std::vector<double> means(arms, -gap);
  means[0] = 0.0;
  return BanditInstance(std::move(means));
}

ConcentrationEstimate maximal_inequality_check(std::uint64_t steps, double epsilon,
                                               std::size_t trials, std::uint64_t seed,
                                               std::size_t threads, std::uint64_t stream_point) {
  if (steps == 0) throw std::invalid_argument("maximal inequality check needs n >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("maximal inequality check needs epsilon > 0");
  if (trials == 0) throw std::invalid_argument("maximal inequality check needs trials > 0");

  std::vector<unsigned char> hit(trials, 0);
  parallel_for(trials, threads, [&](std::size_t trial) {
    RngStream rng(seed, StreamId{stream_point, trial});
    double sum = 0.0;
    for (std::uint64_t s = 0; s < steps; ++s) {
      sum += rng.gaussian();
      if (sum >= epsilon) {
        hit[trial] = 1;
        return;
      }
    }
  });

  ConcentrationEstimate out;
  out.trials = trials;
  std::size_t hits = 0;
  for (unsigned char h : hit) hits += h;
  const double n = static_cast<double>(trials);
  out.empirical = static_cast<double>(hits) / n;
  out.bound = std::exp(-epsilon * epsilon / (2.0 * static_cast<double>(steps)));
  out.standard_error = std::sqrt(out.empirical * (1.0 - out.empirical) / n);
  return out;
}

}  // namespace ocucb
