#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ocucb/bandit.hpp"

namespace ocucb {

/// Problem hardness.
///   total       = sum over suboptimal i of gap_i^-2
///   per_arm[i]  = sum over all j of min(gap_i^-2, gap_j^-2) for suboptimal i,
///                 where a zero gap_j contributes gap_i^-2; 0 for best arms.
struct HardnessSummary {
  double total = 0.0;
  std::vector<double> per_arm;
};

/// Throws UndefinedHardness when every gap is zero.
HardnessSummary hardness(const GapVector& gaps);

/// Instance i (1-based) has mean gap at arm 1, 2 * gap at arm i and 0
/// elsewhere; for i = 1 the arm-1 case wins, giving (gap, 0, ..., 0).
std::vector<BanditInstance> lower_bound_family(std::size_t arms, double gap);

struct InstanceWithHorizon {
  BanditInstance instance;
  std::uint64_t horizon;
};

/// Means (1/2, 1/2 - 1/K, 0, ..., 0) with horizon K^2. Requires K >= 3.
InstanceWithHorizon conjecture_counterexample(std::size_t arms);

/// Means (0, -1/(4K), -1, ..., -1) with horizon K^3. Requires K >= 3.
InstanceWithHorizon moss_failure_instance(std::size_t arms);

/// means[i] = -i / K for 0-based i.
BanditInstance uniform_arms_instance(std::size_t arms);

/// Instance with one best arm at 0 and every other arm at -gap.
BanditInstance equal_gap_instance(std::size_t arms, double gap);

struct ConcentrationEstimate {
  double empirical = 0.0;       // fraction of trials whose running sum reached epsilon
  double bound = 0.0;           // exp(-epsilon^2 / (2 n))
  double standard_error = 0.0;  // sqrt(p (1 - p) / trials)
  std::size_t trials = 0;
};

/// Estimates P(max_{t <= n} S_t >= epsilon) for Gaussian random walks S_t and
/// compares it with the maximal-inequality bound. Trial k draws from stream
/// (stream_point, k), so the estimate is independent of the thread count.
ConcentrationEstimate maximal_inequality_check(std::uint64_t steps, double epsilon,
                                               std::size_t trials, std::uint64_t seed,
                                               std::size_t threads = 1,
                                               std::uint64_t stream_point = 0);

}  // namespace ocucb
