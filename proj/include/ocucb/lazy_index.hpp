#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ocucb/bandit.hpp"
#include "ocucb/policies.hpp"

namespace ocucb {

/// A possibly stale index value for one arm.
struct StaleEntry {
  std::size_t arm = 0;
  double cached_value = 0.0;
  std::uint64_t stamp = 0;
  std::uint64_t count_at_stamp = 0;
};

/// Recomputes the entry's index at the current stats.
StaleEntry refresh(const StaleEntry& entry, const PullStats& stats, const PolicyConfig& config);

/// Argmax over arms for index policies whose index cannot grow while an arm
/// is not played (OCUCB, MOSS, AOCUCB).
///
/// Every arm not chosen last step sits in a max-heap keyed by its cached
/// index, which upper-bounds its current index. Selection refreshes the heap
/// top until the top is exact; an exact top dominates every upper bound below
/// it, so it is the true argmax under the (value, lowest arm) order. The arm
/// returned is held out of the heap and re-inserted with fresh statistics on
/// the next call, since a pull can raise its empirical mean.
class LazyArgmax {
 public:
  /// Throws UnsupportedPolicy for UCB and Thompson sampling.
  explicit LazyArgmax(const PolicyConfig& config);

  /// Same contract as select_arm for the configured policy.
  std::size_t select(const PullStats& stats);

  /// Index evaluations performed so far.
  std::uint64_t refreshes() const { return refreshes_; }

  const PolicyConfig& config() const { return config_; }

 private:
  bool is_fresh(const StaleEntry& entry, const PullStats& stats) const;
  void push(const StaleEntry& entry);
  StaleEntry pop();
  StaleEntry refreshed(const StaleEntry& entry, const PullStats& stats);

  PolicyConfig config_;
  bool time_invariant_;
  std::vector<StaleEntry> heap_;
  std::optional<StaleEntry> held_;
  bool built_ = false;
  std::uint64_t refreshes_ = 0;
};

/// One step of lazy selection: free-function spelling of LazyArgmax::select.
std::size_t lazy_select(LazyArgmax& heap, const PullStats& stats);

}  // namespace ocucb
