#include "ocucb/lazy_index.hpp"

#include <algorithm>
#include <string>

#include "ocucb/errors.hpp"

namespace ocucb {
namespace {

bool heap_less(const StaleEntry& a, const StaleEntry& b) {
  return IndexValue{a.cached_value, a.arm} < IndexValue{b.cached_value, b.arm};
}

}  // namespace

StaleEntry refresh(const StaleEntry& entry, const PullStats& stats, const PolicyConfig& config) {
  if (entry.arm >= stats.arm_count()) throw ContractError("refresh: arm out of range");
  StaleEntry out = entry;
  out.cached_value = policy_index(config, stats, entry.arm);
  out.stamp = stats.t();
  out.count_at_stamp = stats.count(entry.arm);
  return out;
}

LazyArgmax::LazyArgmax(const PolicyConfig& config)
    : config_(config), time_invariant_(!index_depends_on_time(config.algorithm)) {
  if (!index_non_increasing_in_time(config.algorithm)) {
    throw UnsupportedPolicy("lazy selection needs an index that is non-increasing in t; " +
                            std::string(to_string(config.algorithm)) + " does not qualify");
  }
  heap_.reserve(config.arms);
}

bool LazyArgmax::is_fresh(const StaleEntry& entry, const PullStats& stats) const {
  return entry.count_at_stamp == stats.count(entry.arm) &&
         (time_invariant_ || entry.stamp == stats.t());
}

void LazyArgmax::push(const StaleEntry& entry) {
  heap_.push_back(entry);
  std::push_heap(heap_.begin(), heap_.end(), heap_less);
}

StaleEntry LazyArgmax::pop() {
  std::pop_heap(heap_.begin(), heap_.end(), heap_less);
  StaleEntry top = heap_.back();
  heap_.pop_back();
  return top;
}

StaleEntry LazyArgmax::refreshed(const StaleEntry& entry, const PullStats& stats) {
  ++refreshes_;
  return refresh(entry, stats, config_);
}

std::size_t LazyArgmax::select(const PullStats& stats) {
  const std::uint64_t t = stats.t();
  if (t > config_.horizon) {
    throw ContractError("lazy select: step " + std::to_string(t) + " is past the horizon");
  }
  const std::size_t arms = stats.arm_count();
  if (arms != config_.arms) throw ContractError("lazy select: arm count mismatch");
  if (t <= arms) return static_cast<std::size_t>(t - 1);

  if (!built_) {
    heap_.clear();
    for (std::size_t arm = 0; arm < arms; ++arm) push(refreshed(StaleEntry{arm}, stats));
    held_.reset();
    built_ = true;
  } else if (held_) {
    push(refreshed(*held_, stats));
    held_.reset();
  }

  for (;;) {
    StaleEntry top = pop();
    if (is_fresh(top, stats)) {
      held_ = top;
      return top.arm;
    }
    push(refreshed(top, stats));
  }
}

std::size_t lazy_select(LazyArgmax& heap, const PullStats& stats) { return heap.select(stats); }

}  // namespace ocucb
