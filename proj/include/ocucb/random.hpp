#pragma once

#include <array>
#include <cstdint>

namespace ocucb {

/// Identifies one independent random stream inside an experiment.
struct StreamId {
  std::uint64_t point = 0;
  std::uint64_t run = 0;

  friend bool operator==(const StreamId&, const StreamId&) = default;
};

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based random stream keyed by (master seed, point, run).
///
/// The master seed is the Philox key; the point and run indices occupy the
/// upper two counter words and the lower two words count blocks. Streams with
/// distinct ids therefore walk disjoint counter ranges, and the values drawn
/// depend only on (seed, id, draw index), never on which thread runs them.
///
/// Gaussians use the Box-Muller transform; each uniform pair yields two
/// variates and the second is returned by the following call.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, StreamId id);

  std::uint64_t master_seed() const { return seed_; }
  StreamId id() const { return id_; }

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on (0, 1], 53-bit resolution.
  double uniform();

  /// Standard normal variate.
  double gaussian();

 private:
  void refill();

  std::uint64_t seed_;
  StreamId id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned used_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ocucb
