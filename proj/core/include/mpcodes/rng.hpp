#pragma once

#include <cstdint>

namespace mpcodes {

/// SplitMix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based deterministic generator.
///
/// Output i of a stream is a pure function of (key, i): the i-th draw can be
/// reproduced without generating its predecessors, and draws never depend on
/// thread scheduling. Streams are split by hashing (master, stream_id); the
/// samplers use one stream per matrix row and one per Monte Carlo trial.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  /// Derive the sub-stream `stream_id` of a master seed.
  static CounterRng stream(std::uint64_t master, std::uint64_t stream_id);

  std::uint64_t next();

  /// Unbiased draw in [0, bound) by rejection; bound >= 1.
  std::uint32_t next_below(std::uint32_t bound);

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace mpcodes
