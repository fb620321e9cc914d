#include "mpcodes/rng.hpp"

#include <limits>

#include "mpcodes/errors.hpp"

namespace mpcodes {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

CounterRng CounterRng::stream(std::uint64_t master, std::uint64_t stream_id) {
  return CounterRng(mix64(master + kGamma * (stream_id + 1)));
}

std::uint64_t CounterRng::next() { return mix64(key_ + kGamma * (++counter_)); }

std::uint32_t CounterRng::next_below(std::uint32_t bound) {
  if (bound == 0) throw UsageError("CounterRng::next_below: bound must be positive");
  if ((bound & (bound - 1)) == 0) return static_cast<std::uint32_t>(next() & (bound - 1));
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Accept only below the largest multiple of `bound`, so the fold is exact.
  const std::uint64_t rem = (kMax % bound + 1) % bound;
  const std::uint64_t limit = kMax - rem;
  std::uint64_t r = next();
  while (r > limit) r = next();
  return static_cast<std::uint32_t>(r % bound);
}

}  // namespace mpcodes
