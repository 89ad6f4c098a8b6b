#pragma once

#include <cstdint>
#include <random>

namespace resusrl {

// splitmix64 finalizer; turns (master seed, stream id) into independent
// engine seeds so concurrent runs never share a stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_id) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream_id + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream ids used by the pipeline. Documented in the README; changing one
// changes every artifact downstream of it.
namespace stream {
inline constexpr std::uint64_t kTrain = 1;
inline constexpr std::uint64_t kEvalRlClean = 2;
inline constexpr std::uint64_t kEvalRlNoise = 3;
inline constexpr std::uint64_t kEvalPidClean = 4;
inline constexpr std::uint64_t kEvalPidNoise = 5;
inline constexpr std::uint64_t kTuneBase = 1000;    // + candidate index
inline constexpr std::uint64_t kSweepBase = 100000; // + run index
} // namespace stream

// Deterministic uniform source. Every draw consumes exactly one engine
// step, so callers can reason about stream alignment.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1). One engine step.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi). One engine step.
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). One engine step.
  int uniform_int(int n) {
    const int i = static_cast<int>(uniform01() * n);
    return i < n ? i : n - 1;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace resusrl
