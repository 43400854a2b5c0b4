#pragma once

#include <cstdint>
#include <functional>

namespace ramsey {

/// splitmix64 generator. The state is seeded from (seed, stream) so that
/// every (seed, stream) pair gives a fixed, platform-independent sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Samples are cut into fixed chunks of `chunk` consecutive indices; chunk c
/// draws from Rng(seed, c). `body(rng, begin, end)` runs once per chunk on
/// one of `threads` workers, so results depend only on the seed as long as
/// `body` writes to per-sample slots or accumulates order-independently.
void for_each_chunk(std::uint64_t samples, std::uint64_t seed, int threads,
                    const std::function<void(Rng&, std::uint64_t, std::uint64_t)>& body,
                    std::uint64_t chunk = 1024);

}  // namespace ramsey
