#pragma once

#include <cstdint>

namespace clustersim {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic per-trial random stream. The substream for trial t depends
// only on (seed, t): state0 = mix64(mix64(seed) + (t + 1) * golden ratio.
// Draws are splitmix64 outputs; uniforms take the top 53 bits. This
// construction is part of the reproducibility contract and must stay stable.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t trial)
        : state_(mix64(mix64(seed) + (trial + 1) * 0x9E3779B97F4A7C15ULL)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

  private:
    std::uint64_t state_;
};

} // namespace clustersim
