#pragma once

#include <cstdint>
#include <string_view>

namespace flexisim {

// Deterministic random stream (xoshiro256** seeded through splitmix64).
// All randomness in a run flows from one root seed; subsystems obtain their
// own stream with fork(label), so the draw sequence of one subsystem never
// depends on how often another one draws.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double uniform();

    // Uniform in [lo, hi).
    double uniform(double lo, double hi);

    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n);

    // Standard normal via Box-Muller; mean 0, stddev 1.
    double gaussian();

    double gaussian(double mean, double sigma);

    // Independent stream derived from this stream's seed and a fixed label.
    // Forking does not consume draws from the parent.
    RandomStream fork(std::string_view label) const;

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
};

} // namespace flexisim
