#pragma once

#include <cstdint>
#include <random>

namespace vwalks {

// Deterministic 64-bit generator with documented seeding: stream k of seed s
// feeds mt19937_64 with the k-th output of a SplitMix64 run started at s.
// Parallel workers use streams 0..jobs-1, so results are reproducible given
// (seed, worker count). Distribution mapping is hand-rolled (rejection for
// integers, Box-Muller for normals) so batches do not depend on the standard
// library's unspecified algorithms.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform over {0, 1, ..., bound-1}; bound >= 1. Unbiased via rejection.
    std::uint64_t uniform_below(std::uint64_t bound);

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01();

    // Standard normal.
    double normal();

    static std::uint64_t splitmix64(std::uint64_t& state);

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace vwalks
