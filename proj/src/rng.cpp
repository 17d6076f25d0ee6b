#include "vwalks/rng.hpp"

#include <cmath>

#include "vwalks/errors.hpp"

namespace vwalks {

std::uint64_t Rng::splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t derived = splitmix64(s);
    for (std::uint64_t k = 0; k < stream; ++k) derived = splitmix64(s);
    engine_.seed(derived);
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw InvalidInput("uniform_below needs bound >= 1");
    // rejection below the largest multiple of bound
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    // Box-Muller; u kept away from 0
    const double u = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    cached_normal_ = r * std::sin(6.283185307179586476925286766559 * v);
    has_cached_normal_ = true;
    return r * std::cos(6.283185307179586476925286766559 * v);
}

}  // namespace vwalks
