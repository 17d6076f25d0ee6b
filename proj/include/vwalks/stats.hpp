#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vwalks/bijection.hpp"
#include "vwalks/rng.hpp"

namespace vwalks {

// Uniform over all (2N-1)!! fixed-point-free involutions: repeatedly pair one
// remaining element with a uniform choice among the others.
Involution sample_involution(std::int64_t N, Rng& rng);

// L = lds(sigma word)/2; by the bijection, distributed as the rightmost
// walker's maximum displacement in the second configuration class.
std::int64_t sample_L(std::int64_t N, Rng& rng);

// chi_N = (L - sqrt(2N)) / ((1/2) (2N)^{1/6}).
double chi(std::int64_t N, std::int64_t L);

// Right-continuous step function built from samples.
class EmpiricalCdf {
public:
    static EmpiricalCdf from_samples(std::vector<double> samples);

    double value_at(double x) const;
    std::int64_t sample_count() const { return total_; }

    const std::vector<double>& jump_points() const { return points_; }
    // Cumulative height at and after jump i.
    double height_after(std::size_t i) const { return cum_[i]; }
    double height_before(std::size_t i) const { return i == 0 ? 0.0 : cum_[i - 1]; }

private:
    std::vector<double> points_;  // sorted, distinct
    std::vector<double> cum_;
    std::int64_t total_ = 0;
};

// sup-norm distance against a reference CDF, evaluated at the sample jump
// points with both one-sided gaps.
double ks_distance(const EmpiricalCdf& a, const std::function<double(double)>& cdf);

struct SampleBatch {
    std::int64_t N = 0;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> values;  // L per sample
    std::vector<double> chis;          // chi(N, L) per sample
};

// Draws `count` samples of L_N. Workers k = 0..jobs-1 use Rng(seed, k) on
// contiguous index blocks, so output is a deterministic function of
// (N, count, seed, jobs).
SampleBatch sample_batch(std::int64_t N, std::int64_t count, std::uint64_t seed, int jobs = 1);

}  // namespace vwalks
