#include "vwalks/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "vwalks/errors.hpp"
#include "vwalks/lds.hpp"

namespace vwalks {

Involution sample_involution(std::int64_t N, Rng& rng) {
    if (N < 1) throw InvalidInput("sample_involution needs N >= 1");
    std::vector<std::int64_t> remaining(static_cast<std::size_t>(2 * N));
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<std::int64_t> sigma(static_cast<std::size_t>(2 * N), 0);
    while (!remaining.empty()) {
        const std::int64_t a = remaining.back();
        remaining.pop_back();
        const std::uint64_t r = rng.uniform_below(remaining.size());
        const std::int64_t b = remaining[r];
        remaining[r] = remaining.back();
        remaining.pop_back();
        sigma[static_cast<std::size_t>(a - 1)] = b;
        sigma[static_cast<std::size_t>(b - 1)] = a;
    }
    Involution s;
    s.sigma_ = std::move(sigma);
    return s;
}

std::int64_t sample_L(std::int64_t N, Rng& rng) {
    const Involution s = sample_involution(N, rng);
    return lds_involution(s) / 2;
}

double chi(std::int64_t N, std::int64_t L) {
    if (N < 1) throw InvalidInput("chi needs N >= 1");
    const double two_n = static_cast<double>(2 * N);
    return (static_cast<double>(L) - std::sqrt(two_n)) / (0.5 * std::pow(two_n, 1.0 / 6.0));
}

EmpiricalCdf EmpiricalCdf::from_samples(std::vector<double> samples) {
    if (samples.empty()) throw InvalidInput("empirical CDF needs at least one sample");
    std::sort(samples.begin(), samples.end());
    EmpiricalCdf cdf;
    cdf.total_ = static_cast<std::int64_t>(samples.size());
    const double inv = 1.0 / static_cast<double>(samples.size());
    std::size_t i = 0;
    while (i < samples.size()) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;
        cdf.points_.push_back(samples[i]);
        cdf.cum_.push_back(static_cast<double>(j) * inv);
        i = j;
    }
    if (!cdf.cum_.empty()) cdf.cum_.back() = 1.0;
    return cdf;
}

double EmpiricalCdf::value_at(double x) const {
    const auto it = std::upper_bound(points_.begin(), points_.end(), x);
    if (it == points_.begin()) return 0.0;
    return cum_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

double ks_distance(const EmpiricalCdf& a, const std::function<double(double)>& cdf) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.jump_points().size(); ++i) {
        const double f = cdf(a.jump_points()[i]);
        d = std::max(d, std::abs(a.height_after(i) - f));
        d = std::max(d, std::abs(f - a.height_before(i)));
    }
    return d;
}

SampleBatch sample_batch(std::int64_t N, std::int64_t count, std::uint64_t seed, int jobs) {
    if (count < 0) throw InvalidInput("sample count must be nonnegative");
    if (jobs < 1) throw InvalidInput("jobs must be >= 1");
    SampleBatch batch;
    batch.N = N;
    batch.seed = seed;
    batch.values.resize(static_cast<std::size_t>(count));
    batch.chis.resize(static_cast<std::size_t>(count));

    const auto run_block = [&](int worker, std::int64_t lo, std::int64_t hi) {
        Rng rng(seed, static_cast<std::uint64_t>(worker));
        for (std::int64_t i = lo; i < hi; ++i) {
            const std::int64_t L = sample_L(N, rng);
            batch.values[static_cast<std::size_t>(i)] = L;
            batch.chis[static_cast<std::size_t>(i)] = chi(N, L);
        }
    };

    if (jobs == 1) {
        run_block(0, 0, count);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int k = 0; k < jobs; ++k) {
            const std::int64_t lo = count * k / jobs;
            const std::int64_t hi = count * (k + 1) / jobs;
            workers.emplace_back(run_block, k, lo, hi);
        }
        for (auto& t : workers) t.join();
    }
    return batch;
}

}  // namespace vwalks
