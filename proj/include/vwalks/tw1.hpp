#pragma once

#include <cstdint>
#include <vector>

#include "vwalks/stats.hpp"

namespace vwalks {

// Ai(x) for |x| <= 15, at least 1e-10 relative accuracy on [-10, 10].
// Maclaurin series in 50-digit arithmetic for |x| <= 8 (the series loses up
// to ~15 digits to cancellation there), Poincare asymptotic expansions in
// double beyond (optimal truncation error < 1e-13 at the switchover).
double airy_ai(double x);
double airy_ai_prime(double x);

// F1 = GOE largest-eigenvalue limit CDF, tabulated on a uniform grid.
// Built from the Hastings-McLeod solution of q'' = s q + 2 q^3 integrated
// backward from s_max with Airy boundary data, accumulating
//   I2(x) = int_x^inf (s-x) q^2 ds   and   I1(x) = int_x^inf q ds,
// then F2 = exp(-I2) and F1 = sqrt(F2) exp(-I1/2).
struct F1Table {
    std::vector<double> grid;  // ascending
    std::vector<double> f1;
    std::vector<double> f2;

    // integration metadata
    double abs_tol = 0.0;
    double s_max = 0.0;
    double max_step = 0.0;

    struct Query {
        double value;
        bool clamped;  // x fell outside the grid; value was clamped to 0 or 1
    };

    // Monotone (piecewise-linear) interpolation; out-of-grid clamps to {0,1}.
    Query f1_query(double x) const;
    double f1_at(double x) const { return f1_query(x).value; }
};

// Dormand-Prince 4(5) with absolute error control; steps never exceed
// max_step and always land exactly on grid points. Throws on ODE blow-up,
// reporting the divergence location.
F1Table build_f1_table(double x_min = -6.0, double x_max = 5.0, double dx = 0.02,
                       double abs_tol = 1e-10, double s_max = 8.0, double max_step = 0.02);

// Empirical CDF of the scaled largest eigenvalue of GOE samples: real
// symmetric dim x dim matrices with diagonal variance 1 and off-diagonal
// variance 1/2, eigenvalue scaled as (lambda - sqrt(2 dim)) sqrt(2) dim^{1/6}.
EmpiricalCdf goe_mc_cdf(std::int64_t dim, std::int64_t n_samples, std::uint64_t seed,
                        int jobs = 1);

}  // namespace vwalks
