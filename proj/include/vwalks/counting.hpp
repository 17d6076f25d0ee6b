#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vwalks/bigint.hpp"

namespace vwalks {

enum class CountMethod { Brute, WalkDP, Determinant, Symmetric, Rains };

const char* to_string(CountMethod m);
CountMethod count_method_from_string(const std::string& name);

struct CountResult {
    BigInt value;
    CountMethod method;
};

// Start and end position vectors for p walkers: strictly increasing, >= 1.
struct Endpoints {
    std::vector<std::int64_t> start;
    std::vector<std::int64_t> end;

    static Endpoints checked(std::vector<std::int64_t> start, std::vector<std::int64_t> end);

    std::int64_t walker_count() const { return static_cast<std::int64_t>(start.size()); }
};

// f_{Np}: enumerate all fixed-point-free involutions of {1..2N} and count
// those whose longest decreasing subsequence is <= 2p. Needs (2N-1)!! <= 1e7.
CountResult count_brute(std::int64_t N, std::int64_t p);

// Exact walk count by dynamic programming: one walker moves one site per
// step, positions stay strictly increasing and >= 1.
CountResult count_walk_dp(std::int64_t n, const Endpoints& e);

// The full step-n distribution over end positions, keyed by the ordered
// position tuple. Exposed for the convolution identity check.
std::vector<std::pair<std::vector<std::int64_t>, BigInt>> walk_dp_layer(
    std::int64_t n, const std::vector<std::int64_t>& start);

// Exact constant-term evaluation of the p-fold trigonometric integral with
// the determinant kernel: multinomial expansion of (sum_j 2cos t_j)^n, each
// factored angular integral resolved by the central-binomial rule
//   (1/2pi) int (2cos t)^m e^{iat} dt = C(m, (m+a)/2)   (m+a even, |a| <= m),
// then a p x p determinant of binomial differences per term.
CountResult z_n_determinant(std::int64_t n, const Endpoints& e);

// Equal-endpoint symmetric form: |det|^2 expanded into (p!)^2 permutation
// products under the same binomial rule, divided exactly by 2^p p!.
CountResult z_n_symmetric(std::int64_t n, const std::vector<std::int64_t>& start);

// f_{Np} as the 2N-th moment of Tr(S) over USp(p): evaluated exactly as
// z_n_symmetric(2N, (1,...,p)).
CountResult count_rains(std::int64_t N, std::int64_t p);

// |LHS - RHS| of the type-C Vandermonde identity
//   |det[z_j^k - z_j^{-k}]|^2 = prod |1-z_j^2|^2 prod |1-z_j z_k|^2 |z_j-z_k|^2
// evaluated numerically at z_j = exp(i theta_j).
double vandermonde_c_residual(const std::vector<double>& thetas);

// Checks Z_{n1+n2}(start;start) = sum over ordered end tuples of
// Z_{n1}(start;end) Z_{n2}(end;start), the sum truncated at the reachability
// bound end_p <= start_p + n1.
bool convolution_check(std::int64_t n1, std::int64_t n2,
                       const std::vector<std::int64_t>& start);

}  // namespace vwalks
