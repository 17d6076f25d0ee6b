#include "vwalks/counting.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>

#include "vwalks/bijection.hpp"
#include "vwalks/errors.hpp"
#include "vwalks/lds.hpp"

namespace vwalks {

const char* to_string(CountMethod m) {
    switch (m) {
        case CountMethod::Brute: return "brute";
        case CountMethod::WalkDP: return "dp";
        case CountMethod::Determinant: return "det";
        case CountMethod::Symmetric: return "sym";
        case CountMethod::Rains: return "rains";
    }
    return "unknown";
}

CountMethod count_method_from_string(const std::string& name) {
    if (name == "brute") return CountMethod::Brute;
    if (name == "dp") return CountMethod::WalkDP;
    if (name == "det") return CountMethod::Determinant;
    if (name == "sym") return CountMethod::Symmetric;
    if (name == "rains") return CountMethod::Rains;
    throw InvalidInput("unknown counting method '" + name + "'");
}

Endpoints Endpoints::checked(std::vector<std::int64_t> start, std::vector<std::int64_t> end) {
    if (start.size() != end.size()) throw InvalidInput("endpoint vectors differ in length");
    for (const auto* v : {&start, &end}) {
        for (std::size_t i = 0; i < v->size(); ++i) {
            if ((*v)[i] < 1) throw InvalidInput("positions must be >= 1");
            if (i > 0 && (*v)[i] <= (*v)[i - 1]) {
                throw InvalidInput("positions must be strictly increasing");
            }
        }
    }
    return Endpoints{std::move(start), std::move(end)};
}

CountResult count_brute(std::int64_t N, std::int64_t p) {
    if (N < 0 || p < 1) throw InvalidInput("need N >= 0 and p >= 1");
    if (double_factorial_odd(N) > 10'000'000) {
        throw ResourceLimit("count_brute supports (2N-1)!! <= 1e7 (N <= 8)");
    }
    BigInt count = 0;
    for_each_fpf_involution(N, [&](const Involution& s) {
        if (lds_involution(s) <= 2 * p) ++count;
    });
    return {count, CountMethod::Brute};
}

namespace {

constexpr std::int64_t kMaxDpPositions = 255;  // positions packed 8 bits each
constexpr std::size_t kMaxDpStates = 4'000'000;

std::uint64_t pack_positions(const std::vector<std::int64_t>& pos) {
    std::uint64_t key = 0;
    for (std::int64_t v : pos) key = (key << 8) | static_cast<std::uint64_t>(v);
    return key;
}

// One DP sweep: all Z_n(start; .) as a packed-key map.
std::unordered_map<std::uint64_t, BigInt> dp_sweep(std::int64_t n,
                                                   const std::vector<std::int64_t>& start) {
    const auto p = static_cast<std::int64_t>(start.size());
    if (p < 1 || p > 8) throw ResourceLimit("walk DP supports 1 <= p <= 8");
    const std::int64_t reach = *std::max_element(start.begin(), start.end()) + n;
    if (n < 0 || reach > kMaxDpPositions) {
        throw ResourceLimit("walk DP supports max(start) + n <= 255");
    }
    std::unordered_map<std::uint64_t, BigInt> layer;
    layer.emplace(pack_positions(start), 1);
    std::vector<std::int64_t> pos(static_cast<std::size_t>(p));
    for (std::int64_t step = 0; step < n; ++step) {
        std::unordered_map<std::uint64_t, BigInt> next;
        next.reserve(layer.size() * 2);
        for (const auto& [key, cnt] : layer) {
            for (std::int64_t j = p - 1; j >= 0; --j) {
                pos[static_cast<std::size_t>(j)] =
                    static_cast<std::int64_t>((key >> (8 * (p - 1 - j))) & 0xFF);
            }
            for (std::int64_t j = 0; j < p; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                for (const std::int64_t d : {-1, +1}) {
                    const std::int64_t moved = pos[ju] + d;
                    if (moved < 1) continue;                                   // hard wall
                    if (j > 0 && moved <= pos[ju - 1]) continue;               // collision
                    if (j + 1 < p && moved >= pos[ju + 1]) continue;           // collision
                    pos[ju] = moved;
                    next[pack_positions(pos)] += cnt;
                    pos[ju] = moved - d;
                }
            }
        }
        if (next.size() > kMaxDpStates) throw ResourceLimit("walk DP state space too large");
        layer = std::move(next);
    }
    return layer;
}

}  // namespace

CountResult count_walk_dp(std::int64_t n, const Endpoints& e) {
    const auto checked = Endpoints::checked(e.start, e.end);
    auto layer = dp_sweep(n, checked.start);
    const auto it = layer.find(pack_positions(checked.end));
    return {it == layer.end() ? BigInt(0) : it->second, CountMethod::WalkDP};
}

std::vector<std::pair<std::vector<std::int64_t>, BigInt>> walk_dp_layer(
    std::int64_t n, const std::vector<std::int64_t>& start) {
    const auto checked = Endpoints::checked(start, start);
    auto layer = dp_sweep(n, checked.start);
    const auto p = start.size();
    std::vector<std::pair<std::vector<std::int64_t>, BigInt>> out;
    out.reserve(layer.size());
    for (const auto& [key, cnt] : layer) {
        std::vector<std::int64_t> pos(p);
        for (std::size_t j = 0; j < p; ++j) {
            pos[j] = static_cast<std::int64_t>((key >> (8 * (p - 1 - j))) & 0xFF);
        }
        out.emplace_back(std::move(pos), cnt);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

// C(m, (m+a)/2) when m+a is even and |a| <= m, else 0.
const BigInt& cos_moment(const BinomialTable& binom, std::int64_t m, std::int64_t a) {
    static const BigInt zero = 0;
    if (a > m || a < -m || ((m + a) & 1)) return zero;
    return binom.at(m, (m + a) / 2);
}

BigInt cofactor_det(std::vector<std::vector<BigInt>>& m, std::size_t p) {
    // expansion along the first row of the trailing minor; fine for p <= 8
    if (p == 0) return 1;
    if (p == 1) return m[0][0];
    if (p == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    BigInt det = 0;
    std::vector<std::vector<BigInt>> minor(p - 1, std::vector<BigInt>(p - 1));
    for (std::size_t k = 0; k < p; ++k) {
        if (m[0][k] == 0) continue;
        for (std::size_t i = 1; i < p; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < p; ++j) {
                if (j == k) continue;
                minor[i - 1][cc++] = m[i][j];
            }
        }
        const BigInt sub = cofactor_det(minor, p - 1);
        if ((k & 1) == 0) {
            det += m[0][k] * sub;
        } else {
            det -= m[0][k] * sub;
        }
    }
    return det;
}

// Enumerates compositions (m_1,...,m_p) of n with the multinomial weight.
template <typename Fn>
void for_each_composition(std::int64_t n, std::int64_t p, const BinomialTable& binom, Fn&& fn) {
    std::vector<std::int64_t> m(static_cast<std::size_t>(p), 0);
    const std::function<void(std::int64_t, std::int64_t, BigInt)> rec =
        [&](std::int64_t j, std::int64_t left, BigInt weight) {
            if (j == p - 1) {
                m[static_cast<std::size_t>(j)] = left;
                fn(m, weight);  // weight already counts C(n, m_1) C(n-m_1, m_2) ...
                return;
            }
            for (std::int64_t v = 0; v <= left; ++v) {
                m[static_cast<std::size_t>(j)] = v;
                rec(j + 1, left - v, weight * binom.at(left, v));
            }
        };
    rec(0, n, 1);
}

void check_expansion_size(std::int64_t n, std::int64_t p) {
    if (p < 1 || p > 6) throw ResourceLimit("constant-term evaluation supports 1 <= p <= 6");
    if (n < 0 || n > 64) throw ResourceLimit("constant-term evaluation supports n <= 64");
    double combos = 1;
    for (std::int64_t i = 1; i < p; ++i) combos *= static_cast<double>(n + i) / i;
    if (combos > 2e6) throw ResourceLimit("multinomial expansion too large");
}

}  // namespace

CountResult z_n_determinant(std::int64_t n, const Endpoints& raw) {
    const auto e = Endpoints::checked(raw.start, raw.end);
    const std::int64_t p = e.walker_count();
    check_expansion_size(n, p);
    BinomialTable binom(n);
    BigInt total = 0;
    const auto pu = static_cast<std::size_t>(p);
    std::vector<std::vector<BigInt>> mat(pu, std::vector<BigInt>(pu));
    for_each_composition(n, p, binom, [&](const std::vector<std::int64_t>& m, const BigInt& w) {
        for (std::size_t j = 0; j < pu; ++j) {
            for (std::size_t k = 0; k < pu; ++k) {
                mat[j][k] = cos_moment(binom, m[j], e.end[j] - e.start[k]) -
                            cos_moment(binom, m[j], e.end[j] + e.start[k]);
            }
        }
        total += w * cofactor_det(mat, pu);
    });
    return {total, CountMethod::Determinant};
}

CountResult z_n_symmetric(std::int64_t n, const std::vector<std::int64_t>& start) {
    const auto e = Endpoints::checked(start, start);
    const std::int64_t p = e.walker_count();
    check_expansion_size(n, p);
    BinomialTable binom(n);
    const auto pu = static_cast<std::size_t>(p);

    // permutations of {0..p-1} with signs
    std::vector<std::vector<std::size_t>> perms;
    std::vector<int> signs;
    std::vector<std::size_t> idx(pu);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < pu; ++i) {
            for (std::size_t j = i + 1; j < pu; ++j) inv += idx[i] > idx[j];
        }
        perms.push_back(idx);
        signs.push_back(inv % 2 ? -1 : 1);
    } while (std::next_permutation(idx.begin(), idx.end()));

    // (1/2pi) int (2cos t)^m (e^{iat}-e^{-iat})(e^{-ibt}-e^{ibt}) dt
    const auto pair_moment = [&](std::int64_t m, std::int64_t a, std::int64_t b) -> BigInt {
        return 2 * (cos_moment(binom, m, a - b) - cos_moment(binom, m, a + b));
    };

    BigInt total = 0;
    for_each_composition(n, p, binom, [&](const std::vector<std::int64_t>& m, const BigInt& w) {
        BigInt inner = 0;
        for (std::size_t pi = 0; pi < perms.size(); ++pi) {
            for (std::size_t qi = 0; qi < perms.size(); ++qi) {
                BigInt prod = signs[pi] * signs[qi];
                for (std::size_t j = 0; j < pu && prod != 0; ++j) {
                    prod *= pair_moment(m[j], start[perms[pi][j]], start[perms[qi][j]]);
                }
                inner += prod;
            }
        }
        total += w * inner;
    });
    const BigInt denom = BigInt(1) << p;  // 2^p, times p! below
    BigInt divisor = denom * factorial(p);
    BigInt q = total / divisor;
    if (q * divisor != total) {
        throw std::logic_error("symmetric form did not divide exactly");
    }
    return {q, CountMethod::Symmetric};
}

CountResult count_rains(std::int64_t N, std::int64_t p) {
    if (N < 0 || p < 1) throw InvalidInput("need N >= 0 and p >= 1");
    std::vector<std::int64_t> start(static_cast<std::size_t>(p));
    std::iota(start.begin(), start.end(), 1);
    auto r = z_n_symmetric(2 * N, start);
    return {std::move(r.value), CountMethod::Rains};
}

double vandermonde_c_residual(const std::vector<double>& thetas) {
    const std::size_t p = thetas.size();
    if (p == 0) return 0.0;
    if (p > 8) throw ResourceLimit("residual evaluation supports p <= 8");
    using cplx = std::complex<double>;
    std::vector<cplx> z(p);
    for (std::size_t j = 0; j < p; ++j) z[j] = std::polar(1.0, thetas[j]);

    // det[z_j^k - z_j^{-k}], k = 1..p, by Laplace expansion over permutations
    std::vector<std::vector<cplx>> m(p, std::vector<cplx>(p));
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = 0; k < p; ++k) {
            const auto e = static_cast<double>(k + 1);
            m[j][k] = std::pow(z[j], e) - std::pow(z[j], -e);
        }
    }
    std::vector<std::size_t> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    cplx det = 0;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = i + 1; j < p; ++j) inv += idx[i] > idx[j];
        }
        cplx prod = inv % 2 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < p; ++j) prod *= m[j][idx[j]];
        det += prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    const double lhs = std::norm(det);

    double rhs = 1.0;
    for (std::size_t j = 0; j < p; ++j) rhs *= std::norm(1.0 - z[j] * z[j]);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = j + 1; k < p; ++k) {
            rhs *= std::norm(1.0 - z[j] * z[k]) * std::norm(z[j] - z[k]);
        }
    }
    return std::abs(lhs - rhs);
}

bool convolution_check(std::int64_t n1, std::int64_t n2, const std::vector<std::int64_t>& start) {
    const auto e = Endpoints::checked(start, start);
    const BigInt lhs = count_walk_dp(n1 + n2, e).value;

    BigInt rhs = 0;
    for (const auto& [end, z1] : walk_dp_layer(n1, start)) {
        // truncation bound: reachable ends already satisfy end_p <= start_p + n1
        const BigInt z2 = count_walk_dp(n2, Endpoints::checked(end, start)).value;
        rhs += z1 * z2;
    }
    return lhs == rhs;
}

}  // namespace vwalks
