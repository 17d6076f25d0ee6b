#include "vwalks/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "vwalks/errors.hpp"
#include "vwalks/lds.hpp"
#include "tableau_detail.hpp"

namespace vwalks {

TwoLineArray TwoLineArray::from_lines(std::vector<std::int64_t> top,
                                      std::vector<std::int64_t> bottom) {
    if (top.size() != bottom.size()) throw InvalidInput("two-line array lines differ in length");
    const auto N = static_cast<std::int64_t>(top.size());
    std::set<std::int64_t> seen;
    for (std::int64_t k = 0; k < N; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        if (k > 0 && top[ku] <= top[ku - 1]) {
            throw InvalidInput("top line must be strictly increasing");
        }
        if (bottom[ku] >= top[ku]) throw InvalidInput("need x_i < i within each pair");
        if (bottom[ku] < 1) throw InvalidInput("array entries must be positive");
        if (!seen.insert(top[ku]).second || !seen.insert(bottom[ku]).second) {
            throw InvalidInput("array entries must be distinct");
        }
    }
    // the construction consumes every step label exactly once
    if (!seen.empty() && (*seen.rbegin() != 2 * N || static_cast<std::int64_t>(seen.size()) != 2 * N)) {
        throw InvalidInput("array entries must form {1,...,2N}");
    }
    return TwoLineArray{std::move(top), std::move(bottom)};
}

Involution Involution::from_sigma(std::vector<std::int64_t> sigma) {
    const auto n = static_cast<std::int64_t>(sigma.size());
    if (n % 2 != 0) throw InvalidInput("involution domain must have even size");
    for (std::int64_t k = 1; k <= n; ++k) {
        const std::int64_t img = sigma[static_cast<std::size_t>(k - 1)];
        if (img < 1 || img > n) throw InvalidInput("involution image out of range");
        if (img == k) throw InvalidInput("involution has a fixed point at " + std::to_string(k));
        if (sigma[static_cast<std::size_t>(img - 1)] != k) {
            throw InvalidInput("table is not an involution");
        }
    }
    Involution s;
    s.sigma_ = std::move(sigma);
    return s;
}

Involution Involution::from_pairs(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    std::vector<std::int64_t> sigma(pairs.size() * 2, 0);
    const auto n = static_cast<std::int64_t>(sigma.size());
    for (const auto& [a, b] : pairs) {
        if (a < 1 || a > n || b < 1 || b > n || a == b) throw InvalidInput("bad pair");
        sigma[static_cast<std::size_t>(a - 1)] = b;
        sigma[static_cast<std::size_t>(b - 1)] = a;
    }
    return from_sigma(std::move(sigma));
}

namespace {

struct EngineResult {
    std::vector<std::int64_t> tops;
    std::vector<std::int64_t> bottoms;
    std::vector<NumberedDiagram> trace;
};

// Forward oscillating-tableau construction shared by walk_to_array and
// word_to_tableaux.
EngineResult run_forward(const WalkerWord& w, ConfigClass c, bool keep_trace) {
    detail::Rows rows;
    EngineResult out;
    if (keep_trace) out.trace.emplace_back();
    std::int64_t t = 0;
    for (const auto& [j, dir] : w.letters()) {
        ++t;
        if (dir == Dir::Right) {
            std::int64_t r, col;
            if (c.kind == ConfigClass::Kind::Two) {
                col = j - 1;
                r = detail::raw_col_height(rows, col);
            } else {
                r = j - 1;
                col = (r < static_cast<std::int64_t>(rows.size()))
                          ? static_cast<std::int64_t>(rows[static_cast<std::size_t>(r)].size())
                          : 0;
            }
            if (r == static_cast<std::int64_t>(rows.size())) rows.emplace_back();
            rows[static_cast<std::size_t>(r)].push_back(t);
        } else {
            const std::int64_t col =
                (c.kind == ConfigClass::Kind::Two)
                    ? j - 1
                    : static_cast<std::int64_t>(rows[static_cast<std::size_t>(j - 1)].size()) - 1;
            const std::int64_t ejected = detail::raw_reverse_column_insert(rows, col);
            out.tops.push_back(t);
            out.bottoms.push_back(ejected);
        }
        if (keep_trace) out.trace.push_back(NumberedDiagram::from_rows(rows));
    }
    return out;
}

// Backward reconstruction of the tableau sequence from an array.
std::vector<NumberedDiagram> run_backward(const TwoLineArray& a) {
    const std::int64_t N = a.pair_count();
    std::vector<std::int64_t> ejected_at(static_cast<std::size_t>(2 * N) + 1, 0);
    for (std::int64_t k = 0; k < N; ++k) {
        ejected_at[static_cast<std::size_t>(a.top[static_cast<std::size_t>(k)])] =
            a.bottom[static_cast<std::size_t>(k)];
    }
    std::vector<NumberedDiagram> seq(static_cast<std::size_t>(2 * N) + 1);
    detail::Rows rows;  // tableau at step i while walking i = 2N .. 0
    for (std::int64_t i = 2 * N; i >= 1; --i) {
        seq[static_cast<std::size_t>(i)] = NumberedDiagram::from_rows(rows);
        if (ejected_at[static_cast<std::size_t>(i)] != 0) {
            detail::raw_column_insert(rows, ejected_at[static_cast<std::size_t>(i)]);
        } else {
            // i is the largest label present, so its box is a corner
            bool found = false;
            for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
                if (!it->empty() && it->back() == i) {
                    it->pop_back();
                    found = true;
                    break;
                }
            }
            if (!found) throw InvalidInput("array is not reachable by the construction");
            while (!rows.empty() && rows.back().empty()) rows.pop_back();
        }
    }
    if (!rows.empty()) throw InvalidInput("array is not reachable by the construction");
    seq[0] = NumberedDiagram();
    return seq;
}

}  // namespace

TwoLineArray walk_to_array(const WalkerWord& w, ConfigClass c) {
    auto res = run_forward(w, c, /*keep_trace=*/false);
    return TwoLineArray::from_lines(std::move(res.tops), std::move(res.bottoms));
}

OscillatingSequence word_to_tableaux(const WalkerWord& w, ConfigClass c) {
    auto res = run_forward(w, c, /*keep_trace=*/true);
    return OscillatingSequence{std::move(res.trace)};
}

OscillatingSequence array_to_tableaux(const TwoLineArray& a) {
    return OscillatingSequence{run_backward(a)};
}

WalkerWord array_to_walk(const TwoLineArray& a, ConfigClass c) {
    if (lds(a.bottom) > c.p) {
        throw WordError(WordFault::ClassConstraint, static_cast<std::size_t>(2 * a.pair_count()),
                        "bottom line has a decreasing subsequence longer than p");
    }
    const auto seq = run_backward(a);
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(2 * a.pair_count()));
    for (std::size_t t = 1; t < seq.size(); ++t) {
        const Partition prev = (c.kind == ConfigClass::Kind::Two)
                                   ? seq[t - 1].shape().conjugate()
                                   : seq[t - 1].shape();
        const Partition cur = (c.kind == ConfigClass::Kind::Two) ? seq[t].shape().conjugate()
                                                                 : seq[t].shape();
        const std::int64_t rows = std::max(prev.rows(), cur.rows());
        for (std::int64_t r = 0; r < rows; ++r) {
            const std::int64_t d = cur.part(r) - prev.part(r);
            if (d != 0) {
                letters.push_back({r + 1, d > 0 ? Dir::Right : Dir::Left});
                break;
            }
        }
    }
    return validate_word(letters, c);
}

Involution array_to_involution(const TwoLineArray& a) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    pairs.reserve(static_cast<std::size_t>(a.pair_count()));
    for (std::int64_t k = 0; k < a.pair_count(); ++k) {
        pairs.emplace_back(a.top[static_cast<std::size_t>(k)],
                           a.bottom[static_cast<std::size_t>(k)]);
    }
    return Involution::from_pairs(pairs);
}

TwoLineArray involution_to_array(const Involution& s) {
    std::vector<std::int64_t> top, bottom;
    for (std::int64_t k = 1; k <= s.domain_size(); ++k) {
        if (s.image_of(k) < k) {
            top.push_back(k);
            bottom.push_back(s.image_of(k));
        }
    }
    return TwoLineArray::from_lines(std::move(top), std::move(bottom));
}

std::int64_t lds_involution(const Involution& s) { return lds_distinct(s.word()); }

void for_each_fpf_involution(std::int64_t N,
                             const std::function<void(const Involution&)>& fn) {
    if (N < 0) throw InvalidInput("N must be nonnegative");
    std::vector<std::int64_t> sigma(static_cast<std::size_t>(2 * N), 0);
    std::vector<std::int64_t> free;
    free.resize(static_cast<std::size_t>(2 * N));
    std::iota(free.begin(), free.end(), 1);

    const std::function<void(std::size_t)> rec = [&](std::size_t used) {
        if (used == sigma.size()) {
            Involution s;
            s.sigma_ = sigma;
            fn(s);
            return;
        }
        // smallest unmatched element
        std::int64_t a = 0;
        for (std::int64_t k = 1; k <= static_cast<std::int64_t>(sigma.size()); ++k) {
            if (sigma[static_cast<std::size_t>(k - 1)] == 0) {
                a = k;
                break;
            }
        }
        for (std::int64_t b = a + 1; b <= static_cast<std::int64_t>(sigma.size()); ++b) {
            if (sigma[static_cast<std::size_t>(b - 1)] != 0) continue;
            sigma[static_cast<std::size_t>(a - 1)] = b;
            sigma[static_cast<std::size_t>(b - 1)] = a;
            rec(used + 2);
            sigma[static_cast<std::size_t>(a - 1)] = 0;
            sigma[static_cast<std::size_t>(b - 1)] = 0;
        }
    };
    if (N == 0) {
        Involution s;
        fn(s);
        return;
    }
    rec(0);
}

}  // namespace vwalks
