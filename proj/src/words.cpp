#include "vwalks/words.hpp"

#include <string>

#include "vwalks/errors.hpp"

namespace vwalks {

const char* to_string(WordFault f) {
    switch (f) {
        case WordFault::OrderingViolation: return "ordering violation (n_j < n_{j+1})";
        case WordFault::NegativeCount: return "negative count (n_j < 0)";
        case WordFault::NonzeroFinalCount: return "nonzero final count";
        case WordFault::ClassConstraint: return "class constraint violation";
    }
    return "unknown";
}

ConfigClass ConfigClass::one(std::int64_t p) {
    if (p < 1) throw InvalidInput("class parameter p must be >= 1");
    return ConfigClass{Kind::One, p};
}

ConfigClass ConfigClass::two(std::int64_t p) {
    if (p < 1) throw InvalidInput("class parameter p must be >= 1");
    return ConfigClass{Kind::Two, p};
}

namespace {

[[noreturn]] void fail(WordFault f, std::size_t pos) {
    throw WordError(f, pos, std::string(to_string(f)) + " at letter " + std::to_string(pos));
}

}  // namespace

WalkerWord validate_word(std::span<const Letter> letters, ConfigClass c) {
    std::vector<std::int64_t> n;  // n[j-1]; grows only when a right step is accepted
    const auto count = [&](std::int64_t j) -> std::int64_t {
        return (j >= 1 && j <= static_cast<std::int64_t>(n.size()))
                   ? n[static_cast<std::size_t>(j - 1)]
                   : 0;
    };
    std::int64_t max_n1 = 0;
    for (std::size_t t = 0; t < letters.size(); ++t) {
        const auto [j, dir] = letters[t];
        if (j < 1) throw InvalidInput("walker index must be >= 1");
        if (c.kind == ConfigClass::Kind::One && j > c.p) fail(WordFault::ClassConstraint, t);
        if (dir == Dir::Right) {
            if (j >= 2 && count(j - 1) < count(j) + 1) fail(WordFault::OrderingViolation, t);
            if (static_cast<std::int64_t>(n.size()) < j) n.resize(static_cast<std::size_t>(j), 0);
            ++n[static_cast<std::size_t>(j - 1)];
        } else {
            if (count(j) == 0) fail(WordFault::NegativeCount, t);
            if (count(j) - 1 < count(j + 1)) fail(WordFault::OrderingViolation, t);
            --n[static_cast<std::size_t>(j - 1)];
        }
        max_n1 = std::max(max_n1, count(1));
    }
    for (std::int64_t v : n) {
        if (v != 0) fail(WordFault::NonzeroFinalCount, letters.size());
    }
    if (c.kind == ConfigClass::Kind::Two && max_n1 > c.p) {
        fail(WordFault::ClassConstraint, letters.size());
    }
    return WalkerWord(std::vector<Letter>(letters.begin(), letters.end()));
}

std::vector<Partition> word_to_shape_sequence(const WalkerWord& w, ConfigClass c) {
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(w.size()) + 1);
    std::vector<std::int64_t> n;
    out.emplace_back();
    for (const auto& [j, dir] : w.letters()) {
        if (static_cast<std::int64_t>(n.size()) < j) n.resize(static_cast<std::size_t>(j), 0);
        n[static_cast<std::size_t>(j - 1)] += (dir == Dir::Right) ? 1 : -1;
        Partition counts{std::vector<std::int64_t>(n)};
        out.push_back(c.kind == ConfigClass::Kind::Two ? counts.conjugate() : counts);
    }
    return out;
}

std::int64_t max_displacement(const WalkerWord& w) {
    std::int64_t n1 = 0;
    std::int64_t best = 0;
    for (const auto& [j, dir] : w.letters()) {
        if (j == 1) {
            n1 += (dir == Dir::Right) ? 1 : -1;
            best = std::max(best, n1);
        }
    }
    return best;
}

void enumerate_words(std::int64_t N, ConfigClass c,
                     const std::function<void(const WalkerWord&)>& fn) {
    if (N < 0) throw InvalidInput("N must be nonnegative");
    const std::int64_t jmax = (c.kind == ConfigClass::Kind::One) ? c.p : std::max<std::int64_t>(N, 1);
    std::vector<std::int64_t> n(static_cast<std::size_t>(jmax) + 2, 0);  // n[j], 1-based, padded
    std::vector<Letter> word;
    word.reserve(static_cast<std::size_t>(2 * N));

    const std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t t,
                                                                    std::int64_t total) {
        const std::int64_t rem = 2 * N - t;
        if (total > rem || ((rem - total) & 1)) return;  // cannot return to zero
        if (t == 2 * N) {
            fn(WalkerWord(word));
            return;
        }
        for (std::int64_t j = 1; j <= jmax; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            // right step, provided ordering survives and class two keeps n_1 <= p
            const bool right_ok =
                (j == 1) ? !(c.kind == ConfigClass::Kind::Two && n[1] + 1 > c.p)
                         : n[ju - 1] >= n[ju] + 1;
            if (right_ok) {
                ++n[ju];
                word.push_back({j, Dir::Right});
                rec(t + 1, total + 1);
                word.pop_back();
                --n[ju];
            }
            if (n[ju] >= 1 && n[ju] - 1 >= n[ju + 1]) {
                --n[ju];
                word.push_back({j, Dir::Left});
                rec(t + 1, total - 1);
                word.pop_back();
                ++n[ju];
            }
        }
    };
    rec(0, 0);
}

std::vector<WalkerWord> enumerate_words(std::int64_t N, ConfigClass c) {
    std::vector<WalkerWord> out;
    enumerate_words(N, c, [&](const WalkerWord& w) { out.push_back(w); });
    return out;
}

}  // namespace vwalks
