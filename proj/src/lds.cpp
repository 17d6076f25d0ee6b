#include "vwalks/lds.hpp"

#include <algorithm>
#include <vector>

#include "vwalks/errors.hpp"

namespace vwalks {

std::int64_t lds_distinct(std::span<const std::int64_t> seq) {
    // Patience piles on the negated sequence: the longest strictly increasing
    // subsequence of (-a_i) is the longest strictly decreasing one of (a_i).
    std::vector<std::int64_t> tails;  // tails[k] = smallest tail of an inc. subseq of length k+1
    tails.reserve(seq.size());
    for (std::int64_t v : seq) {
        const std::int64_t x = -v;
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) {
            tails.push_back(x);
        } else {
            *it = x;
        }
    }
    return static_cast<std::int64_t>(tails.size());
}

std::int64_t lds(std::span<const std::int64_t> seq) {
    std::vector<std::int64_t> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("lds requires pairwise distinct entries");
    }
    return lds_distinct(seq);
}

}  // namespace vwalks
