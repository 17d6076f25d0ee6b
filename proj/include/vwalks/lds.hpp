#pragma once

#include <cstdint>
#include <span>

namespace vwalks {

// Length of the longest strictly decreasing subsequence. O(n log n) patience
// scheme. Throws InvalidInput if entries are not pairwise distinct.
std::int64_t lds(std::span<const std::int64_t> seq);

// Same, but the caller guarantees distinct entries (hot path for involution
// words, which are permutations by construction).
std::int64_t lds_distinct(std::span<const std::int64_t> seq);

}  // namespace vwalks
