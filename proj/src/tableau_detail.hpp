#pragma once

#include <cstdint>
#include <vector>

namespace vwalks::detail {

// Raw bump primitives shared between the tableau operations and the walk
// engine. Inputs are assumed valid; callers keep the diagram invariants.
using Rows = std::vector<std::vector<std::int64_t>>;

void raw_column_insert(Rows& rows, std::int64_t v);
std::int64_t raw_reverse_column_insert(Rows& rows, std::int64_t c);  // c 0-based
std::int64_t raw_col_height(const Rows& rows, std::int64_t c);

}  // namespace vwalks::detail
