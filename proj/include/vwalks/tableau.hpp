#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vwalks/partition.hpp"

namespace vwalks {

// Partition-shaped diagram with distinct labels strictly increasing along
// rows and down columns. Immutable after construction.
class NumberedDiagram {
public:
    NumberedDiagram() = default;

    // Ragged row-major labels; throws InvalidInput on any invariant violation
    // (shape not a partition, duplicate labels, row/column order).
    static NumberedDiagram from_rows(std::vector<std::vector<std::int64_t>> rows);

    bool empty() const { return rows_.empty(); }
    std::int64_t row_count() const { return static_cast<std::int64_t>(rows_.size()); }
    const std::vector<std::int64_t>& row(std::int64_t r) const { return rows_[static_cast<std::size_t>(r)]; }
    const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

    std::int64_t box_count() const;
    std::int64_t column_height(std::int64_t c) const;  // c 0-based
    std::int64_t label_at(std::int64_t r, std::int64_t c) const;
    bool has_label(std::int64_t v) const;

    Partition shape() const;

    friend bool operator==(const NumberedDiagram&, const NumberedDiagram&) = default;

private:
    std::vector<std::vector<std::int64_t>> rows_;

    friend NumberedDiagram column_insert(const NumberedDiagram&, std::int64_t);
    friend std::pair<NumberedDiagram, std::int64_t> reverse_column_insert(const NumberedDiagram&,
                                                                          std::int64_t);
};

// Schensted column insertion: v bumps the topmost entry > v in column 1 into
// column 2, recursively; with no larger entry, v lands at the bottom of the
// column. Throws InvalidInput if v already labels a box.
NumberedDiagram column_insert(const NumberedDiagram& d, std::int64_t v);

// Inverse bump starting from the bottom box of column j (1-based): the carried
// value displaces, per column moving left, the bottommost entry smaller than
// it; the value pushed out of column 1 is returned. Throws InvalidInput if the
// column is empty or its bottom box is not a removable corner.
std::pair<NumberedDiagram, std::int64_t> reverse_column_insert(const NumberedDiagram& d,
                                                               std::int64_t column);

}  // namespace vwalks
