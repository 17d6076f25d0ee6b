#include "vwalks/tableau.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "vwalks/errors.hpp"

namespace vwalks {

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

void check_rows(const Rows& rows) {
    std::set<std::int64_t> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty()) throw InvalidInput("diagram has an empty row");
        if (r + 1 < rows.size() && rows[r + 1].size() > row.size()) {
            throw InvalidInput("diagram shape is not a partition");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) throw InvalidInput("diagram labels must be positive");
            if (!seen.insert(row[c]).second) throw InvalidInput("duplicate diagram label");
            if (c + 1 < row.size() && row[c] >= row[c + 1]) {
                throw InvalidInput("labels must increase along rows");
            }
            if (r > 0 && rows[r - 1][c] >= row[c]) {
                throw InvalidInput("labels must increase down columns");
            }
        }
    }
}

std::int64_t raw_column_height(const Rows& rows, std::int64_t c) {
    std::int64_t h = 0;
    while (h < static_cast<std::int64_t>(rows.size()) &&
           static_cast<std::int64_t>(rows[static_cast<std::size_t>(h)].size()) > c) {
        ++h;
    }
    return h;
}

}  // namespace

namespace detail {

// Shared with the bijection engine; these assume validated inputs.

void raw_column_insert(Rows& rows, std::int64_t v) {
    std::int64_t c = 0;
    for (;;) {
        const std::int64_t h = raw_column_height(rows, c);
        // topmost entry > v in column c
        std::int64_t r = -1;
        for (std::int64_t i = 0; i < h; ++i) {
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] > v) {
                r = i;
                break;
            }
        }
        if (r < 0) {
            if (h == static_cast<std::int64_t>(rows.size())) rows.emplace_back();
            rows[static_cast<std::size_t>(h)].push_back(v);
            return;
        }
        std::swap(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], v);
        ++c;
    }
}

std::int64_t raw_reverse_column_insert(Rows& rows, std::int64_t c) {
    const std::int64_t h = raw_column_height(rows, c);
    const auto r = static_cast<std::size_t>(h - 1);
    std::int64_t carried = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    for (std::int64_t cc = c - 1; cc >= 0; --cc) {
        const std::int64_t hh = raw_column_height(rows, cc);
        // bottommost entry < carried; the row neighbour guarantees one exists
        for (std::int64_t i = hh - 1; i >= 0; --i) {
            auto& cell = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(cc)];
            if (cell < carried) {
                std::swap(cell, carried);
                break;
            }
        }
    }
    return carried;
}

std::int64_t raw_col_height(const Rows& rows, std::int64_t c) { return raw_column_height(rows, c); }

}  // namespace detail

NumberedDiagram NumberedDiagram::from_rows(Rows rows) {
    check_rows(rows);
    NumberedDiagram d;
    d.rows_ = std::move(rows);
    return d;
}

std::int64_t NumberedDiagram::box_count() const {
    std::int64_t n = 0;
    for (const auto& r : rows_) n += static_cast<std::int64_t>(r.size());
    return n;
}

std::int64_t NumberedDiagram::column_height(std::int64_t c) const {
    return raw_column_height(rows_, c);
}

std::int64_t NumberedDiagram::label_at(std::int64_t r, std::int64_t c) const {
    return rows_.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
}

bool NumberedDiagram::has_label(std::int64_t v) const {
    for (const auto& row : rows_) {
        if (std::find(row.begin(), row.end(), v) != row.end()) return true;
    }
    return false;
}

Partition NumberedDiagram::shape() const {
    std::vector<std::int64_t> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<std::int64_t>(r.size()));
    return Partition(std::move(parts));
}

NumberedDiagram column_insert(const NumberedDiagram& d, std::int64_t v) {
    if (v < 1) throw InvalidInput("labels must be positive");
    if (d.has_label(v)) throw InvalidInput("label " + std::to_string(v) + " already present");
    NumberedDiagram out;
    out.rows_ = d.rows_;
    detail::raw_column_insert(out.rows_, v);
    return out;
}

std::pair<NumberedDiagram, std::int64_t> reverse_column_insert(const NumberedDiagram& d,
                                                               std::int64_t column) {
    if (column < 1) throw InvalidInput("column index is 1-based");
    const std::int64_t c = column - 1;
    const std::int64_t h = d.column_height(c);
    if (h == 0) throw InvalidInput("reverse insertion from an empty column");
    if (static_cast<std::int64_t>(d.row(h - 1).size()) != column) {
        throw InvalidInput("removing the bottom box of column " + std::to_string(column) +
                           " would break the partition shape");
    }
    NumberedDiagram out;
    out.rows_ = d.rows_;
    const std::int64_t ejected = detail::raw_reverse_column_insert(out.rows_, c);
    return {std::move(out), ejected};
}

}  // namespace vwalks
