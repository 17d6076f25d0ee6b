#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace vwalks {

// Integer partition: weakly decreasing positive parts, trailing zeros stripped.
class Partition {
public:
    Partition() = default;

    // Throws InvalidInput if parts increase or contain negatives.
    explicit Partition(std::vector<std::int64_t> parts);

    bool empty() const { return parts_.empty(); }
    std::int64_t rows() const { return static_cast<std::int64_t>(parts_.size()); }

    // Length of row r (0-based); 0 beyond the last row.
    std::int64_t part(std::int64_t r) const;

    // Height of column c (0-based); 0 beyond the first row's length.
    std::int64_t column_height(std::int64_t c) const;

    std::int64_t box_count() const;

    Partition conjugate() const;

    const std::vector<std::int64_t>& parts() const { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

}  // namespace vwalks
