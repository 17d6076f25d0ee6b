#include "vwalks/partition.hpp"

#include <algorithm>
#include <numeric>

#include "vwalks/errors.hpp"

namespace vwalks {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw InvalidInput("partition part is negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw InvalidInput("partition parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::int64_t Partition::part(std::int64_t r) const {
    if (r < 0 || r >= rows()) return 0;
    return parts_[static_cast<std::size_t>(r)];
}

std::int64_t Partition::column_height(std::int64_t c) const {
    std::int64_t h = 0;
    while (h < rows() && parts_[static_cast<std::size_t>(h)] > c) ++h;
    return h;
}

std::int64_t Partition::box_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition Partition::conjugate() const {
    std::vector<std::int64_t> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<std::size_t>(parts_[0]));
        for (std::int64_t c = 0; c < parts_[0]; ++c) {
            conj[static_cast<std::size_t>(c)] = column_height(c);
        }
    }
    return Partition(std::move(conj));
}

}  // namespace vwalks
