#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vwalks/tableau.hpp"
#include "vwalks/words.hpp"

namespace vwalks {

// Ordered pairs (i, x_i), tops strictly increasing, x_i < i, the 2N values
// together being exactly {1,...,2N}. Records which value was ejected at which
// removal step; equivalent to a fixed-point-free involution.
struct TwoLineArray {
    std::vector<std::int64_t> top;
    std::vector<std::int64_t> bottom;

    std::int64_t pair_count() const { return static_cast<std::int64_t>(top.size()); }

    // Validates all invariants; throws InvalidInput.
    static TwoLineArray from_lines(std::vector<std::int64_t> top,
                                   std::vector<std::int64_t> bottom);

    friend bool operator==(const TwoLineArray&, const TwoLineArray&) = default;
};

// Fixed-point-free involution of {1,...,2N} as a permutation table.
class Involution {
public:
    // sigma holds 1-based images; sigma[k-1] = sigma(k). Throws InvalidInput
    // unless sigma is an involution with no fixed point.
    static Involution from_sigma(std::vector<std::int64_t> sigma);

    static Involution from_pairs(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs);

    std::int64_t domain_size() const { return static_cast<std::int64_t>(sigma_.size()); }
    std::int64_t pair_count() const { return domain_size() / 2; }
    std::int64_t image_of(std::int64_t k) const { return sigma_[static_cast<std::size_t>(k - 1)]; }

    // The one-line word (sigma(1),...,sigma(2N)).
    const std::vector<std::int64_t>& word() const { return sigma_; }

    friend bool operator==(const Involution&, const Involution&) = default;

private:
    Involution() = default;
    std::vector<std::int64_t> sigma_;

    friend Involution sample_involution(std::int64_t, class Rng&);
    friend void for_each_fpf_involution(std::int64_t,
                                        const std::function<void(const Involution&)>&);
};

// The oscillating-tableau trace: 2N+1 diagrams, empty at both ends,
// consecutive diagrams differing by one box, a box added at step i labeled i.
struct OscillatingSequence {
    std::vector<NumberedDiagram> steps;

    std::int64_t step_count() const { return static_cast<std::int64_t>(steps.size()); }
};

// Forward construction: a right-step adds a box labeled with the time step
// (bottom of column j under ClassTwo, end of row j under ClassOne); a
// left-step removes through reverse column insertion and records (i, x_i).
TwoLineArray walk_to_array(const WalkerWord& w, ConfigClass c);

// Same construction, returning the full diagram trace.
OscillatingSequence word_to_tableaux(const WalkerWord& w, ConfigClass c);

// Backward reconstruction: step i-1 from step i deletes the box labeled i
// when i is not a top entry, otherwise column-inserts x_i. Reading the shape
// deltas yields the word; exact inverse of walk_to_array. Throws WordError
// (ClassConstraint) when lds(bottom) exceeds the class parameter.
WalkerWord array_to_walk(const TwoLineArray& a, ConfigClass c);

OscillatingSequence array_to_tableaux(const TwoLineArray& a);

// sigma swaps top and bottom within each pair.
Involution array_to_involution(const TwoLineArray& a);

// pairs (max(k, sigma(k)), min(k, sigma(k))) sorted by top; exact inverse.
TwoLineArray involution_to_array(const Involution& s);

// lds of the word (sigma(1),...,sigma(2N)); always even, equal to twice the
// lds of the array's bottom line.
std::int64_t lds_involution(const Involution& s);

// Every fixed-point-free involution of {1,...,2N} exactly once (smallest
// unpaired element paired with each larger one, recursively).
void for_each_fpf_involution(std::int64_t N,
                             const std::function<void(const Involution&)>& fn);

}  // namespace vwalks
