#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vwalks/partition.hpp"

namespace vwalks {

enum class Dir : std::uint8_t { Right, Left };

// One letter of a walker word: walker j steps right (plain j) or left (barred j).
struct Letter {
    std::int64_t walker = 1;
    Dir dir = Dir::Right;

    friend bool operator==(const Letter&, const Letter&) = default;
};

// Which configuration family a word describes. ClassOne(p): exactly p walkers,
// indices 1..p; ClassTwo(p): unbounded walker indices, rightmost-walker
// displacement bounded by p.
struct ConfigClass {
    enum class Kind { One, Two };

    Kind kind;
    std::int64_t p;

    static ConfigClass one(std::int64_t p);
    static ConfigClass two(std::int64_t p);

    friend bool operator==(const ConfigClass&, const ConfigClass&) = default;
};

// A validated word: every prefix satisfies n_1 >= n_2 >= ... >= 0 and all
// counts return to zero. Instances exist only through validate_word or the
// enumerator, so holding a WalkerWord certifies those two facts (the class
// constraint was checked against the class passed at construction).
class WalkerWord {
public:
    const std::vector<Letter>& letters() const { return letters_; }
    std::int64_t size() const { return static_cast<std::int64_t>(letters_.size()); }
    std::int64_t half_steps() const { return size() / 2; }  // the N of a 2N-letter word

    friend bool operator==(const WalkerWord&, const WalkerWord&) = default;

private:
    explicit WalkerWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    std::vector<Letter> letters_;

    friend WalkerWord validate_word(std::span<const Letter>, ConfigClass);
    friend void enumerate_words(std::int64_t, ConfigClass,
                                const std::function<void(const WalkerWord&)>&);
};

// Checks the prefix ordering condition, nonnegativity, zero final counts and
// the class constraint; throws WordError with the violated fault otherwise.
WalkerWord validate_word(std::span<const Letter> letters, ConfigClass c);

// The 2N+1 diagram shapes traced by the word: under ClassTwo column j carries
// n_j (shape = conjugate of the count vector), under ClassOne row j carries n_j.
std::vector<Partition> word_to_shape_sequence(const WalkerWord& w, ConfigClass c);

// Maximum over prefixes of n_1: the rightmost walker's maximum displacement.
std::int64_t max_displacement(const WalkerWord& w);

// Every valid word of 2N letters for the class, each exactly once, in
// lexicographic order of the letter codes (walker ascending, right before
// left). Depth-first with pruning on the ordering condition and on the
// remaining-steps return bound.
void enumerate_words(std::int64_t N, ConfigClass c,
                     const std::function<void(const WalkerWord&)>& fn);

std::vector<WalkerWord> enumerate_words(std::int64_t N, ConfigClass c);

}  // namespace vwalks
