#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vwalks {

// Thrown when an input value violates a documented precondition.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a requested computation exceeds the supported problem size.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// Why a walker word was rejected. Checked in this order for each letter:
// class alphabet bound (ClassOne), negative count, neighbour ordering; then
// after the last letter: nonzero final counts, displacement bound (ClassTwo).
enum class WordFault {
    OrderingViolation,   // some prefix has n_j < n_{j+1}
    NegativeCount,       // some prefix has n_j < 0
    NonzeroFinalCount,   // word does not return every n_j to zero
    ClassConstraint,     // walker index > p (class one) or max n_1 > p (class two)
};

const char* to_string(WordFault f);

class WordError : public InvalidInput {
public:
    WordError(WordFault fault, std::size_t position, const std::string& what)
        : InvalidInput(what), fault_(fault), position_(position) {}

    WordFault fault() const { return fault_; }
    // Index of the offending letter; equals word length for end-of-word faults.
    std::size_t position() const { return position_; }

private:
    WordFault fault_;
    std::size_t position_;
};

}  // namespace vwalks
