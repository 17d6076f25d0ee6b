#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vwalks {

// Exact counts grow super-exponentially; everything count-valued is a BigInt.
using BigInt = boost::multiprecision::cpp_int;

// Pascal triangle rows 0..n_max, built once and indexed as at(n, k).
class BinomialTable {
public:
    explicit BinomialTable(std::int64_t n_max);

    // C(n, k); zero outside 0 <= k <= n.
    const BigInt& at(std::int64_t n, std::int64_t k) const;

    std::int64_t n_max() const { return static_cast<std::int64_t>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_;
};

BigInt factorial(std::int64_t n);

// (2N-1)!! = 1*3*5*...*(2N-1); the number of fixed-point-free involutions of {1..2N}.
BigInt double_factorial_odd(std::int64_t N);

BigInt catalan(std::int64_t n);

}  // namespace vwalks
