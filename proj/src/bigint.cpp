#include "vwalks/bigint.hpp"

#include <stdexcept>

#include "vwalks/errors.hpp"

namespace vwalks {

BinomialTable::BinomialTable(std::int64_t n_max) : zero_(0) {
    if (n_max < 0) throw InvalidInput("binomial table size must be nonnegative");
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    for (std::size_t n = 0; n <= static_cast<std::size_t>(n_max); ++n) {
        rows_[n].resize(n + 1);
        rows_[n][0] = 1;
        rows_[n][n] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
        }
    }
}

const BigInt& BinomialTable::at(std::int64_t n, std::int64_t k) const {
    if (n < 0 || n >= static_cast<std::int64_t>(rows_.size())) {
        throw std::out_of_range("binomial table row out of range");
    }
    if (k < 0 || k > n) return zero_;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt factorial(std::int64_t n) {
    if (n < 0) throw InvalidInput("factorial of negative");
    BigInt r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt double_factorial_odd(std::int64_t N) {
    if (N < 0) throw InvalidInput("double factorial of negative");
    BigInt r = 1;
    for (std::int64_t i = 3; i <= 2 * N - 1; i += 2) r *= i;
    return r;
}

BigInt catalan(std::int64_t n) {
    if (n < 0) throw InvalidInput("catalan of negative");
    BinomialTable t(2 * n);
    return t.at(2 * n, n) - t.at(2 * n, n + 1);
}

}  // namespace vwalks
