#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ternop/bigint.hpp"

namespace ternop {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    BigInt &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<BigInt> &data() const noexcept { return data_; }

    std::vector<BigInt> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<BigInt> &v);

    IntMatrix transpose() const;
    BigInt trace() const;
    BigInt max_abs() const;

    /// Entries as int64 when every entry fits.
    std::optional<std::vector<std::int64_t>> to_int64() const;

    friend bool operator==(const IntMatrix &a, const IntMatrix &b) = default;

    IntMatrix operator-() const;
    friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
    /// Uses a machine-word kernel when the entry bound rules out overflow.
    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend std::vector<BigInt> operator*(const IntMatrix &a, const std::vector<BigInt> &v);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// M^k by repeated squaring, k >= 0.
IntMatrix matrix_power(const IntMatrix &m, unsigned long long k);

} // namespace ternop
