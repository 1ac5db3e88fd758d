#pragma once

#include "fourfold/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace fourfold {

// Dense matrix over Int. Row-major. 0xN and Nx0 shapes are legal and kept
// distinct, so kernel and direct-sum edge cases fall out naturally.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    // Validates rectangularity; Error("shape") on ragged input.
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols_if_empty = 0);
    static IntMatrix from_rows(std::initializer_list<std::vector<Int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;  // Error("shape") on mismatch

    // Submatrix picking the given rows/columns in the given order.
    IntMatrix select(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const;
    std::vector<Int> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Int>& values);

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a -= q * row b  /  col a -= q * col b
    void row_axpy(std::size_t a, std::size_t b, const Int& q);
    void col_axpy(std::size_t a, std::size_t b, const Int& q);
    void negate_row(std::size_t i);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace fourfold
