#pragma once

// Dense matrices of arbitrary-precision integers: exact products and exact
// determinants by fraction-free (Bareiss) elimination.

#include <cstddef>
#include <vector>

#include "schub/int.hpp"

namespace schub {

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t k) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;  // row-major
};

// Exact product; throws std::invalid_argument on shape mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by single-step Bareiss elimination. Pivot is the first
// nonzero entry in column order; row swaps are tracked for the sign. Every
// intermediate division is exact by the Bareiss identity, so the computation
// never leaves the integers. Throws std::invalid_argument on non-square input.
// The empty 0x0 matrix has determinant 1.
Int determinant(const IntMatrix& a);

}  // namespace schub
