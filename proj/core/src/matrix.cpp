#include "schub/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace schub {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: shape mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                    "x" + std::to_string(b.cols()) + ")");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Int& bkj = b(k, j);
                if (bkj != 0) c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

namespace {

IntMatrix elementwise(const IntMatrix& a, const IntMatrix& b, bool subtract) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = subtract ? Int(a(i, j) - b(i, j)) : Int(a(i, j) + b(i, j));
    return c;
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) { return elementwise(a, b, false); }
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return elementwise(a, b, true); }

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix is " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + ", not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    IntMatrix m = a;
    int sign = 1;
    Int prev = 1;  // pivot of the previous step; divisor in the Bareiss identity
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // first nonzero candidate in column k
        std::size_t pivot_row = k;
        while (pivot_row < n && m(pivot_row, k) == 0) ++pivot_row;
        if (pivot_row == n) return 0;
        if (pivot_row != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot_row, j));
            sign = -sign;
        }
        const Int pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact: (m_ij * pivot - m_ik * m_kj) is divisible by prev
                m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = pivot;
    }
    Int det = m(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

}  // namespace schub
