#pragma once

// Exact matrices for the irreducible sl2 representations V_k realized on
// polynomials of degree <= k in one variable, their tensor action on the
// staircase space W = V_{n-1} (x) V_{n-2} (x) ... (x) V_0, weight-space
// multiplicities, and the per-irreducible scalar of F^{C(n,2)-2l} J.

#include <utility>
#include <vector>

#include "schub/int.hpp"
#include "schub/matrix.hpp"
#include "schub/polynomial.hpp"

namespace schub {

enum class Sl2Element { F, H, E, J };

// The (k+1) x (k+1) matrix of the named element on V_k in the basis
// x^0, x^1, ..., x^k, acting on coordinate columns:
//   F x^j = j x^{j-1},  H x^j = (2j-k) x^j,  E x^j = (k-j) x^{j+1},
//   J x^j = (-1)^j x^{k-j}.
IntMatrix rep_operator(int k, Sl2Element which);

// The monomial basis of W, all degrees concatenated in ascending degree and
// within each degree in the canonical weight_basis order. Size n!.
// The identification with the tensor product sends x_1^{a_1}...x_n^{a_n} to
// x^{a_1} (x) ... (x) x^{a_n}, the j-th factor living in V_{n-j}.
std::vector<Monomial> tensor_basis(int n);

struct TensorOperator {
    int n = 0;
    IntMatrix matrix;  // n! x n!, indexed by tensor_basis(n)
};

// sum_k Id (x) ... (x) sigma_{n-k}(F) (x) ... (x) Id (factor k), and the
// analogous sums for H and E. F maps the degree-l block to degree l-1,
// E to l+1, and H is the scalar 2l - C(n,2) on the degree-l block.
TensorOperator tensor_f(int n);
TensorOperator tensor_h(int n);
TensorOperator tensor_e(int n);

// rho_{n-1} (x) rho_{n-2} (x) ... (x) rho_0 applied to J: maps the degree-l
// block onto the degree-(C(n,2)-l) block with signs.
TensorOperator tensor_j(int n);

// Multiplicities (k, m_k) of V_{C(n,2)-2k} in W, for 0 <= k <= C(n,2)-k,
// with m_k = |S_n(k)| - |S_n(k-1)|. Throws std::logic_error if some m_k is
// negative (it never is; unimodality is checked, not assumed).
std::vector<std::pair<int, Int>> multiplicities(int n);

// The scalar by which sigma(F)^{C(n,2)-2l} . rho(J) acts on x^{l-k} inside
// V_{C(n,2)-2k}, computed by explicit matrix application (not the closed
// form). Magnitude (C(n,2)-l-k)!/(l-k)!, sign (-1)^{l-k}; the verification
// suite asserts both. Requires 0 <= k <= l <= C(n,2)-l.
Int irreducible_scalar(int n, int ell, int k);

}  // namespace schub
