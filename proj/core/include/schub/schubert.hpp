#pragma once

// Schubert polynomials for S_n, built by repeated divided differences from
// the staircase monomial, together with the staircase space W, its monomial
// weight basis, the signed complement involution J, the Schubert expansion
// of nabla, and the Macdonald reduced-word sum.

#include <map>
#include <utility>
#include <vector>

#include "schub/int.hpp"
#include "schub/matrix.hpp"
#include "schub/permutation.hpp"
#include "schub/polynomial.hpp"

namespace schub {

// The complete family {S_w : w in S_n}. Construction starts from
// S_{w0} = x_1^{n-1} x_2^{n-2} ... x_{n-1} and walks the weak order downward:
// whenever length(s_k * w) = length(w) - 1, the polynomial for s_k * w is the
// k-th divided difference of the one for w. Each permutation is reached along
// many paths; the constructor asserts that all paths agree and throws
// std::logic_error otherwise (that would mean a convention or arithmetic bug).
class SchubertTable {
public:
    explicit SchubertTable(int n);

    int n() const { return n_; }
    const Poly& at(const Permutation& w) const;
    const std::map<Permutation, Poly>& entries() const { return table_; }

private:
    int n_;
    std::map<Permutation, Poly> table_;
};

// All staircase exponent vectors (0 <= a_j <= n-j) of total degree ell, in
// descending order under the x_n > ... > x_1 lexicographic comparison. This
// is the canonical monomial basis of W_ell; its size is |S_n(ell)|.
std::vector<Monomial> weight_basis(int n, int ell);

// Square matrix expressing the Schubert polynomials of degree ell (columns,
// ascending lex on one-line notation) in the weight_basis monomials (rows).
// Its determinant is +-1; the verification suite asserts this.
IntMatrix change_of_basis(const SchubertTable& t, int ell);

// J(prod x_j^{a_j}) = (-1)^{sum a_j} prod x_j^{n-j-a_j}, extended linearly.
// Maps W_ell onto W_{C(n,2)-ell}; throws std::domain_error if a term of f
// lies outside the staircase.
Poly j_involution(const Poly& f);

// The Schubert expansion of nabla(S_w): pairs (w * s_k, k) over the right
// descents k of w, so that nabla(S_w) = sum k * S_{w s_k}.
std::vector<std::pair<Permutation, int>> nabla_schubert_expansion(const SchubertTable& t,
                                                                  const Permutation& w);

// Macdonald's identity data for w: first component is the sum over reduced
// words a of w of the letter product a_1 a_2 ... a_k, second component is
// k! * S_w(1,...,1). The identity asserts they are equal.
std::pair<Int, Int> macdonald_check(const SchubertTable& t, const Permutation& w);

}  // namespace schub
