#pragma once

// Stanley's M-matrices, built two independent ways (combinatorially from
// weak-order covers, and as the matrices of nabla in the Schubert basis),
// the between-levels product M~, the determinant formula's right-hand side,
// and the comparison of the two.

#include <vector>

#include "schub/int.hpp"
#include "schub/matrix.hpp"
#include "schub/permutation.hpp"
#include "schub/schubert.hpp"

namespace schub {

// All w in S_n of length ell, in ascending lexicographic order on one-line
// notation. This is the canonical row/column order for every Stanley matrix.
struct LevelIndex {
    int n = 0;
    int ell = 0;
    std::vector<Permutation> perms;
};

LevelIndex level_index(int n, int ell);

// Rows indexed by S_n(ell-1), columns by S_n(ell); entry (u, v) is k when
// v = u * s_k and 0 otherwise (1 <= ell <= C(n,2)).
IntMatrix m_matrix(int n, int ell);

// The same matrix obtained by expanding nabla(S_v) in the Schubert basis of
// degree ell-1 (greedy leading-term reduction). Must equal m_matrix(n, ell)
// entry for entry; throws std::logic_error if an expansion does not terminate
// in the basis.
IntMatrix m_matrix_via_nabla(const SchubertTable& t, int ell);

// M_{ell+1} M_{ell+2} ... M_{C(n,2)-ell}; requires 0 <= ell <= C(n,2)-ell.
// The empty product (2*ell = C(n,2)) is the identity on S_n(ell).
IntMatrix m_tilde(int n, int ell);

// prod_{k=0}^{ell} ((ell-k+1)(ell-k+2)...(C(n,2)-ell-k))^{m_k} with
// m_k = |S_n(k)| - |S_n(k-1)|; an empty inner range contributes 1.
// Nonnegativity of the exponents is asserted, not assumed.
Int stanley_rhs(int n, int ell);

struct StanleyReport {
    int n = 0;
    int ell = 0;
    Int det_abs;   // |det M~(ell)|
    Int rhs;       // stanley_rhs(n, ell)
    bool equal = false;
    int sign = 0;  // sign of det under the canonical LevelIndex ordering
};

// Computes both sides for one (n, ell). Inequality is reported, not thrown.
StanleyReport verify_stanley(int n, int ell);

}  // namespace schub
