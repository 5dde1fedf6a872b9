#include "schub/sl2.hpp"

#include <map>
#include <stdexcept>

#include "schub/permutation.hpp"
#include "schub/schubert.hpp"

namespace schub {

IntMatrix rep_operator(int k, Sl2Element which) {
    if (k < 0) throw std::invalid_argument("rep_operator: highest weight must be nonnegative");
    const std::size_t dim = static_cast<std::size_t>(k) + 1;
    IntMatrix m(dim, dim);
    switch (which) {
        case Sl2Element::F:
            for (int j = 1; j <= k; ++j) m(j - 1, j) = j;
            break;
        case Sl2Element::H:
            for (int j = 0; j <= k; ++j) m(j, j) = 2 * j - k;
            break;
        case Sl2Element::E:
            for (int j = 0; j < k; ++j) m(j + 1, j) = k - j;
            break;
        case Sl2Element::J:
            for (int j = 0; j <= k; ++j) m(k - j, j) = (j % 2 == 0) ? 1 : -1;
            break;
    }
    return m;
}

std::vector<Monomial> tensor_basis(int n) {
    std::vector<Monomial> basis;
    for (int ell = 0; ell <= choose2(n); ++ell)
        for (Monomial& m : weight_basis(n, ell)) basis.push_back(std::move(m));
    return basis;
}

namespace {

struct WIndex {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t, MonomialDescending> index;

    explicit WIndex(int n) : basis(tensor_basis(n)) {
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    }
};

// Factor j (0-based) of the tensor product acts on the exponent of x_{j+1}
// and is a matrix on V_{n-1-j}, of size n-j.
TensorOperator tensor_lie_sum(int n, Sl2Element which) {
    const WIndex w(n);
    std::vector<IntMatrix> factor;
    for (int j = 0; j < n; ++j) factor.push_back(rep_operator(n - 1 - j, which));

    TensorOperator op{n, IntMatrix(w.basis.size(), w.basis.size())};
    for (std::size_t c = 0; c < w.basis.size(); ++c) {
        const std::vector<int>& a = w.basis[c].exponents();
        for (int j = 0; j < n; ++j) {
            for (int r = 0; r < n - j; ++r) {
                const Int& v = factor[j](r, a[j]);
                if (v == 0) continue;
                std::vector<int> b(a);
                b[j] = r;
                op.matrix(w.index.at(Monomial(std::move(b))), c) += v;
            }
        }
    }
    return op;
}

}  // namespace

TensorOperator tensor_f(int n) { return tensor_lie_sum(n, Sl2Element::F); }
TensorOperator tensor_h(int n) { return tensor_lie_sum(n, Sl2Element::H); }
TensorOperator tensor_e(int n) { return tensor_lie_sum(n, Sl2Element::E); }

TensorOperator tensor_j(int n) {
    const WIndex w(n);
    std::vector<IntMatrix> factor;
    for (int j = 0; j < n; ++j) factor.push_back(rep_operator(n - 1 - j, Sl2Element::J));

    TensorOperator op{n, IntMatrix(w.basis.size(), w.basis.size())};
    for (std::size_t c = 0; c < w.basis.size(); ++c) {
        const std::vector<int>& a = w.basis[c].exponents();
        // each factor column holds a single nonzero entry, so the column of
        // the full Kronecker product is the product of those entries
        Int coeff = 1;
        std::vector<int> b(a.size(), 0);
        for (int j = 0; j < n; ++j) {
            for (int r = 0; r < n - j; ++r) {
                const Int& v = factor[j](r, a[j]);
                if (v != 0) {
                    b[j] = r;
                    coeff *= v;
                    break;
                }
            }
        }
        op.matrix(w.index.at(Monomial(std::move(b))), c) = coeff;
    }
    return op;
}

std::vector<std::pair<int, Int>> multiplicities(int n) {
    const LevelCounts lc = level_counts(n);
    const int c2 = choose2(n);
    std::vector<std::pair<int, Int>> out;
    for (int k = 0; k <= c2 - k; ++k) {
        Int m_k = lc.counts[k] - (k > 0 ? lc.counts[k - 1] : Int(0));
        if (m_k < 0)
            throw std::logic_error("multiplicities: negative multiplicity at k=" + std::to_string(k));
        out.emplace_back(k, std::move(m_k));
    }
    return out;
}

Int irreducible_scalar(int n, int ell, int k) {
    const int c2 = choose2(n);
    if (!(0 <= k && k <= ell && ell <= c2 - ell))
        throw std::out_of_range("irreducible_scalar: need 0 <= k <= ell <= C(n,2)-ell");
    const int hw = c2 - 2 * k;  // acting inside V_hw
    IntMatrix vec(static_cast<std::size_t>(hw) + 1, 1);
    vec(ell - k, 0) = 1;

    vec = mat_mul(rep_operator(hw, Sl2Element::J), vec);
    const IntMatrix f = rep_operator(hw, Sl2Element::F);
    for (int t = 0; t < c2 - 2 * ell; ++t) vec = mat_mul(f, vec);

    Int scalar = vec(ell - k, 0);
    for (std::size_t i = 0; i < vec.rows(); ++i)
        if (i != static_cast<std::size_t>(ell - k) && vec(i, 0) != 0)
            throw std::logic_error("irreducible_scalar: image is not a multiple of x^{ell-k}");
    return scalar;
}

}  // namespace schub
