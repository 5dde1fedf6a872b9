#include "schub/stanley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace schub {

LevelIndex level_index(int n, int ell) {
    if (ell < 0 || ell > choose2(n))
        throw std::out_of_range("level_index: length " + std::to_string(ell) + " out of range 0.." +
                                std::to_string(choose2(n)));
    LevelIndex idx{n, ell, {}};
    for (Permutation& w : all_permutations(n))
        if (w.length() == ell) idx.perms.push_back(std::move(w));  // already lex ascending
    return idx;
}

namespace {

std::size_t position_of(const std::vector<Permutation>& perms, const Permutation& w) {
    auto it = std::lower_bound(perms.begin(), perms.end(), w);
    return static_cast<std::size_t>(it - perms.begin());
}

}  // namespace

IntMatrix m_matrix(int n, int ell) {
    if (ell < 1 || ell > choose2(n))
        throw std::out_of_range("m_matrix: level " + std::to_string(ell) + " out of range 1.." +
                                std::to_string(choose2(n)));
    const LevelIndex rows = level_index(n, ell - 1);
    const LevelIndex cols = level_index(n, ell);
    IntMatrix m(rows.perms.size(), cols.perms.size());
    for (std::size_t i = 0; i < rows.perms.size(); ++i) {
        const Permutation& u = rows.perms[i];
        const auto desc = u.right_descents();
        for (int k = 1; k <= n - 1; ++k) {
            if (std::find(desc.begin(), desc.end(), k) != desc.end()) continue;  // ascents only
            Permutation v = compose(u, Permutation::transposition(n, k));
            m(i, position_of(cols.perms, v)) = k;
        }
    }
    return m;
}

IntMatrix m_matrix_via_nabla(const SchubertTable& t, int ell) {
    const int n = t.n();
    if (ell < 1 || ell > choose2(n))
        throw std::out_of_range("m_matrix_via_nabla: level " + std::to_string(ell) +
                                " out of range 1.." + std::to_string(choose2(n)));
    const LevelIndex rows = level_index(n, ell - 1);
    const LevelIndex cols = level_index(n, ell);

    // Leading monomials at level ell-1 are pairwise distinct (the code map is
    // a bijection), which makes the greedy reduction below well defined.
    std::map<Monomial, std::size_t, MonomialDescending> row_by_leading;
    for (std::size_t i = 0; i < rows.perms.size(); ++i)
        row_by_leading.emplace(t.at(rows.perms[i]).leading_term().first, i);

    IntMatrix m(rows.perms.size(), cols.perms.size());
    for (std::size_t j = 0; j < cols.perms.size(); ++j) {
        Poly residual = t.at(cols.perms[j]).nabla();
        while (!residual.is_zero()) {
            auto [mono, coeff] = residual.leading_term();
            auto it = row_by_leading.find(mono);
            if (it == row_by_leading.end())
                throw std::logic_error("m_matrix_via_nabla: leading term " + mono.to_string() +
                                       " of a residual is not a Schubert leading term");
            m(it->second, j) = coeff;
            residual = residual - coeff * t.at(rows.perms[it->second]);
        }
    }
    return m;
}

IntMatrix m_tilde(int n, int ell) {
    const int c2 = choose2(n);
    if (ell < 0 || ell > c2 - ell)
        throw std::out_of_range("m_tilde: level " + std::to_string(ell) +
                                " violates 0 <= ell <= C(n,2)-ell");
    IntMatrix prod = IntMatrix::identity(level_index(n, ell).perms.size());
    for (int j = ell + 1; j <= c2 - ell; ++j) prod = mat_mul(prod, m_matrix(n, j));
    return prod;
}

Int stanley_rhs(int n, int ell) {
    const int c2 = choose2(n);
    if (ell < 0 || ell > c2 - ell)
        throw std::out_of_range("stanley_rhs: level " + std::to_string(ell) +
                                " violates 0 <= ell <= C(n,2)-ell");
    const LevelCounts lc = level_counts(n);
    Int rhs = 1;
    for (int k = 0; k <= ell; ++k) {
        const Int m_k = lc.counts[k] - (k > 0 ? lc.counts[k - 1] : Int(0));
        if (m_k < 0)
            throw std::logic_error("stanley_rhs: negative multiplicity at k=" + std::to_string(k));
        const Int factor = range_product(ell - k + 1, c2 - ell - k);
        Int power = 1;
        for (Int e = 0; e < m_k; ++e) power *= factor;
        rhs *= power;
    }
    return rhs;
}

StanleyReport verify_stanley(int n, int ell) {
    StanleyReport r;
    r.n = n;
    r.ell = ell;
    const Int det = determinant(m_tilde(n, ell));
    r.det_abs = abs(det);
    r.sign = det.sign();
    r.rhs = stanley_rhs(n, ell);
    r.equal = (r.det_abs == r.rhs);
    return r;
}

}  // namespace schub
