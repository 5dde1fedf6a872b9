#include "schub/schubert.hpp"

#include <algorithm>
#include <stdexcept>

namespace schub {

namespace {

Poly staircase_monomial(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) e[j] = n - 1 - j;
    return Poly::monomial(Monomial(std::move(e)));
}

}  // namespace

SchubertTable::SchubertTable(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("schubert table: n must be positive");

    std::vector<std::vector<Permutation>> by_length(choose2(n) + 1);
    for (Permutation& w : all_permutations(n)) by_length[w.length()].push_back(std::move(w));

    const Permutation w0 = Permutation::longest(n);
    table_.emplace(w0, staircase_monomial(n));

    for (int ell = choose2(n); ell >= 1; --ell) {
        for (const Permutation& w : by_length[ell]) {
            const Poly& sw = table_.at(w);
            for (int k : w.left_descents()) {
                Permutation u = compose(Permutation::transposition(n, k), w);
                Poly cand = sw.divided_difference(k);
                auto it = table_.find(u);
                if (it == table_.end()) {
                    table_.emplace(std::move(u), std::move(cand));
                } else if (it->second != cand) {
                    throw std::logic_error("schubert table: two descent paths disagree at " +
                                           schub::to_string(u));
                }
            }
        }
        if (ell == choose2(n)) {
            // Top-level cross-check: S_{w0 s_k} is the staircase monomial with
            // the exponent at position n-k lowered by one.
            for (int k = 1; k <= n - 1; ++k) {
                std::vector<int> e(static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j) e[j] = n - 1 - j;
                e[n - k - 1] -= 1;
                if (at(compose(w0, Permutation::transposition(n, k))) !=
                    Poly::monomial(Monomial(std::move(e))))
                    throw std::logic_error("schubert table: closed form for S_{w0 s_k} failed at k=" +
                                           std::to_string(k));
            }
        }
    }
}

const Poly& SchubertTable::at(const Permutation& w) const {
    auto it = table_.find(w);
    if (it == table_.end())
        throw std::out_of_range("schubert table: no entry for " + schub::to_string(w) +
                                " (degree mismatch?)");
    return it->second;
}

std::vector<Monomial> weight_basis(int n, int ell) {
    if (n < 1) throw std::invalid_argument("weight_basis: n must be positive");
    if (ell < 0 || ell > choose2(n))
        throw std::out_of_range("weight_basis: degree " + std::to_string(ell) +
                                " out of range 0.." + std::to_string(choose2(n)));
    std::vector<Monomial> basis;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    // odometer over 0 <= e_j <= n-1-j (0-based j)
    for (;;) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg == ell) basis.emplace_back(e);
        int j = 0;
        while (j < n && e[j] == n - 1 - j) e[j++] = 0;
        if (j == n) break;
        ++e[j];
    }
    std::sort(basis.begin(), basis.end(), MonomialDescending{});
    return basis;
}

IntMatrix change_of_basis(const SchubertTable& t, int ell) {
    const int n = t.n();
    std::vector<Monomial> rows = weight_basis(n, ell);
    std::vector<Permutation> cols;
    for (const auto& [w, sw] : t.entries())
        if (w.length() == ell) cols.push_back(w);  // map order is ascending lex

    IntMatrix m(rows.size(), cols.size());
    std::map<Monomial, std::size_t, MonomialDescending> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [mono, coeff] : t.at(cols[j]).terms()) {
            auto it = row_of.find(mono);
            if (it == row_of.end())
                throw std::logic_error("change_of_basis: Schubert term outside the staircase");
            m(it->second, j) = coeff;
        }
    }
    return m;
}

Poly j_involution(const Poly& f) {
    const int n = f.nvars();
    Poly r(n);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(m.exponents());
        int deg = 0;
        for (int j = 0; j < n; ++j) {
            if (e[j] > n - 1 - j)
                throw std::domain_error("j_involution: term " + m.to_string() +
                                        " lies outside the staircase for n=" + std::to_string(n));
            deg += e[j];
            e[j] = n - 1 - j - e[j];
        }
        r = r + Poly::monomial(Monomial(std::move(e)), deg % 2 == 0 ? c : Int(-c));
    }
    return r;
}

std::vector<std::pair<Permutation, int>> nabla_schubert_expansion(const SchubertTable& t,
                                                                  const Permutation& w) {
    if (w.degree() != t.n())
        throw std::invalid_argument("nabla_schubert_expansion: degree mismatch");
    std::vector<std::pair<Permutation, int>> out;
    for (int k : w.right_descents())
        out.emplace_back(compose(w, Permutation::transposition(t.n(), k)), k);
    return out;
}

std::pair<Int, Int> macdonald_check(const SchubertTable& t, const Permutation& w) {
    Int word_sum = 0;
    for_each_reduced_word(w, [&](const std::vector<int>& word) {
        Int prod = 1;
        for (int a : word) prod *= a;
        word_sum += prod;
    });
    const Int rhs = factorial(static_cast<unsigned>(w.length())) * t.at(w).evaluate_all_ones();
    return {word_sum, rhs};
}

}  // namespace schub
