#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schub/schubert.hpp"

using namespace schub;

namespace {

Poly mono(std::initializer_list<int> exps, Int c = 1) {
    return Poly::monomial(Monomial(std::vector<int>(exps)), c);
}

Permutation perm(std::initializer_list<int> v) { return Permutation(std::vector<int>(v)); }

}  // namespace

TEST_CASE("the S_3 table") {
    const SchubertTable t(3);
    CHECK(t.at(perm({3, 2, 1})) == mono({2, 1, 0}));
    CHECK(t.at(Permutation::identity(3)) == Poly::constant(3, 1));
    // the two degree-2 polynomials, as a set
    std::set<std::string> degree2;
    for (const auto& [w, p] : t.entries())
        if (w.length() == 2) degree2.insert(p.to_string());
    CHECK(degree2 == std::set<std::string>{"x1^2", "x1*x2"});
    // frozen from peeling descents by hand: N_2 N_1 (x1^2 x2) and N_1 N_2 (x1^2 x2)
    CHECK(t.at(perm({1, 3, 2})) == Poly::variable(3, 1) + Poly::variable(3, 2));
    CHECK(t.at(perm({2, 1, 3})) == Poly::variable(3, 1));
    CHECK(t.at(perm({2, 3, 1})) == mono({2, 0, 0}));
    CHECK(t.at(perm({3, 1, 2})) == mono({1, 1, 0}));
}

TEST_CASE("top-level closed form: S_{w0 s_k} lowers one staircase exponent") {
    for (int n = 2; n <= 5; ++n) {
        const SchubertTable t(n);
        const Permutation w0 = Permutation::longest(n);
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<int> e(n);
            for (int j = 0; j < n; ++j) e[j] = n - 1 - j;
            e[n - k - 1] -= 1;
            const Permutation w0sk = compose(w0, Permutation::transposition(n, k));
            CHECK(t.at(w0sk) == Poly::monomial(Monomial(e)));
            // and the top-level factorization w0 s_k = s_{n-k} w0
            CHECK(w0sk == compose(Permutation::transposition(n, n - k), w0));
        }
    }
}

TEST_CASE("homogeneity and staircase membership up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        const SchubertTable t(n);
        for (const auto& [w, p] : t.entries()) {
            REQUIRE(!p.is_zero());
            CHECK(p.homogeneous_degree() == w.length());
            for (const auto& [m, c] : p.terms())
                for (int j = 1; j <= n; ++j) CHECK(m.exponent(j) <= n - j);
        }
    }
}

TEST_CASE("weight basis") {
    CHECK(weight_basis(3, 0) == std::vector<Monomial>{Monomial({0, 0, 0})});
    CHECK(weight_basis(3, 3) == std::vector<Monomial>{Monomial({2, 1, 0})});
    const auto wb1 = weight_basis(3, 1);
    CHECK(std::set<Monomial, MonomialDescending>(wb1.begin(), wb1.end()) ==
          std::set<Monomial, MonomialDescending>{Monomial({1, 0, 0}), Monomial({0, 1, 0})});
    CHECK_THROWS_AS(weight_basis(3, 4), std::out_of_range);
    for (int n = 1; n <= 6; ++n) {
        const LevelCounts lc = level_counts(n);
        for (int ell = 0; ell <= choose2(n); ++ell)
            CHECK(Int(weight_basis(n, ell).size()) == lc.counts[ell]);
    }
}

TEST_CASE("leading terms are the codes of inverses and exhaust the weight basis") {
    for (int n = 2; n <= 5; ++n) {
        const SchubertTable t(n);
        for (const auto& [w, p] : t.entries()) {
            const auto [m, c] = p.leading_term();
            CHECK(c == 1);
            CHECK(m.exponents() == w.inverse().code());
        }
    }
    // the two conventions genuinely differ: 312 has code (2,0,0) but S_312 = x1*x2
    const SchubertTable t3(3);
    CHECK(t3.at(perm({3, 1, 2})).leading_term().first.exponents() != perm({3, 1, 2}).code());
}

TEST_CASE("change of basis is unimodular") {
    const SchubertTable t3(3);
    CHECK(change_of_basis(t3, 0) == IntMatrix::identity(1));
    CHECK(change_of_basis(t3, 3) == IntMatrix::identity(1));
    // rows are [x2, x1]; columns [S_132, S_213] = [x1 + x2, x1]
    IntMatrix expected(2, 2);
    expected(0, 0) = 1;
    expected(1, 0) = 1;
    expected(1, 1) = 1;
    CHECK(change_of_basis(t3, 1) == expected);
    for (int n = 1; n <= 5; ++n) {
        const SchubertTable t(n);
        for (int ell = 0; ell <= choose2(n); ++ell)
            CHECK(abs(determinant(change_of_basis(t, ell))) == 1);
    }
}

TEST_CASE("J involution") {
    CHECK(j_involution(mono({2, 1, 0})) == Poly::constant(3, -1));
    CHECK(j_involution(Poly::constant(3, 1)) == mono({2, 1, 0}));
    CHECK_THROWS_AS(j_involution(mono({3, 0, 0})), std::domain_error);
    // J maps W_l onto W_{C-l} and J^2 = (-1)^C on homogeneous input
    for (int n = 2; n <= 5; ++n) {
        const int c2 = choose2(n);
        for (int ell = 0; ell <= c2; ++ell) {
            std::set<Monomial, MonomialDescending> image;
            for (const Monomial& m : weight_basis(n, ell)) {
                const Poly jm = j_involution(Poly::monomial(m));
                CHECK(jm.term_count() == 1);
                const auto [mm, cc] = jm.leading_term();
                CHECK(mm.degree() == c2 - ell);
                CHECK(abs(cc) == 1);
                image.insert(mm);
                const Int sign = (c2 % 2 == 0) ? 1 : -1;
                CHECK(j_involution(jm) == Poly::monomial(m, sign));
            }
            CHECK(image.size() == weight_basis(n, c2 - ell).size());
        }
    }
}

TEST_CASE("nabla expansion in the Schubert basis") {
    const SchubertTable t(3);
    CHECK(nabla_schubert_expansion(t, Permutation::identity(3)).empty());

    const auto top = nabla_schubert_expansion(t, perm({3, 2, 1}));
    REQUIRE(top.size() == 2);
    CHECK(top[0] == std::pair{perm({2, 3, 1}), 1});
    CHECK(top[1] == std::pair{perm({3, 1, 2}), 2});
    // the identity itself: nabla(x1^2 x2) = 1*S_231 + 2*S_312
    CHECK(t.at(perm({3, 2, 1})).nabla() == t.at(perm({2, 3, 1})) + Int(2) * t.at(perm({3, 1, 2})));

    // length-1 elements: nabla(S_{s_k}) = k
    for (int k = 1; k <= 2; ++k) {
        const auto pairs = nabla_schubert_expansion(t, Permutation::transposition(3, k));
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].first == Permutation::identity(3));
        CHECK(pairs[0].second == k);
        CHECK(t.at(Permutation::transposition(3, k)).nabla() == Poly::constant(3, k));
    }
}

TEST_CASE("the derivative identity holds for every w up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        const SchubertTable t(n);
        for (const auto& [w, p] : t.entries()) {
            Poly rhs(n);
            for (const auto& [v, k] : nabla_schubert_expansion(t, w)) rhs = rhs + Int(k) * t.at(v);
            CHECK(p.nabla() == rhs);
        }
    }
}

TEST_CASE("Macdonald word sums") {
    const SchubertTable t(3);
    CHECK(macdonald_check(t, Permutation::identity(3)) == std::pair{Int(1), Int(1)});
    CHECK(macdonald_check(t, perm({3, 2, 1})) == std::pair{Int(6), Int(6)});
    for (int k = 1; k <= 2; ++k)
        CHECK(macdonald_check(t, Permutation::transposition(3, k)) == std::pair{Int(k), Int(k)});
    for (int n = 1; n <= 4; ++n) {
        const SchubertTable tn(n);
        for (const auto& [w, p] : tn.entries()) {
            const auto [lhs, rhs] = macdonald_check(tn, w);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("iterated nabla equals the reduced-word product sum") {
    for (int n = 2; n <= 4; ++n) {
        const SchubertTable t(n);
        for (const auto& [w, p] : t.entries()) {
            Poly it = p;
            for (int s = 0; s < w.length(); ++s) it = it.nabla();
            Int word_sum = 0;
            for (const auto& word : reduced_words(w)) {
                Int prod = 1;
                for (int a : word) prod *= a;
                word_sum += prod;
            }
            CHECK(it == Poly::constant(n, word_sum));
        }
    }
}

TEST_CASE("table rejects foreign permutations") {
    const SchubertTable t(3);
    CHECK_THROWS_AS(t.at(Permutation::identity(4)), std::out_of_range);
}
