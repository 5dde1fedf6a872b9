#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "schub/schubert.hpp"
#include "schub/sl2.hpp"
#include "schub/stanley.hpp"

using namespace schub;

namespace {

IntMatrix comm(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b) - mat_mul(b, a); }

IntMatrix scaled(const IntMatrix& m, int c) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = c * m(i, j);
    return r;
}

// column of x^j in V_k
IntMatrix unit(int dim, int j) {
    IntMatrix v(dim, 1);
    v(j, 0) = 1;
    return v;
}

}  // namespace

TEST_CASE("rep_operator actions on V_2") {
    const IntMatrix f = rep_operator(2, Sl2Element::F);
    CHECK(mat_mul(f, unit(3, 2)) == scaled(unit(3, 1), 2));  // x^2 -> 2x
    CHECK(mat_mul(f, unit(3, 1)) == unit(3, 0));             // x -> 1
    CHECK(mat_mul(f, unit(3, 0)) == IntMatrix(3, 1));        // 1 -> 0

    const IntMatrix j = rep_operator(2, Sl2Element::J);
    CHECK(mat_mul(j, unit(3, 1)) == scaled(unit(3, 1), -1));  // x -> -x
    CHECK(mat_mul(j, unit(3, 0)) == unit(3, 2));              // 1 -> x^2

    const IntMatrix h = rep_operator(2, Sl2Element::H);
    CHECK(mat_mul(h, unit(3, 0)) == scaled(unit(3, 0), -2));
    const IntMatrix e = rep_operator(2, Sl2Element::E);
    CHECK(mat_mul(e, unit(3, 0)) == scaled(unit(3, 1), 2));  // 1 -> 2x
}

TEST_CASE("V_0 is trivial") {
    CHECK(rep_operator(0, Sl2Element::F) == IntMatrix(1, 1));
    CHECK(rep_operator(0, Sl2Element::H) == IntMatrix(1, 1));
    CHECK(rep_operator(0, Sl2Element::E) == IntMatrix(1, 1));
    CHECK(rep_operator(0, Sl2Element::J) == IntMatrix::identity(1));
}

TEST_CASE("sl2 commutators and J^2 on V_k, k <= 10") {
    for (int k = 0; k <= 10; ++k) {
        const IntMatrix f = rep_operator(k, Sl2Element::F);
        const IntMatrix h = rep_operator(k, Sl2Element::H);
        const IntMatrix e = rep_operator(k, Sl2Element::E);
        const IntMatrix j = rep_operator(k, Sl2Element::J);
        CHECK(comm(h, e) == scaled(e, 2));
        CHECK(comm(h, f) == scaled(f, -2));
        CHECK(comm(e, f) == h);
        CHECK(mat_mul(j, j) ==
              scaled(IntMatrix::identity(static_cast<std::size_t>(k) + 1), k % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("tensor basis is n! monomials in degree-major order") {
    for (int n = 1; n <= 5; ++n) {
        const auto basis = tensor_basis(n);
        CHECK(Int(basis.size()) == factorial(static_cast<unsigned>(n)));
        for (std::size_t i = 1; i < basis.size(); ++i)
            CHECK(basis[i - 1].degree() <= basis[i].degree());
    }
}

TEST_CASE("tensor_f on S_1 is the 1x1 zero operator") {
    CHECK(tensor_f(1).matrix == IntMatrix(1, 1));
}

TEST_CASE("tensor operators match the polynomial operators on W") {
    for (int n = 2; n <= 4; ++n) {
        const auto basis = tensor_basis(n);
        std::map<Monomial, std::size_t, MonomialDescending> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

        const TensorOperator f = tensor_f(n);
        const TensorOperator j = tensor_j(n);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            // nabla column
            const Poly nab = Poly::monomial(basis[c]).nabla();
            for (std::size_t r = 0; r < basis.size(); ++r)
                CHECK(f.matrix(r, c) == nab.coefficient(basis[r]));
            // J column
            const Poly jm = j_involution(Poly::monomial(basis[c]));
            for (std::size_t r = 0; r < basis.size(); ++r)
                CHECK(j.matrix(r, c) == jm.coefficient(basis[r]));
        }
    }
}

TEST_CASE("tensor_j of S_3 sends x1^2 x2 to -1") {
    const auto basis = tensor_basis(3);
    std::size_t top = 0, constant = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] == Monomial({2, 1, 0})) top = i;
        if (basis[i] == Monomial({0, 0, 0})) constant = i;
    }
    const TensorOperator j = tensor_j(3);
    for (std::size_t r = 0; r < basis.size(); ++r)
        CHECK(j.matrix(r, top) == (r == constant ? Int(-1) : Int(0)));
}

TEST_CASE("commutators hold on W and H is the weight scalar") {
    for (int n = 2; n <= 4; ++n) {
        const TensorOperator f = tensor_f(n);
        const TensorOperator h = tensor_h(n);
        const TensorOperator e = tensor_e(n);
        CHECK(comm(h.matrix, e.matrix) == scaled(e.matrix, 2));
        CHECK(comm(h.matrix, f.matrix) == scaled(f.matrix, -2));
        CHECK(comm(e.matrix, f.matrix) == h.matrix);

        const auto basis = tensor_basis(n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t jj = 0; jj < basis.size(); ++jj)
                CHECK(h.matrix(i, jj) ==
                      (i == jj ? Int(2 * basis[i].degree() - choose2(n)) : Int(0)));
    }
}

TEST_CASE("tensor_f maps the degree block l to l-1") {
    const int n = 4;
    const auto basis = tensor_basis(n);
    const TensorOperator f = tensor_f(n);
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (f.matrix(r, c) != 0) CHECK(basis[r].degree() == basis[c].degree() - 1);
}

TEST_CASE("multiplicities and the dimension count") {
    CHECK(multiplicities(2) == std::vector<std::pair<int, Int>>{{0, 1}});
    CHECK(multiplicities(3) == std::vector<std::pair<int, Int>>{{0, 1}, {1, 1}});
    CHECK(multiplicities(4) ==
          std::vector<std::pair<int, Int>>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
    for (int n = 1; n <= 7; ++n) {
        Int dim = 0;
        for (const auto& [k, m_k] : multiplicities(n)) {
            CHECK(m_k >= 0);
            dim += m_k * (choose2(n) - 2 * k + 1);
        }
        CHECK(dim == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("irreducible scalars by matrix application") {
    CHECK(irreducible_scalar(3, 1, 1) == 1);
    CHECK(irreducible_scalar(3, 1, 0) == -2);
    CHECK_THROWS_AS(irreducible_scalar(3, 2, 0), std::out_of_range);  // needs ell <= C-ell

    for (int n = 2; n <= 5; ++n) {
        const int c2 = choose2(n);
        for (int ell = 0; ell <= c2 - ell; ++ell) {
            for (int k = 0; k <= ell; ++k) {
                const Int s = irreducible_scalar(n, ell, k);
                CHECK(abs(s) == range_product(ell - k + 1, c2 - ell - k));
                CHECK((s < 0) == ((ell - k) % 2 == 1));
            }
            // ell = k: the full falling product 1*2*...*(C-2*ell)
            if (ell <= c2 - ell)
                CHECK(abs(irreducible_scalar(n, ell, ell)) ==
                      factorial(static_cast<unsigned>(c2 - 2 * ell)));
        }
    }
}

TEST_CASE("scalar products reproduce the determinant formula") {
    for (int n = 2; n <= 5; ++n) {
        for (int ell = 0; ell <= choose2(n) - ell; ++ell) {
            Int prod = 1;
            for (const auto& [k, m_k] : multiplicities(n)) {
                if (k > ell) break;
                const Int mag = abs(irreducible_scalar(n, ell, k));
                for (Int t = 0; t < m_k; ++t) prod *= mag;
            }
            CHECK(prod == stanley_rhs(n, ell));
        }
    }
}
