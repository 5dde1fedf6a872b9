#pragma once

// Sparse multivariate polynomials over arbitrary-precision integers, with the
// operators the Schubert machinery needs: the s_i exponent swap, Newton
// divided differences, partial derivatives and their sum, evaluation at
// (1,...,1), and leading terms under the x_n > ... > x_1 lexicographic order.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schub/int.hpp"

namespace schub {

// Exponent vector of a power product x_1^{a_1} ... x_n^{a_n}.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial constant(int nvars);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    int exponent(int j) const { return exps_[j - 1]; }  // 1-based variable index
    const std::vector<int>& exponents() const { return exps_; }

    // Pure lexicographic order reading the LAST variable first, so that
    // x_n > x_{n-1} > ... > x_1. Used for leading terms and as the canonical
    // iteration order (descending) everywhere.
    static std::strong_ordering compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial&) const = default;

    std::string to_string() const;  // "x1^2*x2"; the empty product is "1"

private:
    std::vector<int> exps_;
};

struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) == std::strong_ordering::greater;
    }
};

class Poly {
public:
    using TermMap = std::map<Monomial, Int, MonomialDescending>;

    // The zero polynomial in nvars variables.
    explicit Poly(int nvars);

    static Poly constant(int nvars, Int c);
    static Poly monomial(Monomial m, Int c = 1);
    static Poly variable(int nvars, int j);  // x_j, 1-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // Terms in canonical (descending) order; no stored coefficient is zero.
    const TermMap& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;

    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator-() const;
    Poly operator*(const Poly& g) const;
    Poly scaled(const Int& c) const;

    // Exchanges the exponents of x_i and x_{i+1} in every term (1 <= i < n).
    Poly swap_action(int i) const;

    // Newton divided difference (f - s_i.f) / (x_i - x_{i+1}), computed
    // term by term via the telescoping identity
    //   (x^p y^q - x^q y^p)/(x - y) = sum_{t=0}^{p-q-1} x^{q+t} y^{p-1-t}   (p > q),
    // so the division is exact by construction and never leaves the integers.
    Poly divided_difference(int i) const;

    Poly partial_derivative(int j) const;  // formal d/dx_j, 1 <= j <= n
    Poly nabla() const;                    // sum of all partial derivatives

    Int evaluate_all_ones() const;  // sum of coefficients

    // Maximal term under the x_n > ... > x_1 order; throws on the zero polynomial.
    std::pair<Monomial, Int> leading_term() const;

    // Common degree of all terms, or nullopt if inhomogeneous or zero.
    std::optional<int> homogeneous_degree() const;

    std::string to_string() const;  // zero prints as "0"

    bool operator==(const Poly&) const = default;

private:
    void add_term(const Monomial& m, const Int& c);
    void check_same_ring(const Poly& g) const;
    void check_var_index(int j, int hi, const char* what) const;

    int nvars_;
    TermMap terms_;
};

inline Poly operator*(const Int& c, const Poly& f) { return f.scaled(c); }

}  // namespace schub
