#include "schub/polynomial.hpp"

#include <stdexcept>

namespace schub {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("monomial: needs at least one variable");
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("monomial: negative exponent");
}

Monomial Monomial::constant(int nvars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
}

std::strong_ordering Monomial::compare(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) return a.nvars() <=> b.nvars();
    for (int j = a.nvars() - 1; j >= 0; --j) {
        if (a.exps_[j] != b.exps_[j]) return a.exps_[j] <=> b.exps_[j];
    }
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
    std::string s;
    for (int j = 0; j < nvars(); ++j) {
        if (exps_[j] == 0) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(j + 1);
        if (exps_[j] > 1) s += "^" + std::to_string(exps_[j]);
    }
    return s.empty() ? "1" : s;
}

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("poly: needs at least one variable");
}

Poly Poly::constant(int nvars, Int c) {
    Poly f(nvars);
    f.add_term(Monomial::constant(nvars), c);
    return f;
}

Poly Poly::monomial(Monomial m, Int c) {
    Poly f(m.nvars());
    f.add_term(m, c);
    return f;
}

Poly Poly::variable(int nvars, int j) {
    Poly f(nvars);
    f.check_var_index(j, nvars, "variable");
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[j - 1] = 1;
    f.add_term(Monomial(std::move(e)), 1);
    return f;
}

Int Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    if (m.nvars() != nvars_) throw std::invalid_argument("poly: monomial has wrong variable count");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& g) const {
    if (nvars_ != g.nvars_)
        throw std::invalid_argument("poly: ring mismatch (" + std::to_string(nvars_) + " vs " +
                                    std::to_string(g.nvars_) + " variables)");
}

void Poly::check_var_index(int j, int hi, const char* what) const {
    if (j < 1 || j > hi)
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(j) +
                                " out of range 1.." + std::to_string(hi));
}

Poly Poly::operator+(const Poly& g) const {
    check_same_ring(g);
    Poly r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& g) const {
    check_same_ring(g);
    Poly r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::operator*(const Poly& g) const {
    check_same_ring(g);
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : g.terms_) {
            std::vector<int> e(ma.exponents());
            for (int j = 0; j < nvars_; ++j) e[j] += mb.exponents()[j];
            r.add_term(Monomial(std::move(e)), ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Int& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Poly Poly::swap_action(int i) const {
    check_var_index(i, nvars_ - 1, "swap_action");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(m.exponents());
        std::swap(e[i - 1], e[i]);
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

Poly Poly::divided_difference(int i) const {
    check_var_index(i, nvars_ - 1, "divided_difference");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        const int p = m.exponents()[i - 1];
        const int q = m.exponents()[i];
        if (p == q) continue;  // the symmetric part cancels exactly
        const int lo = std::min(p, q), hi = std::max(p, q);
        const Int sgn = (p > q) ? c : -c;
        std::vector<int> e(m.exponents());
        for (int t = 0; t < hi - lo; ++t) {
            e[i - 1] = lo + t;
            e[i] = hi - 1 - t;
            r.add_term(Monomial(e), sgn);
        }
    }
    return r;
}

Poly Poly::partial_derivative(int j) const {
    check_var_index(j, nvars_, "partial_derivative");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        const int a = m.exponents()[j - 1];
        if (a == 0) continue;
        std::vector<int> e(m.exponents());
        e[j - 1] = a - 1;
        r.add_term(Monomial(std::move(e)), c * a);
    }
    return r;
}

Poly Poly::nabla() const {
    Poly r(nvars_);
    for (int j = 1; j <= nvars_; ++j) r = r + partial_derivative(j);
    return r;
}

Int Poly::evaluate_all_ones() const {
    Int s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

std::pair<Monomial, Int> Poly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
    return *terms_.begin();
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        const std::string vars = m.to_string();
        if (vars == "1") {
            s += mag.str();
        } else if (mag == 1) {
            s += vars;
        } else {
            s += mag.str() + "*" + vars;
        }
    }
    return s;
}

}  // namespace schub
