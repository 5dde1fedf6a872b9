#pragma once

// Verification suites over the whole library: each suite runs a family of
// exact identities and reports per-item results. Shared by the CLI and the
// acceptance harness.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schub/polynomial.hpp"

namespace schub {

struct CheckItem {
    std::string witness;  // the w or ell (or sub-check name) this line is about
    bool pass = true;
    std::string text;          // human-readable line
    nlohmann::json data;       // same numeric content, structured
};

struct SuiteResult {
    std::string suite;
    int n = 0;
    std::uint64_t seed = 0;  // meaningful only for randomized suites
    long checks_run = 0;
    std::vector<CheckItem> items;  // informational lines plus every failure
    bool pass = true;
    double ms = 0.0;
};

// nabla(S_w) = sum over right descents k of k * S_{w s_k}, for every w in S_n.
SuiteResult verify_prop1(int n);

// Reduced-word sum vs k! * S_w(1,...,1): every w for n <= 5; for n >= 6 the
// longest element (n == 6 only; beyond that its word set is astronomically
// large) plus 20 seeded random permutations.
SuiteResult verify_macdonald(int n, std::uint64_t seed);

// Staircase membership, homogeneity, distinct leading terms that exhaust the
// weight basis, |det change_of_basis| = 1 per degree, and the empirical
// record of which code convention the leading exponents follow.
SuiteResult verify_basis(int n);

// nabla commutes with every divided difference: checked on >= 100 seeded
// random integer polynomials per i, degree <= 6.
SuiteResult verify_lemma2(int n, std::uint64_t seed);

// sl2 identities: commutators on V_k (k <= 10) and, for n <= 5, on W;
// tensor_f vs the nabla matrix and tensor_j vs the J matrix; weight-space
// scalars of H; multiplicity dimension count; irreducible scalars vs both
// the factorial-ratio closed form and the determinant formula's value.
SuiteResult verify_sl2_suite(int n);

// |det M~(ell)| vs stanley_rhs for every valid ell, plus (n <= 5) the
// entrywise equality of the two M-matrix constructions.
SuiteResult verify_stanley_suite(int n);

// Dispatch by name: one of prop1, macdonald, basis, lemma2, sl2, stanley, all.
// Throws std::invalid_argument for unknown names or, unless allow_large, for
// n beyond the per-suite runtime guards (stanley needs n <= 6 by default).
std::vector<SuiteResult> verify_suites(const std::string& which, int n, std::uint64_t seed,
                                       bool allow_large = false);

// Random polynomial built from 1..max_terms monomials of degree <= max_degree
// with coefficients in [-9, 9]; colliding monomials merge. Used by the
// randomized suites and tests.
Poly random_poly(int nvars, int max_degree, int max_terms, std::mt19937_64& rng);

}  // namespace schub
