#pragma once

// Elements of the symmetric group S_n in one-line notation, together with
// the statistics this library is built on: Coxeter length, Lehmer code,
// descents, reduced words and the Mahonian level counts.

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schub/int.hpp"

namespace schub {

// One-line notation is 1-based: w(i) = one_line()[i-1], values 1..n.
// Immutable after construction.
class Permutation {
public:
    // Validates that `one_line` is a permutation of 1..n; throws
    // std::invalid_argument naming the offending value otherwise.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    // Adjacent transposition s_k (1 <= k <= n-1).
    static Permutation transposition(int n, int k);
    // Longest element w0 = [n, n-1, ..., 1].
    static Permutation longest(int n);

    int degree() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[i - 1]; }  // w(i), 1-based
    const std::vector<int>& one_line() const { return values_; }

    Permutation inverse() const;

    // Number of inversions #{i < j : w(i) > w(j)}.
    int length() const;

    // Lehmer code: entry j is #{k > j : w(k) < w(j)}, 1-based positions.
    std::vector<int> code() const;

    // {k : w(k) > w(k+1)}; exactly the k with length(w * s_k) = length(w) - 1.
    std::vector<int> right_descents() const;

    // {k : k+1 appears left of k in w}; the k with length(s_k * w) = length(w) - 1.
    std::vector<int> left_descents() const;

    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    // Lexicographic on one-line notation; the canonical order for matrix indexing.
    auto operator<=>(const Permutation& o) const { return values_ <=> o.values_; }

private:
    std::vector<int> values_;
};

// Composition convention pinned for the whole library: (u*v)(i) = u(v(i)).
// Hence w * s_k swaps positions k,k+1 of w, and s_k * w swaps values k,k+1.
Permutation compose(const Permutation& u, const Permutation& v);

// Accepts "2,3,1" and, for n <= 9, the compact digit string "231".
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& w);

// All of S_n in ascending lexicographic order on one-line notation.
std::vector<Permutation> all_permutations(int n);

// Visits every reduced word of w in ascending lexicographic order.
// Enumeration peels first letters: k is a valid first letter exactly when
// length(s_k * w) = length(w) - 1, and the rest is a word for s_k * w.
void for_each_reduced_word(const Permutation& w,
                           const std::function<void(const std::vector<int>&)>& visit);

// Materializes the full set, sorted ascending. The identity yields {()}.
std::vector<std::vector<int>> reduced_words(const Permutation& w);

struct LevelCounts {
    int n = 0;
    std::vector<Int> counts;  // counts[l] = |S_n(l)|, l = 0 .. n(n-1)/2
};

// Coefficients of the q-factorial [n]_q! = prod_{i=1}^{n} (1 + q + ... + q^{i-1}),
// computed by convolution. counts[l] = #{w in S_n : length(w) = l}.
LevelCounts level_counts(int n);

inline int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace schub
