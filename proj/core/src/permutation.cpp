#include "schub/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schub {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    const int n = static_cast<int>(values_.size());
    if (n == 0) throw std::invalid_argument("permutation: empty one-line notation");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[v])
            throw std::invalid_argument("permutation: duplicate value " + std::to_string(v));
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation: degree must be positive");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int k) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("transposition: index " + std::to_string(k) +
                                    " out of range 1.." + std::to_string(n - 1));
    Permutation w = identity(n);
    std::swap(w.values_[k - 1], w.values_[k]);
    return w;
}

Permutation Permutation::longest(int n) {
    if (n < 1) throw std::invalid_argument("permutation: degree must be positive");
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 0; i < degree(); ++i) inv[values_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

int Permutation::length() const {
    int count = 0;
    const int n = degree();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (values_[i] > values_[j]) ++count;
    return count;
}

std::vector<int> Permutation::code() const {
    const int n = degree();
    std::vector<int> c(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (values_[j] < values_[i]) ++c[i];
    return c;
}

std::vector<int> Permutation::right_descents() const {
    std::vector<int> d;
    for (int k = 1; k < degree(); ++k)
        if (values_[k - 1] > values_[k]) d.push_back(k);
    return d;
}

std::vector<int> Permutation::left_descents() const {
    const int n = degree();
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[values_[i]] = i;
    std::vector<int> d;
    for (int k = 1; k < n; ++k)
        if (pos[k + 1] < pos[k]) d.push_back(k);
    return d;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (values_[i] != i + 1) return false;
    return true;
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree())
        throw std::invalid_argument("compose: degree mismatch (" + std::to_string(u.degree()) +
                                    " vs " + std::to_string(v.degree()) + ")");
    std::vector<int> w(u.degree());
    for (int i = 1; i <= u.degree(); ++i) w[i - 1] = u(v(i));
    return Permutation(std::move(w));
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::string token;
        std::istringstream in{std::string(text)};
        while (std::getline(in, token, ',')) {
            try {
                std::size_t used = 0;
                int v = std::stoi(token, &used);
                while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                    ++used;
                if (used != token.size()) throw std::invalid_argument(token);
                values.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("permutation: cannot parse entry '" + token + "'");
            }
        }
    } else {
        if (text.empty()) throw std::invalid_argument("permutation: empty input");
        if (text.size() > 9)
            throw std::invalid_argument("permutation: compact digit form only supported for n <= 9");
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument(std::string("permutation: cannot parse entry '") + c + "'");
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

std::string to_string(const Permutation& w) {
    std::string s;
    for (int i = 0; i < w.degree(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.one_line()[i]);
    }
    return s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

namespace {

// DFS over the inverse: a first letter k of a word for w is a right descent
// of v = w^{-1}, and stripping it turns v into v*s_k (a position swap).
void walk_words(std::vector<int>& v, std::vector<int>& word,
                const std::function<void(const std::vector<int>&)>& visit) {
    bool leaf = true;
    const int n = static_cast<int>(v.size());
    for (int k = 1; k < n; ++k) {
        if (v[k - 1] > v[k]) {
            leaf = false;
            word.push_back(k);
            std::swap(v[k - 1], v[k]);
            walk_words(v, word, visit);
            std::swap(v[k - 1], v[k]);
            word.pop_back();
        }
    }
    if (leaf) visit(word);
}

}  // namespace

void for_each_reduced_word(const Permutation& w,
                           const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> v = w.inverse().one_line();
    std::vector<int> word;
    word.reserve(w.length());
    walk_words(v, word, visit);
}

std::vector<std::vector<int>> reduced_words(const Permutation& w) {
    std::vector<std::vector<int>> out;
    for_each_reduced_word(w, [&](const std::vector<int>& word) { out.push_back(word); });
    return out;
}

LevelCounts level_counts(int n) {
    if (n < 1) throw std::invalid_argument("level_counts: n must be positive");
    std::vector<Int> counts{1};
    for (int i = 2; i <= n; ++i) {
        // convolve with 1 + q + ... + q^{i-1}
        std::vector<Int> next(counts.size() + i - 1, 0);
        for (std::size_t a = 0; a < counts.size(); ++a)
            for (int b = 0; b < i; ++b) next[a + b] += counts[a];
        counts = std::move(next);
    }
    return LevelCounts{n, std::move(counts)};
}

}  // namespace schub
