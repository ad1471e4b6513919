#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlpoly {

/// A vector in Z^n (weights, roots, exponents).
using IntVector = std::vector<int>;

inline long long dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

/// Simple root e_i - e_{i+1}, 1 <= i <= n-1.
inline IntVector simple_root(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple_root: index out of range");
    IntVector v(n, 0);
    v[i - 1] = 1;
    v[i] = -1;
    return v;
}

/// Fundamental weight (1,...,1,0,...,0) with k ones.
inline IntVector fundamental_weight(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("fundamental_weight: index out of range");
    IntVector v(n, 0);
    std::fill(v.begin(), v.begin() + k, 1);
    return v;
}

inline bool is_dominant(const IntVector& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<int>()) ||
           std::is_sorted(v.rbegin(), v.rend());
}

/// Cap on n for helpers that enumerate whole symmetric groups or cosets.
/// Overridable through the HLP_MAX_N environment variable.
inline int enumeration_limit() {
    static const int limit = [] {
        if (const char* s = std::getenv("HLP_MAX_N")) {
            const int v = std::atoi(s);
            if (v > 0) return v;
        }
        return 9;
    }();
    return limit;
}

inline void check_enumeration_guard(int n) {
    if (n > enumeration_limit())
        throw std::length_error("enumeration refused for n > " + std::to_string(enumeration_limit()) +
                                " (override with HLP_MAX_N)");
}

/// An element of S_n in one-line notation: images[i-1] = w(i).
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw std::invalid_argument("permutation: not a bijection of [n]");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    /// The simple transposition s_i swapping i and i+1.
    static Permutation simple(int i, int n) {
        if (i < 1 || i >= n) throw std::invalid_argument("simple: index out of range");
        Permutation w = identity(n);
        std::swap(w.images_[i - 1], w.images_[i]);
        return w;
    }

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if (images_[i - 1] != i) return false;
        return true;
    }

    /// Function composition: (u*v)(i) = u(v(i)).
    Permutation operator*(const Permutation& v) const {
        if (n() != v.n()) throw std::invalid_argument("permutation: rank mismatch");
        std::vector<int> im(images_.size());
        for (int i = 1; i <= n(); ++i) im[i - 1] = images_[v(i) - 1];
        return Permutation(std::move(im));
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (int i = 1; i <= n(); ++i) im[images_[i - 1] - 1] = i;
        return Permutation(std::move(im));
    }

    /// Coxeter length = number of inversions.
    int length() const {
        int count = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (images_[i] > images_[j]) ++count;
        return count;
    }

    /// Inversions as pairs (i, j), i < j, w(i) > w(j); pair (i,j) stands for
    /// the positive root e_i - e_j sent negative by w.
    std::vector<std::pair<int, int>> inversions() const {
        std::vector<std::pair<int, int>> inv;
        for (int i = 1; i <= n(); ++i)
            for (int j = i + 1; j <= n(); ++j)
                if (images_[i - 1] > images_[j - 1]) inv.emplace_back(i, j);
        return inv;
    }

    /// A reduced word for w, built by repeatedly peeling the smallest right
    /// descent. Deterministic, so derived Hecke basis elements are reproducible.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        std::vector<int> im = images_;
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (int i = 0; i + 1 < n(); ++i) {
                if (im[i] > im[i + 1]) {
                    std::swap(im[i], im[i + 1]);
                    word.push_back(i + 1);
                    progressed = true;
                    break;
                }
            }
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    /// Coordinate permutation of Z^n: w e_k = e_{w(k)}.
    IntVector act(const IntVector& v) const {
        if (static_cast<int>(v.size()) != n()) throw std::invalid_argument("act: size mismatch");
        IntVector out(v.size());
        for (int i = 1; i <= n(); ++i) out[images_[i - 1] - 1] = v[i - 1];
        return out;
    }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    auto operator<=>(const Permutation& o) const { return images_ <=> o.images_; }

    /// "[2,1,3]"
    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < n(); ++i) os << (i ? "," : "") << images_[i];
        os << "]";
        return os.str();
    }

private:
    std::vector<int> images_;
};

inline Permutation from_word(const std::vector<int>& word, int n) {
    Permutation w = Permutation::identity(n);
    for (int i : word) w = w * Permutation::simple(i, n);
    return w;
}

/// "s2 s1", or "e" for the empty word.
inline std::string word_to_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::ostringstream os;
    for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << "s" << word[k];
    return os.str();
}

/// Maximal runs [a,b] of equal entries of a dominant vector; the stabilizer
/// of lambda is the direct product of the symmetric groups on these runs.
inline std::vector<std::pair<int, int>> stabilizer_blocks(const IntVector& lambda) {
    if (!std::is_sorted(lambda.rbegin(), lambda.rend()))
        throw std::invalid_argument("stabilizer_blocks: vector is not dominant");
    std::vector<std::pair<int, int>> blocks;
    const int n = static_cast<int>(lambda.size());
    int a = 1;
    for (int i = 2; i <= n + 1; ++i) {
        if (i > n || lambda[i - 1] != lambda[a - 1]) {
            blocks.emplace_back(a, i - 1);
            a = i;
        }
    }
    return blocks;
}

/// Generator indices {i : lambda_i = lambda_{i+1}} of the stabilizer.
inline std::vector<int> stabilizer_generators(const IntVector& lambda) {
    std::vector<int> gens;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] == lambda[i + 1]) gens.push_back(static_cast<int>(i) + 1);
    return gens;
}

/// Unique factorization w = u * v with u a minimal-length coset representative
/// of w S_{n,lambda} and v in the stabilizer of lambda; lengths add.
inline std::pair<Permutation, Permutation> parabolic_factorize(const Permutation& w,
                                                               const IntVector& lambda) {
    if (static_cast<int>(lambda.size()) != w.n())
        throw std::invalid_argument("parabolic_factorize: size mismatch");
    std::vector<int> u_im = w.images();
    for (const auto& [a, b] : stabilizer_blocks(lambda))
        std::sort(u_im.begin() + (a - 1), u_im.begin() + b);
    Permutation u{std::move(u_im)};
    Permutation v = u.inverse() * w;
    return {std::move(u), std::move(v)};
}

inline std::vector<Permutation> all_permutations(int n) {
    check_enumeration_guard(n);
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

/// All of S_{n,lambda}, assembled block by block.
inline std::vector<Permutation> stabilizer_elements(const IntVector& lambda) {
    const int n = static_cast<int>(lambda.size());
    std::vector<Permutation> out{Permutation::identity(n)};
    for (const auto& [a, b] : stabilizer_blocks(lambda)) {
        if (a == b) continue;
        check_enumeration_guard(b - a + 1);
        std::vector<int> vals(b - a + 1);
        std::iota(vals.begin(), vals.end(), a);
        std::vector<Permutation> next;
        do {
            for (const Permutation& w : out) {
                std::vector<int> im = w.images();
                std::copy(vals.begin(), vals.end(), im.begin() + (a - 1));
                next.emplace_back(std::move(im));
            }
        } while (std::next_permutation(vals.begin(), vals.end()));
        out = std::move(next);
    }
    return out;
}

/// Bruhat order by the tableau criterion: u <= v iff for every k the sorted
/// prefix {u(1),...,u(k)} is entrywise <= the sorted prefix of v.
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw std::invalid_argument("bruhat_leq: rank mismatch");
    const int n = u.n();
    std::vector<int> us, vs;
    us.reserve(n);
    vs.reserve(n);
    for (int k = 1; k < n; ++k) {
        us.insert(std::upper_bound(us.begin(), us.end(), u(k)), u(k));
        vs.insert(std::upper_bound(vs.begin(), vs.end(), v(k)), v(k));
        for (int i = 0; i < k; ++i)
            if (us[i] > vs[i]) return false;
    }
    return true;
}

} // namespace hlpoly
