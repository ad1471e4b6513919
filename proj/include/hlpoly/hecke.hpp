#pragma once

#include "hlpoly/laurent.hpp"
#include "hlpoly/tableaux.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlpoly {

struct RankMismatch : std::invalid_argument {
    RankMismatch() : std::invalid_argument("operands live in algebras of different rank") {}
};

/// An element of the finite Hecke algebra H_n over Z[t^{±1}], stored as a
/// sparse combination of basis elements T_w. No stored coefficient is zero.
///
/// The quadratic relation is T_i^2 = (t-1)T_i + t; everything else is driven
/// by the single-generator product rule (see left_mul_gen).
class HeckeElement {
public:
    explicit HeckeElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("hecke: rank must be >= 1");
    }

    static HeckeElement unit(int n) {
        HeckeElement h(n);
        h.terms_[Permutation::identity(n)] = 1;
        return h;
    }

    static HeckeElement basis(const Permutation& w) {
        HeckeElement h(w.n());
        h.terms_[w] = 1;
        return h;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, LaurentPoly>& terms() const { return terms_; }

    LaurentPoly coeff(const Permutation& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentPoly{} : it->second;
    }

    void add_term(const Permutation& w, const LaurentPoly& c) {
        if (w.n() != n_) throw RankMismatch{};
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        if (o.n_ != n_) throw RankMismatch{};
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        if (o.n_ != n_) throw RankMismatch{};
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    HeckeElement& operator*=(const LaurentPoly& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    HeckeElement operator+(const HeckeElement& o) const { HeckeElement r = *this; r += o; return r; }
    HeckeElement operator-(const HeckeElement& o) const { HeckeElement r = *this; r -= o; return r; }

    bool operator==(const HeckeElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    /// "(1 - t)*T[s2 s1] + t*T[e]"; zero renders as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c != LaurentPoly(1)) {
                if (c.terms().size() == 1) os << c.to_string() << "*";
                else os << "(" << c.to_string() << ")*";
            }
            os << "T[" << word_to_string(w.reduced_word()) << "]";
        }
        return os.str();
    }

private:
    int n_;
    std::map<Permutation, LaurentPoly> terms_;
};

inline HeckeElement operator*(const LaurentPoly& s, HeckeElement h) {
    h *= s;
    return h;
}

/// T_i * h: the generator product in one sweep over the support, using
/// T_i T_w = T_{s_i w} when the product goes up and (t-1)T_w + tT_{s_i w}
/// when it goes down.
inline HeckeElement left_mul_gen(int i, const HeckeElement& h) {
    const int n = h.n();
    if (i < 1 || i >= n) throw std::invalid_argument("left_mul_gen: generator index");
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly t_minus_1 = t - LaurentPoly(1);
    HeckeElement out(n);
    for (const auto& [w, c] : h.terms()) {
        std::vector<int> im = w.images();
        int pos_i = 0, pos_i1 = 0;
        for (int k = 0; k < n; ++k) {
            if (im[k] == i) pos_i = k;
            else if (im[k] == i + 1) pos_i1 = k;
        }
        std::swap(im[pos_i], im[pos_i1]);
        Permutation siw{std::move(im)};
        if (pos_i < pos_i1) {
            out.add_term(siw, c);
        } else {
            out.add_term(w, t_minus_1 * c);
            out.add_term(siw, t * c);
        }
    }
    return out;
}

/// (T_i + 1 - t) * h, i.e. tT_i^{-1} * h. Stays inside Z[t].
inline HeckeElement left_mul_tgen_inv(int i, const HeckeElement& h) {
    HeckeElement out = left_mul_gen(i, h);
    const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
    for (const auto& [w, c] : h.terms()) out.add_term(w, one_minus_t * c);
    return out;
}

/// General product: the left factor is expanded along reduced words and fed
/// through left_mul_gen one generator at a time.
inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    if (a.n() != b.n()) throw RankMismatch{};
    HeckeElement out(a.n());
    for (const auto& [w, c] : a.terms()) {
        HeckeElement cur = b;
        const std::vector<int> word = w.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) cur = left_mul_gen(*it, cur);
        cur *= c;
        out += cur;
    }
    return out;
}

/// t^{ℓ(w)} (T_{w^{-1}})^{-1} * h: the product of the tT_i^{-1} along a
/// reduced word of w, applied right factor first.
inline HeckeElement mul_scaled_basis_inverse(const Permutation& w, HeckeElement h) {
    const std::vector<int> word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = left_mul_tgen_inv(*it, h);
    return h;
}

/// (T_{w^{-1}})^{-1}. Its support is contained in {v : v <= w} in Bruhat order.
inline HeckeElement tw_inverse_inverse(const Permutation& w) {
    HeckeElement h = mul_scaled_basis_inverse(w, HeckeElement::unit(w.n()));
    h *= LaurentPoly::t(-w.length());
    return h;
}

/// Sum of T_w over all of S_n.
inline HeckeElement full_symmetrizer(int n) {
    HeckeElement h(n);
    for (const Permutation& w : all_permutations(n)) h.add_term(w, 1);
    return h;
}

/// Sum of T_w over the stabilizer of a dominant vector.
inline HeckeElement stabilizer_symmetrizer(const IntVector& lambda) {
    HeckeElement h(static_cast<int>(lambda.size()));
    for (const Permutation& w : stabilizer_elements(lambda)) h.add_term(w, 1);
    return h;
}

/// Sum of T_w over the symmetric group on the interval [a,b].
inline HeckeElement interval_symmetrizer(int a, int b, int n) {
    if (a < 1 || b > n || a > b) throw std::invalid_argument("interval_symmetrizer: bad interval");
    IntVector lambda(n);
    int v = n;
    for (int i = 1; i <= n; ++i) {
        lambda[i - 1] = v;
        if (i < a || i >= b) --v; // entries stay equal exactly on [a,b]
    }
    return stabilizer_symmetrizer(lambda);
}

/// The unique decomposition h = sum_F T_{u_F} h_F with every h_F supported
/// on the stabilizer of the fundamental weight of index ell. Columns with
/// h_F = 0 are omitted.
inline std::map<Column, HeckeElement> parabolic_decompose(const HeckeElement& h, int ell) {
    const int n = h.n();
    if (ell < 1 || ell > n) throw InvalidLength{};
    const IntVector omega_ell = fundamental_weight(ell, n);
    std::map<Column, HeckeElement> out;
    for (const auto& [w, c] : h.terms()) {
        // distinct w land on distinct (F, v) pairs, so nothing can cancel
        auto [u, v] = parabolic_factorize(w, omega_ell);
        std::vector<int> entries(u.images().begin(), u.images().begin() + ell);
        Column F{std::move(entries)};
        auto it = out.find(F);
        if (it == out.end()) it = out.emplace(std::move(F), HeckeElement(n)).first;
        it->second.add_term(v, c);
    }
    return out;
}

/// The scalar c(t) with h * 1_0 = c(t) * 1_0, i.e. sum of coeff(h, w) t^{ℓ(w)}.
inline LaurentPoly symmetrizer_projection(const HeckeElement& h) {
    LaurentPoly out;
    for (const auto& [w, c] : h.terms()) out += c.shifted(w.length());
    return out;
}

/// Poincare polynomial of the stabilizer of a dominant vector: the product
/// of the t-factorials of the block sizes.
inline LaurentPoly poincare_polynomial(const IntVector& lambda) {
    LaurentPoly out(1);
    for (const auto& [a, b] : stabilizer_blocks(lambda)) {
        for (int k = 2; k <= b - a + 1; ++k) {
            LaurentPoly bracket;
            for (int e = 0; e < k; ++e) bracket += LaurentPoly::t(e);
            out *= bracket;
        }
    }
    return out;
}

} // namespace hlpoly
