#pragma once

#include "hlpoly/hecke.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hlpoly {

/// An element of the affine Hecke algebra in normal form: a sparse
/// combination of basis elements X^mu T_w with mu in Z^n, w in S_n.
/// Every operation returns the canonical X-left/T-right form.
class AffineElement {
public:
    using Key = std::pair<IntVector, Permutation>;

    explicit AffineElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("affine: rank must be >= 1");
    }

    static AffineElement unit(int n) { return monomial(IntVector(n, 0)); }

    /// X^mu
    static AffineElement monomial(const IntVector& mu) {
        AffineElement a(static_cast<int>(mu.size()));
        a.terms_[{mu, Permutation::identity(a.n_)}] = 1;
        return a;
    }

    /// The finite Hecke algebra sits inside as the X^0 T_w span.
    static AffineElement from_hecke(const HeckeElement& h) {
        AffineElement a(h.n());
        const IntVector zero(h.n(), 0);
        for (const auto& [w, c] : h.terms()) a.terms_[{zero, w}] = c;
        return a;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, LaurentPoly>& terms() const { return terms_; }

    LaurentPoly coeff(const IntVector& mu, const Permutation& w) const {
        auto it = terms_.find({mu, w});
        return it == terms_.end() ? LaurentPoly{} : it->second;
    }

    void add_term(const IntVector& mu, const Permutation& w, const LaurentPoly& c) {
        if (static_cast<int>(mu.size()) != n_ || w.n() != n_) throw RankMismatch{};
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{mu, w}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AffineElement& operator+=(const AffineElement& o) {
        if (o.n_ != n_) throw RankMismatch{};
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    AffineElement& operator-=(const AffineElement& o) {
        if (o.n_ != n_) throw RankMismatch{};
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    AffineElement& operator*=(const LaurentPoly& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    AffineElement operator+(const AffineElement& o) const { AffineElement r = *this; r += o; return r; }
    AffineElement operator-(const AffineElement& o) const { AffineElement r = *this; r -= o; return r; }

    /// X^mu * this (pure exponent shift; X's commute with each other).
    AffineElement shifted(const IntVector& mu) const {
        if (static_cast<int>(mu.size()) != n_) throw RankMismatch{};
        AffineElement out(n_);
        for (const auto& [k, c] : terms_) {
            IntVector e = k.first;
            for (int i = 0; i < n_; ++i) e[i] += mu[i];
            out.terms_[{std::move(e), k.second}] = c;
        }
        return out;
    }

    bool operator==(const AffineElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const AffineElement& o) const { return !(*this == o); }

    /// "(1 - t)*X[1,0,0]*T[e] + X[0,1,0]*T[s1]"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c != LaurentPoly(1)) {
                if (c.terms().size() == 1) os << c.to_string() << "*";
                else os << "(" << c.to_string() << ")*";
            }
            os << "X[";
            for (int i = 0; i < n_; ++i) os << (i ? "," : "") << k.first[i];
            os << "]*T[" << word_to_string(k.second.reduced_word()) << "]";
        }
        return os.str();
    }

private:
    int n_;
    std::map<Key, LaurentPoly> terms_;
};

inline AffineElement operator*(const LaurentPoly& s, AffineElement a) {
    a *= s;
    return a;
}

/// T_i X^mu in normal form. With m = (mu, alpha_i):
///   m = 0:  X^mu T_i
///   m > 0:  X^{s_i mu} T_i + (1-t) * sum_{j=1}^{m} X^{mu - j alpha_i}
///   m < 0:  X^{s_i mu} T_i + (t-1) * sum_{j=0}^{-m-1} X^{mu + j alpha_i}
/// The telescoping sums come from expanding (X^mu - X^{s_i mu})/(1 - X^{alpha_i}).
inline AffineElement commute_gen_monomial(int i, const IntVector& mu) {
    const int n = static_cast<int>(mu.size());
    if (i < 1 || i >= n) throw std::invalid_argument("commute_gen_monomial: generator index");
    const int m = mu[i - 1] - mu[i];
    const Permutation si = Permutation::simple(i, n);
    IntVector simu = mu;
    std::swap(simu[i - 1], simu[i]);

    AffineElement out(n);
    out.add_term(simu, si, 1);
    if (m > 0) {
        const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
        IntVector e = mu;
        for (int j = 1; j <= m; ++j) {
            e[i - 1] -= 1;
            e[i] += 1;
            out.add_term(e, Permutation::identity(n), one_minus_t);
        }
    } else if (m < 0) {
        const LaurentPoly t_minus_1 = LaurentPoly::t() - LaurentPoly(1);
        IntVector e = mu;
        for (int j = 0; j < -m; ++j) {
            out.add_term(e, Permutation::identity(n), t_minus_1);
            e[i - 1] += 1;
            e[i] -= 1;
        }
    }
    return out;
}

/// T_i * a, renormalized term by term.
inline AffineElement left_mul_gen(int i, const AffineElement& a) {
    const int n = a.n();
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly t_minus_1 = t - LaurentPoly(1);
    AffineElement out(n);
    for (const auto& [k, c] : a.terms()) {
        const auto& [mu, w] = k;
        const AffineElement crossed = commute_gen_monomial(i, mu);
        for (const auto& [k2, d] : crossed.terms()) {
            const auto& [nu, delta] = k2;
            const LaurentPoly cd = c * d;
            if (delta.is_identity()) {
                out.add_term(nu, w, cd);
                continue;
            }
            // X^nu T_i T_w: finish with the descent rule in H_n.
            std::vector<int> im = w.images();
            int pos_i = 0, pos_i1 = 0;
            for (int p = 0; p < n; ++p) {
                if (im[p] == i) pos_i = p;
                else if (im[p] == i + 1) pos_i1 = p;
            }
            std::swap(im[pos_i], im[pos_i1]);
            Permutation siw{std::move(im)};
            if (pos_i < pos_i1) {
                out.add_term(nu, siw, cd);
            } else {
                out.add_term(nu, w, t_minus_1 * cd);
                out.add_term(nu, siw, t * cd);
            }
        }
    }
    return out;
}

/// Exact product renormalized to the X-left/T-right basis. Each T_w of the
/// left factor crosses the right factor one generator at a time along the
/// deterministic reduced word.
inline AffineElement operator*(const AffineElement& a, const AffineElement& b) {
    if (a.n() != b.n()) throw RankMismatch{};
    AffineElement out(a.n());
    for (const auto& [k, c] : a.terms()) {
        const auto& [mu, w] = k;
        AffineElement cur = b;
        const std::vector<int> word = w.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) cur = left_mul_gen(*it, cur);
        cur = cur.shifted(mu);
        cur *= c;
        out += cur;
    }
    return out;
}

/// 1_0 X^lambda, built column by column in weakly increasing column-length
/// order so the intermediate supports stay on the partial shapes.
inline AffineElement one0_xlambda(const Partition& lambda, int n) {
    if (lambda.num_rows() > n) throw std::invalid_argument("shape has more than n rows");
    AffineElement acc = AffineElement::from_hecke(full_symmetrizer(n));
    for (int ell : lambda.column_lengths_ascending())
        acc = acc * AffineElement::monomial(fundamental_weight(ell, n));
    return acc;
}

/// A symmetric-polynomial candidate: sparse exponent -> coefficient map.
/// Symmetry is checked, not assumed.
class SymPoly {
public:
    explicit SymPoly(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("sympoly: rank must be >= 1");
    }

    int n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<IntVector, LaurentPoly>& coeffs() const { return coeffs_; }

    LaurentPoly coeff(const IntVector& mu) const {
        auto it = coeffs_.find(mu);
        return it == coeffs_.end() ? LaurentPoly{} : it->second;
    }

    void add_term(const IntVector& mu, const LaurentPoly& c) {
        if (static_cast<int>(mu.size()) != n_) throw RankMismatch{};
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    /// Coefficients constant on S_n-orbits; generators suffice.
    bool is_symmetric() const {
        for (const auto& [mu, c] : coeffs_) {
            for (int i = 0; i < n_ - 1; ++i) {
                IntVector s = mu;
                std::swap(s[i], s[i + 1]);
                if (coeff(s) != c) return false;
            }
        }
        return true;
    }

    /// Divides every coefficient exactly; throws NotDivisible on failure.
    SymPoly exact_div(const LaurentPoly& den) const {
        SymPoly out(n_);
        for (const auto& [mu, c] : coeffs_) out.add_term(mu, c.exact_div(den));
        return out;
    }

    bool operator==(const SymPoly& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [mu, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.to_string() << ")*X[";
            for (int i = 0; i < n_; ++i) os << (i ? "," : "") << mu[i];
            os << "]";
        }
        return os.str();
    }

private:
    int n_;
    std::map<IntVector, LaurentPoly> coeffs_;
};

/// The polynomial f with a * 1_0 = f(X) * 1_0: each T_w collapses to t^{ℓ(w)}.
inline SymPoly satake_project(const AffineElement& a) {
    SymPoly out(a.n());
    for (const auto& [k, c] : a.terms()) out.add_term(k.first, c.shifted(k.second.length()));
    return out;
}

} // namespace hlpoly
