#pragma once

#include "hlpoly/affine.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hlpoly {

struct NotAStrip : std::invalid_argument {
    NotAStrip() : std::invalid_argument("skew shape is not a horizontal strip") {}
};

struct NotSemistandard : std::invalid_argument {
    NotSemistandard() : std::invalid_argument("filling is not semistandard") {}
};

/// The strip weight: the product of (1 - t^{m_j(mu)}) over the columns j
/// where the strip lambda - mu starts, i.e. column j is empty and column
/// j+1 holds a box.
inline LaurentPoly psi_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu) || !is_horizontal_strip(lambda, mu)) throw NotAStrip{};
    auto skew_column = [&](int j) {
        int len = 0;
        for (int i = 1; i <= lambda.num_rows(); ++i)
            if (mu.part(i) < j && j <= lambda.part(i)) ++len;
        return len;
    };
    LaurentPoly out(1);
    for (int j = 1; j <= lambda.part(1); ++j)
        if (skew_column(j) == 0 && skew_column(j + 1) == 1)
            out *= one_minus_t_pow(mu.multiplicity(j));
    return out;
}

/// The tableau weight as the product of strip weights along the flag of
/// shapes cut out by the entries <= i.
inline LaurentPoly psi_macdonald(const Filling& T, int n) {
    if (!T.is_semistandard()) throw NotSemistandard{};
    if (T.max_entry() > n) throw std::invalid_argument("filling: entry exceeds n");
    LaurentPoly out(1);
    for (int i = 1; i < n; ++i)
        out *= psi_strip(T.shape_of_entries_leq(i + 1), T.shape_of_entries_leq(i));
    return out;
}

/// The same weight computed box by box: a box contributes 1 - t^{d} when its
/// right neighbor's value i does not occur in the box or its leg, with d one
/// more than the number of leg entries below i.
inline LaurentPoly psi_box(const Filling& T) {
    if (!T.is_semistandard()) throw NotSemistandard{};
    LaurentPoly out(1);
    const auto& cols = T.columns();
    for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
        const Column& here = cols[c];
        const Column& right = cols[c + 1];
        for (int r = 1; r <= right.length(); ++r) {
            const int i = right.entry(r);
            bool occurs = false;
            int below = 0;
            for (int rp = r; rp <= here.length(); ++rp) {
                if (here.entry(rp) == i) occurs = true;
                if (rp > r && here.entry(rp) < i) ++below;
            }
            if (!occurs) out *= one_minus_t_pow(below + 1);
        }
    }
    return out;
}

namespace detail {

/// Two-column recursion: descend the right column toward (1,...,a) via any
/// j missing from E with j+1 present; the case split tracks whether the
/// left column moves along.
inline LaurentPoly psi_two_columns(const Column& F, const Column& E) {
    for (int r = 1; r <= E.length(); ++r)
        if (F.entry(r) > E.entry(r)) return {};
    if (E.is_highest_weight()) return LaurentPoly(1);
    int j = 1;
    while (!(!E.contains(j) && E.contains(j + 1))) ++j;
    const Column sjE = column_reflect(j, E).first;
    const Column sjF = column_reflect(j, F).first;
    if (F.contains(j) && !F.contains(j + 1)) {
        return LaurentPoly::t() * psi_two_columns(sjF, sjE) +
               one_minus_t_pow(1) * psi_two_columns(F, sjE);
    }
    return psi_two_columns(sjF, sjE);
}

} // namespace detail

/// The tableau weight as the product of its adjacent two-column weights;
/// vanishes (without throwing) on non-semistandard fillings.
inline LaurentPoly psi_klostermann(const Filling& T) {
    LaurentPoly out(1);
    const auto& cols = T.columns();
    for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
        out *= detail::psi_two_columns(cols[c], cols[c + 1]);
        if (out.is_zero()) return out;
    }
    return out;
}

/// The Hecke lift of the tableau weight, by its definition: the rightmost
/// column contributes t^{ℓ(u_C)}(T_{u_C^{-1}})^{-1} 1_{varpi}, and every
/// further column picks its component out of the parabolic decomposition of
/// what was built so far. The empty filling yields the full symmetrizer.
inline HeckeElement big_psi(const Filling& T, int n) {
    if (T.empty()) return full_symmetrizer(n);
    if (T.max_entry() > n) throw std::invalid_argument("filling: entry exceeds n");
    const Column& first = T.column_from_right(1);
    HeckeElement h = mul_scaled_basis_inverse(
        u_of_column(first, n), stabilizer_symmetrizer(fundamental_weight(first.length(), n)));
    for (int k = 2; k <= T.num_columns(); ++k) {
        const Column& c = T.column_from_right(k);
        auto parts = parabolic_decompose(h, c.length());
        auto it = parts.find(c);
        if (it == parts.end()) return HeckeElement(n);
        h = mul_scaled_basis_inverse(u_of_column(c, n), it->second);
    }
    return h;
}

namespace detail {

using PsiMemo = std::map<std::pair<Filling, Partition>, HeckeElement>;

inline HeckeElement big_psi_rec_impl(const Filling& T, const Partition& mu, int n, PsiMemo& memo);

inline HeckeElement big_psi_rec_step(const Filling& T, const Partition& mu, int n, PsiMemo& memo) {
    const int r = T.num_columns();
    const Column& c1 = T.column_from_right(1);
    int j = 1;
    while (!(!c1.contains(j) && c1.contains(j + 1))) ++j;

    std::vector<int> sigma(r + 1);
    for (int k = 1; k <= r; ++k) {
        const Column& ck = T.column_from_right(k);
        sigma[k] = (ck.contains(j) && !ck.contains(j + 1)) ? -1 : +1;
    }

    const HeckeElement top = big_psi_rec_impl(omega(T, j, r), mu, n, memo);
    HeckeElement out = (sigma[r] == -1) ? left_mul_gen(j, top) : left_mul_tgen_inv(j, top);
    for (int k = 1; k < r; ++k) {
        if (sigma[k] * sigma[k + 1] != -1) continue;
        HeckeElement term = big_psi_rec_impl(omega(T, j, k), mu, n, memo);
        term *= LaurentPoly(sigma[k]) * one_minus_t_pow(1);
        out += term;
    }
    return out;
}

inline HeckeElement big_psi_rec_impl(const Filling& T, const Partition& mu, int n, PsiMemo& memo) {
    if (!T.tensor(Filling::highest_weight(mu)).is_semistandard()) return HeckeElement(n);

    // Absorb any highest-weight tail of T into mu so the recursion always
    // sees a non-lowest rightmost column.
    Filling body = T;
    Partition tail = mu;
    while (!body.empty() && body.column_from_right(1).is_highest_weight()) {
        const int len = body.column_from_right(1).length();
        std::vector<int> parts = tail.parts();
        if (static_cast<int>(parts.size()) < len) parts.resize(len, 0);
        for (int i = 0; i < len; ++i) ++parts[i];
        tail = Partition(std::move(parts));
        std::vector<Column> cols = body.columns();
        cols.pop_back();
        body = Filling(std::move(cols));
    }
    if (body.empty()) return stabilizer_symmetrizer(tail.to_weight(n));

    const std::pair<Filling, Partition> key{body, tail};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    HeckeElement out = big_psi_rec_step(body, tail, n, memo);
    memo.emplace(key, std::move(out));
    return memo.at(key);
}

} // namespace detail

/// The Hecke lift computed by the sign-alternating recursion that lowers the
/// rightmost column of T: the leading factor is T_j when the leftmost column
/// moves up under s_j and tT_j^{-1} otherwise, and a (1-t) correction enters
/// at every sign change along the columns. Equals big_psi(T tensor T^0_mu).
inline HeckeElement big_psi_recursive(const Filling& T, const Partition& mu, int n) {
    (void)T.tensor(Filling::highest_weight(mu)); // validates the column-length order
    if (T.max_entry() > n || mu.num_rows() > n)
        throw std::invalid_argument("filling: entry exceeds n");
    detail::PsiMemo memo;
    return detail::big_psi_rec_impl(T, mu, n, memo);
}

/// The scalar shadow of the lift: project onto the symmetrizer line and
/// divide by the stabilizer Poincare polynomial, exactly. An inexact
/// division here would falsify the theory, so NotDivisible escapes.
inline LaurentPoly tilde_psi(const Filling& T, const Partition& lambda, int n) {
    if (T.shape() != lambda) throw std::invalid_argument("tilde_psi: shape mismatch");
    const LaurentPoly num = symmetrizer_projection(big_psi(T, n));
    return num.exact_div(poincare_polynomial(lambda.to_weight(n)));
}

/// Expands tT_j^{-1} (resp. T_j) across sum_C X^C Psi_{C tensor K} and
/// compares against the predicted per-column coefficients:
///   f_D = tT_j^{-1} Psi_{s_jD ⊗ K}                    if s_jD <= D,
///         T_j Psi_{s_jD ⊗ K} + (1-t) Psi_{D ⊗ K}      if s_jD >= D;
///   g_D = tT_j^{-1} Psi_{s_jD ⊗ K} - (1-t) Psi_{D ⊗ K} if s_jD <= D,
///         T_j Psi_{s_jD ⊗ K}                           if s_jD >= D.
inline bool fundamental_lemma_check(const Filling& K, int ell, int j, int n) {
    if (!K.empty() && K.columns().front().length() > ell)
        throw std::invalid_argument("fundamental_lemma_check: ell shorter than K's columns");
    if (j < 1 || j >= n) throw std::invalid_argument("fundamental_lemma_check: generator index");

    std::map<Column, HeckeElement> psi_of;
    AffineElement base(n);
    for (const Column& c : enumerate_columns(ell, n)) {
        Filling ct = Filling({c}).tensor(K);
        HeckeElement p = big_psi(ct, n);
        base += AffineElement::from_hecke(p).shifted(c.indicator(n));
        psi_of.emplace(c, std::move(p));
    }

    const LaurentPoly one_minus_t = one_minus_t_pow(1);
    AffineElement lhs_f = left_mul_gen(j, base) + one_minus_t * base; // tT_j^{-1} * base
    AffineElement lhs_g = left_mul_gen(j, base);

    AffineElement rhs_f(n), rhs_g(n);
    for (const auto& [d, psi_d] : psi_of) {
        auto [sjd, sign] = column_reflect(j, d);
        const HeckeElement& psi_sjd = psi_of.at(sjd);
        HeckeElement f(n), g(n);
        if (sign == +1) { // s_jD <= D
            f = left_mul_tgen_inv(j, psi_sjd);
            g = f - one_minus_t * psi_d;
        } else {          // s_jD > D
            f = left_mul_gen(j, psi_sjd) + one_minus_t * psi_d;
            g = left_mul_gen(j, psi_sjd);
        }
        rhs_f += AffineElement::from_hecke(f).shifted(d.indicator(n));
        rhs_g += AffineElement::from_hecke(g).shifted(d.indicator(n));
    }
    return lhs_f == rhs_f && lhs_g == rhs_g;
}

} // namespace hlpoly
