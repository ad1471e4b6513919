// Frozen expected values for the two golden tables. The Hecke elements are
// spelled out as explicit basis combinations (products only of the literal
// factors T_i + (1-t)), so they do not depend on the code paths under test.
#pragma once

#include "hlpoly/psi.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hlpoly::testing {

inline LaurentPoly one_minus_t() { return one_minus_t_pow(1); }

/// T_i + (1 - t), the expanded form of tT_i^{-1}.
inline HeckeElement tTinv(int i, int n) {
    HeckeElement h = HeckeElement::basis(Permutation::simple(i, n));
    h.add_term(Permutation::identity(n), one_minus_t());
    return h;
}

/// The 15 tableau weights of shape (3,2,0) at n = 3.
///
/// The entry at rows [[1,1,3],[3,3]] is 1: that tableau is the only one of
/// content (2,0,3), an exponent in the orbit of (3,2,0), so symmetry and
/// monicity of the expansion force its coefficient to be 1.
inline std::vector<std::pair<std::vector<std::vector<int>>, LaurentPoly>> psi_table_320() {
    const LaurentPoly one(1);
    const LaurentPoly mt = one_minus_t();
    const LaurentPoly mt2 = one_minus_t_pow(2);
    return {
        {{{1, 1, 1}, {2, 2}}, one},
        {{{1, 1, 1}, {2, 3}}, mt},
        {{{1, 1, 1}, {3, 3}}, one},
        {{{1, 1, 2}, {2, 2}}, one},
        {{{1, 1, 2}, {2, 3}}, mt * mt},
        {{{1, 1, 2}, {3, 3}}, mt},
        {{{1, 1, 3}, {2, 2}}, mt2},
        {{{1, 1, 3}, {2, 3}}, mt},
        {{{1, 1, 3}, {3, 3}}, one},
        {{{1, 2, 2}, {2, 3}}, mt},
        {{{1, 2, 2}, {3, 3}}, mt},
        {{{1, 2, 3}, {2, 3}}, mt},
        {{{1, 2, 3}, {3, 3}}, mt},
        {{{2, 2, 2}, {3, 3}}, one},
        {{{2, 2, 3}, {3, 3}}, one},
    };
}

/// The 8 Hecke lifts of shape (2,1,0) at n = 3, in expanded normal form.
inline std::vector<std::pair<std::vector<std::vector<int>>, HeckeElement>> bigpsi_table_210() {
    const int n = 3;
    const LaurentPoly mt = one_minus_t();
    const HeckeElement unit = HeckeElement::unit(n);
    const HeckeElement t1 = tTinv(1, n); // T_1 + (1-t)
    const HeckeElement t2 = tTinv(2, n); // T_2 + (1-t)

    HeckeElement psi_13_2(n); // (1-t)(1 + T_1)
    psi_13_2.add_term(Permutation::identity(n), mt);
    psi_13_2.add_term(Permutation::simple(1, n), mt);

    return {
        {{{1, 1}, {2}}, unit},
        {{{1, 1}, {3}}, t2},
        {{{1, 2}, {2}}, t1},
        {{{1, 2}, {3}}, mt * t2},
        {{{1, 3}, {2}}, psi_13_2},
        {{{1, 3}, {3}}, t2 * t1},
        {{{2, 2}, {3}}, t1 * t2},
        {{{2, 3}, {3}}, t2 * t1 * t2},
    };
}

/// The 15 Hecke lifts of shape (3,2,0) at n = 3, derived by hand from the
/// sign-alternating recursion (each value substitutes the previously derived
/// lifts). The parabolic-decomposition definition reproduces every entry.
inline std::vector<std::pair<std::vector<std::vector<int>>, HeckeElement>> bigpsi_table_320() {
    const int n = 3;
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly mt = one_minus_t();
    const HeckeElement unit = HeckeElement::unit(n);
    const HeckeElement t1 = tTinv(1, n);
    const HeckeElement t2 = tTinv(2, n);
    return {
        {{{1, 1, 1}, {2, 2}}, unit},
        {{{1, 1, 1}, {2, 3}}, mt * unit},
        {{{1, 1, 1}, {3, 3}}, t2},
        {{{1, 1, 2}, {2, 2}}, t1},
        {{{1, 1, 2}, {2, 3}}, (mt * mt) * unit},
        {{{1, 1, 2}, {3, 3}}, mt * t2},
        {{{1, 1, 3}, {2, 2}}, (t * mt) * unit + mt * t1},
        {{{1, 1, 3}, {2, 3}}, mt * t1},
        {{{1, 1, 3}, {3, 3}}, t2 * t1},
        {{{1, 2, 2}, {2, 3}}, mt * t1},
        {{{1, 2, 2}, {3, 3}}, mt * t2},
        {{{1, 2, 3}, {2, 3}}, (mt * t) * unit + (mt * mt) * t1},
        {{{1, 2, 3}, {3, 3}}, mt * (t2 * t1)},
        {{{2, 2, 2}, {3, 3}}, t1 * t2},
        {{{2, 2, 3}, {3, 3}}, t2 * t1 * t2},
    };
}

} // namespace hlpoly::testing
