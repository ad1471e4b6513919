#pragma once

#include "hlpoly/psi.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace hlpoly {

enum class Route { macdonald, hecke, psi_lift };

inline const char* route_name(Route r) {
    switch (r) {
        case Route::macdonald: return "macdonald";
        case Route::hecke: return "hecke";
        case Route::psi_lift: return "psi-lift";
    }
    return "?";
}

/// A monomial expansion of a Hall-Littlewood P-polynomial, tagged with the
/// route that produced it. All three routes must agree exactly.
struct HLExpansion {
    Partition shape;
    int n = 1;
    Route route = Route::macdonald;
    SymPoly poly{1};

    /// The coefficient of the dominant monomial must be exactly 1.
    bool is_monic() const {
        const LaurentPoly c = poly.coeff(shape.to_weight(n));
        return c == LaurentPoly(1);
    }
};

/// Poincare polynomial of the stabilizer of the padded shape.
inline LaurentPoly weight_poincare(const Partition& lambda, int n) {
    return poincare_polynomial(lambda.to_weight(n));
}

/// Sum of psi_T X^T over the semistandard tableaux of the shape.
inline HLExpansion p_macdonald(const Partition& lambda, int n) {
    SymPoly poly(n);
    for (const Filling& T : enumerate_ssyt(lambda, n))
        poly.add_term(T.weight(n), psi_macdonald(T, n));
    return {lambda, n, Route::macdonald, std::move(poly)};
}

/// The symmetrizer route: project 1_0 X^lambda onto the symmetrizer line and
/// divide out the stabilizer Poincare polynomial, exactly.
inline HLExpansion p_hecke(const Partition& lambda, int n) {
    SymPoly poly = satake_project(one0_xlambda(lambda, n)).exact_div(weight_poincare(lambda, n));
    return {lambda, n, Route::hecke, std::move(poly)};
}

/// Sum of the projected Hecke lifts over the semistandard tableaux.
inline HLExpansion p_psi_lift(const Partition& lambda, int n) {
    SymPoly poly(n);
    for (const Filling& T : enumerate_ssyt(lambda, n))
        poly.add_term(T.weight(n), tilde_psi(T, lambda, n));
    return {lambda, n, Route::psi_lift, std::move(poly)};
}

/// Number of semistandard tableaux of the shape per content vector,
/// counted by direct enumeration (independent of any psi values).
inline std::map<IntVector, long long> ssyt_content_counts(const Partition& lambda, int n) {
    std::map<IntVector, long long> counts;
    for (const Filling& T : enumerate_ssyt(lambda, n)) ++counts[T.weight(n)];
    return counts;
}

struct CheckResult {
    std::string name;
    bool pass = false;
};

struct SpecializationReport {
    Partition shape;
    int n = 1;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }
};

/// At t=0 every coefficient must be the number of semistandard tableaux of
/// that content; at t=1 the expansion must collapse to the monomial
/// symmetric polynomial (coefficient 1 on the orbit of the shape).
inline SpecializationReport specialization_check(const Partition& lambda, int n) {
    const HLExpansion p = p_macdonald(lambda, n);
    const auto counts = ssyt_content_counts(lambda, n);

    bool kostka_ok = true;
    {
        std::map<IntVector, bool> exponents;
        for (const auto& [mu, c] : p.poly.coeffs()) exponents[mu] = true;
        for (const auto& [mu, c] : counts) exponents[mu] = true;
        for (const auto& [mu, unused] : exponents) {
            const Rational at0 = p.poly.coeff(mu).eval_at(0);
            auto it = counts.find(mu);
            const long long expect = it == counts.end() ? 0 : it->second;
            if (at0 != expect) { kostka_ok = false; break; }
        }
    }

    bool monomial_ok = true;
    {
        const IntVector padded = lambda.to_weight(n);
        std::map<IntVector, bool> exponents;
        for (const auto& [mu, c] : p.poly.coeffs()) exponents[mu] = true;
        IntVector orbit = padded;
        std::sort(orbit.begin(), orbit.end());
        do {
            exponents[orbit] = true;
        } while (std::next_permutation(orbit.begin(), orbit.end()));
        for (const auto& [mu, unused] : exponents) {
            IntVector sorted = mu;
            std::sort(sorted.begin(), sorted.end(), std::greater<int>());
            const int expect = (sorted == padded) ? 1 : 0;
            if (p.poly.coeff(mu).eval_at(1) != expect) { monomial_ok = false; break; }
        }
    }

    return {lambda, n, {{"t=0 coefficients are tableau counts", kostka_ok},
                        {"t=1 expansion is the monomial basis element", monomial_ok}}};
}

} // namespace hlpoly
