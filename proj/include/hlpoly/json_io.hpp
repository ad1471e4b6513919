#pragma once

#include "hlpoly/hall_littlewood.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace hlpoly {

using nlohmann::json;

/// Coefficients ride as JSON numbers while they fit in 53 bits and as
/// decimal strings beyond that.
inline json int_to_json(const Int& c) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (c >= lo && c <= hi) return c.convert_to<long long>();
    return c.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

/// List of [exponent, coefficient] pairs sorted by exponent.
inline json laurent_to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, int_to_json(c)}));
    return out;
}

inline LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& term : j)
        p += LaurentPoly::monomial(int_from_json(term.at(1)), term.at(0).get<int>());
    return p;
}

inline json permutation_to_json(const Permutation& w) { return json(w.images()); }

inline Permutation permutation_from_json(const json& j) {
    return Permutation(j.get<std::vector<int>>());
}

/// Array of rows.
inline json filling_to_json(const Filling& T) { return json(T.rows()); }

inline Filling filling_from_json(const json& j) {
    return Filling::from_rows(j.get<std::vector<std::vector<int>>>());
}

inline json hecke_to_json(const HeckeElement& h) {
    json out = json::array();
    for (const auto& [w, c] : h.terms())
        out.push_back({{"permutation", permutation_to_json(w)}, {"coefficient", laurent_to_json(c)}});
    return out;
}

inline HeckeElement hecke_from_json(const json& j, int n) {
    HeckeElement h(n);
    for (const auto& term : j)
        h.add_term(permutation_from_json(term.at("permutation")), laurent_from_json(term.at("coefficient")));
    return h;
}

inline json affine_to_json(const AffineElement& a) {
    json out = json::array();
    for (const auto& [k, c] : a.terms())
        out.push_back({{"exponent", json(k.first)},
                       {"permutation", permutation_to_json(k.second)},
                       {"coefficient", laurent_to_json(c)}});
    return out;
}

inline json sympoly_to_json(const SymPoly& p) {
    json out = json::array();
    for (const auto& [mu, c] : p.coeffs())
        out.push_back({{"exponent", json(mu)}, {"poly", laurent_to_json(c)}});
    return out;
}

inline SymPoly sympoly_from_json(const json& j, int n) {
    SymPoly p(n);
    for (const auto& term : j)
        p.add_term(term.at("exponent").get<IntVector>(), laurent_from_json(term.at("poly")));
    return p;
}

/// {shape, n, route, coefficients, checks}
inline json expansion_to_json(const HLExpansion& e, const std::vector<CheckResult>& checks = {}) {
    json out{{"shape", json(e.shape.parts())},
             {"n", e.n},
             {"route", route_name(e.route)},
             {"coefficients", sympoly_to_json(e.poly)}};
    json cs = json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}});
    out["checks"] = cs;
    return out;
}

} // namespace hlpoly
