// Command-line front end: expansions, psi tables, Hecke lifts, verification
// sweeps, and Hasse diagram export.

#include "hlpoly/hall_littlewood.hpp"
#include "hlpoly/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hlpoly;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("invalid integer list: " + s);
        }
    }
    return out;
}

Partition parse_lambda(const std::string& s, int n) {
    const std::vector<int> parts = parse_int_list(s);
    for (int p : parts)
        if (p < 0) throw UsageError("lambda must be nonnegative");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) throw UsageError("lambda must be weakly decreasing");
    Partition lambda(parts);
    if (lambda.num_rows() > n) throw UsageError("lambda must have at most n rows");
    return lambda;
}

/// Rows separated by '/', entries by ',': "1,1/3" is [[1,1],[3]].
Filling parse_tableau(const std::string& s, int n) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, '/')) rows.push_back(parse_int_list(row));
    try {
        Filling T = Filling::from_rows(rows);
        if (T.max_entry() > n) throw UsageError("tableau entries must be <= n");
        return T;
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid tableau: ") + e.what());
    }
}

std::string latex_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        const Int a = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) os << a;
        else {
            if (a != 1) os << a;
            os << "t";
            if (e != 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

std::string latex_tableau(const Filling& T) {
    std::ostringstream os;
    os << "\\ytableaushort{";
    const auto rows = T.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) os << ",";
        for (int v : rows[r]) os << v;
    }
    os << "}";
    return os.str();
}

std::string latex_hecke(const HeckeElement& h) {
    if (h.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : h.terms()) {
        if (!first) os << " + ";
        first = false;
        const auto& ts = c.terms();
        const bool plain = ts.size() == 1 && ts.begin()->second == 1 && ts.begin()->first == 0;
        if (!plain) os << "(" << latex_poly(c) << ")";
        if (w.is_identity()) {
            if (plain) os << "1";
        } else {
            os << "T_{";
            bool sep = false;
            for (int i : w.reduced_word()) {
                if (sep) os << " ";
                sep = true;
                os << "s_" << i;
            }
            os << "}";
        }
    }
    return os.str();
}

std::string latex_monomial(const IntVector& mu) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] == 0) continue;
        any = true;
        os << "X_{" << i + 1 << "}";
        if (mu[i] != 1) os << "^{" << mu[i] << "}";
    }
    return any ? os.str() : "1";
}

int run_expand(int n, const std::string& lambda_str, const std::string& route,
               const std::string& format) {
    const Partition lambda = parse_lambda(lambda_str, n);
    std::vector<HLExpansion> expansions;
    if (route == "macdonald" || route == "all") expansions.push_back(p_macdonald(lambda, n));
    if (route == "hecke" || route == "all") expansions.push_back(p_hecke(lambda, n));
    if (route == "psi-lift" || route == "all") expansions.push_back(p_psi_lift(lambda, n));
    if (expansions.empty()) throw UsageError("unknown route: " + route);

    bool agree = true;
    for (const auto& e : expansions) agree = agree && e.poly == expansions.front().poly;
    std::vector<CheckResult> checks;
    if (route == "all") checks.push_back({"route agreement", agree});

    if (format == "json") {
        json out = json::array();
        for (const auto& e : expansions) out.push_back(expansion_to_json(e, checks));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& e : expansions) {
            std::cout << "P" << e.shape.to_string() << " n=" << e.n
                      << " route=" << route_name(e.route) << "\n";
            for (const auto& [mu, c] : e.poly.coeffs()) {
                if (format == "latex") {
                    std::cout << "  (" << latex_poly(c) << ") \\, " << latex_monomial(mu) << "\n";
                } else {
                    std::cout << "  X[";
                    for (std::size_t i = 0; i < mu.size(); ++i) std::cout << (i ? "," : "") << mu[i];
                    std::cout << "]  " << c.to_string() << "\n";
                }
            }
        }
        if (route == "all")
            std::cout << (agree ? "all routes agree" : "ROUTE DISAGREEMENT") << "\n";
    }
    if (!agree) {
        std::cerr << "error: expansion routes disagree\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_psi(int n, const std::string& lambda_str, const std::string& format) {
    const Partition lambda = parse_lambda(lambda_str, n);
    const auto tableaux = enumerate_ssyt(lambda, n);
    if (format == "json") {
        json out = json::array();
        for (const Filling& T : tableaux)
            out.push_back({{"tableau", filling_to_json(T)},
                           {"psi", laurent_to_json(psi_macdonald(T, n))}});
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    for (const Filling& T : tableaux) {
        const LaurentPoly psi = psi_macdonald(T, n);
        if (format == "latex")
            std::cout << "\\psi_{" << latex_tableau(T) << "} = " << latex_poly(psi) << "\n";
        else
            std::cout << T.to_string() << "  psi = " << psi.to_string() << "\n";
    }
    return kExitOk;
}

int run_bigpsi(int n, const std::string& lambda_str, const std::string& tableau_str,
               const std::string& format) {
    std::vector<Filling> tableaux;
    if (!tableau_str.empty()) {
        Filling T = parse_tableau(tableau_str, n);
        if (!lambda_str.empty() && !(T.shape() == parse_lambda(lambda_str, n)))
            throw UsageError("tableau shape does not match lambda");
        tableaux.push_back(std::move(T));
    } else if (!lambda_str.empty()) {
        tableaux = enumerate_ssyt(parse_lambda(lambda_str, n), n);
    } else {
        throw UsageError("bigpsi needs --lambda or --tableau");
    }

    if (format == "json") {
        json out = json::array();
        for (const Filling& T : tableaux)
            out.push_back({{"tableau", filling_to_json(T)},
                           {"bigpsi", hecke_to_json(big_psi(T, n))}});
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    for (const Filling& T : tableaux) {
        const HeckeElement psi = big_psi(T, n);
        if (format == "latex")
            std::cout << "\\Psi_{" << latex_tableau(T) << "} = " << latex_hecke(psi) << "\n";
        else
            std::cout << T.to_string() << "  Psi = " << psi.to_string() << "\n";
    }
    return kExitOk;
}

int run_verify(int max_n, int max_weight) {
    bool all_ok = true;
    for (int n = 2; n <= max_n; ++n) {
        for (const Partition& lambda : enumerate_partitions(max_weight, n)) {
            std::vector<std::string> failures;

            const HLExpansion pm = p_macdonald(lambda, n);
            const HLExpansion ph = p_hecke(lambda, n);
            const HLExpansion pl = p_psi_lift(lambda, n);
            if (!(pm.poly == ph.poly && pm.poly == pl.poly)) failures.push_back("routes");
            if (!pm.is_monic()) failures.push_back("monic");
            if (!pm.poly.is_symmetric()) failures.push_back("symmetric");

            AffineElement lift_sum(n);
            for (const Filling& T : enumerate_ssyt(lambda, n))
                lift_sum += AffineElement::from_hecke(big_psi(T, n)).shifted(T.weight(n));
            if (!(lift_sum == one0_xlambda(lambda, n))) failures.push_back("lift");

            bool tilde_ok = true;
            for (const Filling& T : enumerate_ssyt(lambda, n)) {
                const LaurentPoly tp = tilde_psi(T, lambda, n);
                if (tp != psi_macdonald(T, n) || tp.has_negative_exponents()) tilde_ok = false;
            }
            if (!tilde_ok) failures.push_back("tilde-psi");

            bool rec_ok = true;
            for (const Filling& T : enumerate_column_fillings(lambda, n)) {
                const HeckeElement def = big_psi(T, n);
                if (def != big_psi_recursive(T, Partition{}, n)) rec_ok = false;
                if (def.is_zero() != !T.is_semistandard()) rec_ok = false;
            }
            if (!rec_ok) failures.push_back("recursion");

            if (!specialization_check(lambda, n).all_pass()) failures.push_back("specialization");

            if (failures.empty()) {
                std::cout << "ok   n=" << n << " lambda=" << lambda.to_string() << "\n";
            } else {
                all_ok = false;
                std::cout << "FAIL n=" << n << " lambda=" << lambda.to_string() << " :";
                for (const auto& f : failures) std::cout << " " << f;
                std::cout << "\n";
            }
        }
    }
    std::cout << (all_ok ? "verify: all checks passed" : "verify: FAILURES above") << "\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hall-Littlewood P-polynomials via the affine Hecke algebra"};
    app.require_subcommand(1);

    int n = 0;
    std::string lambda_str, route = "all", format = "text", tableau_str;
    int ell = 0, max_weight = 6;

    auto* expand = app.add_subcommand("expand", "monomial expansion of P_lambda");
    expand->add_option("--n", n, "rank")->required();
    expand->add_option("--lambda", lambda_str, "shape, e.g. 2,1,0")->required();
    expand->add_option("--route", route, "macdonald|hecke|psi-lift|all");
    expand->add_option("--format", format, "text|json|latex");

    auto* psi = app.add_subcommand("psi", "psi table over the tableaux of a shape");
    psi->add_option("--n", n, "rank")->required();
    psi->add_option("--lambda", lambda_str, "shape")->required();
    psi->add_option("--format", format, "text|json|latex");

    auto* bigpsi = app.add_subcommand("bigpsi", "Hecke lifts Psi_T");
    bigpsi->add_option("--n", n, "rank")->required();
    bigpsi->add_option("--lambda", lambda_str, "shape");
    bigpsi->add_option("--tableau", tableau_str, "rows spec, e.g. 1,1/3");
    bigpsi->add_option("--format", format, "text|json|latex");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--n", n, "largest rank to sweep (from 2)")->default_val(4);
    verify->add_option("--max-weight", max_weight, "largest |lambda|")->default_val(6);

    auto* hasse = app.add_subcommand("hasse", "DOT Hasse diagram of the column poset");
    hasse->add_option("--ell", ell, "column length")->required();
    hasse->add_option("--n", n, "rank")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(expand)) return run_expand(n, lambda_str, route, format);
        if (app.got_subcommand(psi)) return run_psi(n, lambda_str, format);
        if (app.got_subcommand(bigpsi)) return run_bigpsi(n, lambda_str, tableau_str, format);
        if (app.got_subcommand(verify)) return run_verify(n, max_weight);
        if (app.got_subcommand(hasse)) {
            std::cout << hasse_dot(ell, n);
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
