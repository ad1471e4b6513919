#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hlpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown by LaurentPoly::exact_div when no quotient exists in Z[t^{±1}].
struct NotDivisible : std::domain_error {
    NotDivisible() : std::domain_error("laurent: quotient does not exist in Z[t^(+-1)]") {}
};

/// Thrown when evaluating negative powers of t at t = 0.
struct PoleAtZero : std::domain_error {
    PoleAtZero() : std::domain_error("laurent: pole at t = 0") {}
};

/// An element of Z[t^{±1}], stored sparsely as exponent -> coefficient.
///
/// Canonical form: no stored coefficient is zero, so two values are equal
/// iff their term maps are identical; the zero polynomial is the empty map.
/// Coefficients are arbitrary-precision integers. Values are immutable in
/// spirit: every operation returns a fresh canonical value.
class LaurentPoly {
public:
    using TermMap = std::map<int, Int>;

    LaurentPoly() = default;
    LaurentPoly(int c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(long long c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(Int c) { if (c != 0) terms_[0] = std::move(c); }

    /// c * t^e
    static LaurentPoly monomial(Int c, int e) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }

    static LaurentPoly t(int e = 1) { return monomial(1, e); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Int coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    int min_exponent() const { require_nonzero(); return terms_.begin()->first; }
    int max_exponent() const { require_nonzero(); return terms_.rbegin()->first; }
    bool has_negative_exponents() const { return !terms_.empty() && terms_.begin()->first < 0; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    LaurentPoly operator+(const LaurentPoly& o) const { LaurentPoly r = *this; r += o; return r; }
    LaurentPoly operator-(const LaurentPoly& o) const { LaurentPoly r = *this; r -= o; return r; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    /// this * t^k
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    /// Exact quotient q with q * den == *this, else throws NotDivisible.
    ///
    /// Runs leading-term long division from the highest exponent after
    /// pulling out the minimal t-powers of both operands. A nonzero
    /// remainder or an inexact coefficient division signals NotDivisible
    /// instead of returning a truncated quotient.
    LaurentPoly exact_div(const LaurentPoly& den) const {
        if (den.is_zero()) throw std::invalid_argument("laurent: division by zero");
        if (is_zero()) return {};
        const int shift = min_exponent() - den.min_exponent();
        LaurentPoly num = shifted(-min_exponent());
        const LaurentPoly d = den.shifted(-den.min_exponent());
        const int dd = d.max_exponent();
        const Int& dl = d.terms_.rbegin()->second;
        LaurentPoly q;
        while (!num.is_zero()) {
            const int e = num.max_exponent() - dd;
            if (e < 0) throw NotDivisible{};
            const Int& nl = num.terms_.rbegin()->second;
            if (nl % dl != 0) throw NotDivisible{};
            const LaurentPoly qt = monomial(nl / dl, e);
            q += qt;
            num -= qt * d;
        }
        return q.shifted(shift);
    }

    /// Exact evaluation at a rational point.
    Rational eval_at(const Rational& t0) const {
        if (t0 == 0 && has_negative_exponents()) throw PoleAtZero{};
        Rational acc = 0;
        for (const auto& [e, c] : terms_) acc += Rational(c) * rational_pow(t0, e);
        return acc;
    }

    /// Renders with exponents ascending, e.g. "1 - t + 2*t^3"; zero is "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            const Int a = neg ? Int(-c) : c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (e == 0) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;

    void add_term(int e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void require_nonzero() const {
        if (terms_.empty()) throw std::logic_error("laurent: zero polynomial has no exponents");
    }

    static Rational rational_pow(const Rational& base, int e) {
        if (e == 0) return 1;
        if (e < 0) {
            if (base == 0) throw PoleAtZero{};
            return 1 / rational_pow(base, -e);
        }
        Rational acc = 1;
        Rational b = base;
        for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
            if (k & 1u) acc *= b;
            if (k > 1) b *= b;
        }
        return acc;
    }
};

inline LaurentPoly operator*(const Int& c, const LaurentPoly& p) { return LaurentPoly(c) * p; }

/// 1 - t^m (the ubiquitous strip factor); m = 0 gives 0.
inline LaurentPoly one_minus_t_pow(int m) {
    return LaurentPoly(1) - LaurentPoly::t(m);
}

} // namespace hlpoly
