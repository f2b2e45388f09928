#pragma once

#include "tangles/errors.hpp"
#include "tangles/rational.hpp"

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <type_traits>

namespace tangles {

// Variable tags. `laurent` allows negative exponents and makes monomials units.
struct NVar {
    static constexpr const char* symbol = "n";
    static constexpr bool laurent = false;
};
struct XVar {
    static constexpr const char* symbol = "x";
    static constexpr bool laurent = false;
};
struct CVar {
    static constexpr const char* symbol = "c";
    static constexpr bool laurent = true;
};

// Polynomial in one variable with Rational coefficients, stored as a sparse
// exponent -> coefficient map without zero entries.
template <class Var>
class SparsePoly {
public:
    using Terms = std::map<int, Rational>;

    SparsePoly() = default;
    SparsePoly(const Rational& c) {
        if (c != 0) terms_.emplace(0, c);
    }
    SparsePoly(long c) : SparsePoly(Rational(c)) {}

    static SparsePoly monomial(int e, const Rational& c = 1) {
        SparsePoly p;
        p.add_term(e, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // INT_MIN for the zero polynomial.
    int degree() const { return terms_.empty() ? INT_MIN : terms_.rbegin()->first; }
    int low_degree() const { return terms_.empty() ? INT_MAX : terms_.begin()->first; }

    void add_term(int e, const Rational& c) {
        if (c == 0) return;
        if (e < 0 && !Var::laurent) throw DomainError("negative exponent in polynomial ring");
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    SparsePoly& operator*=(const Rational& r) {
        if (r == 0) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.second *= r;
        }
        return *this;
    }
    SparsePoly& operator*=(const SparsePoly& o) {
        *this = *this * o;
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator-(SparsePoly a) {
        for (auto& t : a.terms_) t.second = -t.second;
        return a;
    }
    friend SparsePoly operator*(SparsePoly a, const Rational& r) { return a *= r; }
    friend SparsePoly operator*(const Rational& r, SparsePoly a) { return a *= r; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out;
        if (a.is_zero() || b.is_zero()) return out;
        Rational prod;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                prod = ca * cb;
                out.add_term(ea + eb, prod);
            }
        }
        return out;
    }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    SparsePoly derivative() const {
        SparsePoly out;
        for (const auto& [e, c] : terms_) {
            if (e != 0) out.add_term(e - 1, c * e);
        }
        return out;
    }

    // Multiply by var^k.
    SparsePoly shifted(int k) const {
        SparsePoly out;
        for (const auto& [e, c] : terms_) out.add_term(e + k, c);
        return out;
    }

    // Substitute var -> var^k (k >= 1).
    SparsePoly stretched(int k) const {
        SparsePoly out;
        for (const auto& [e, c] : terms_) out.add_term(e * k, c);
        return out;
    }

    template <class T>
    T eval(const T& v) const {
        T acc = T(0);
        if (terms_.empty()) return acc;
        // Horner over the dense exponent range.
        int lo = low_degree() < 0 ? low_degree() : 0;
        for (int e = degree(); e >= lo; --e) {
            acc *= v;
            auto it = terms_.find(e);
            if (it != terms_.end()) acc += convert<T>(it->second);
        }
        if (lo < 0) {
            T inv = T(1) / v;
            for (int e = lo; e < 0; ++e) acc *= inv;
        }
        return acc;
    }

    std::optional<SparsePoly> inverse() const {
        if (terms_.size() != 1) return std::nullopt;
        auto [e, c] = *terms_.begin();
        if (e != 0 && !Var::laurent) return std::nullopt;
        return monomial(-e, 1 / c);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            std::string cs = c.get_str();
            bool neg = cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? "-" : "+";
            }
            bool unit = cs == "1";
            if (e == 0) {
                s += cs;
                continue;
            }
            if (!unit) s += (cs.find('/') != std::string::npos ? "(" + cs + ")" : cs);
            s += Var::symbol;
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    template <class T>
    static T convert(const Rational& r) {
        if constexpr (std::is_same_v<T, Rational>) {
            return r;
        } else {
            return T(r.get_num().get_str()) / T(r.get_den().get_str());
        }
    }

    Terms terms_;
};

using NPoly = SparsePoly<NVar>;
using XPoly = SparsePoly<XVar>;
using CPoly = SparsePoly<CVar>;

template <class Var>
struct PlainVar {
    static constexpr const char* symbol = Var::symbol;
    static constexpr bool laurent = false;
};

// Exact quotient a / b, or nullopt when b does not divide a.
template <class Var>
std::optional<SparsePoly<Var>> exact_div(const SparsePoly<Var>& a, const SparsePoly<Var>& b) {
    if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
    if constexpr (Var::laurent) {
        // Powers of the variable are units: normalize both sides first.
        if (a.is_zero()) return a;
        SparsePoly<PlainVar<Var>> pa, pb;
        for (const auto& [e, c] : a.terms()) pa.add_term(e - a.low_degree(), c);
        for (const auto& [e, c] : b.terms()) pb.add_term(e - b.low_degree(), c);
        auto pq = exact_div(pa, pb);
        if (!pq) return std::nullopt;
        SparsePoly<Var> q;
        for (const auto& [e, c] : pq->terms()) q.add_term(e + a.low_degree() - b.low_degree(), c);
        return q;
    }
    SparsePoly<Var> q, r = a;
    const int db = b.degree();
    const Rational lb = b.coeff(db);
    while (!r.is_zero() && r.degree() >= db) {
        auto t = SparsePoly<Var>::monomial(r.degree() - db, r.coeff(r.degree()) / lb);
        q += t;
        r -= t * b;
    }
    if (!r.is_zero()) return std::nullopt;
    return q;
}

} // namespace tangles
