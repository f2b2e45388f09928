#pragma once

#include "tangles/errors.hpp"
#include "tangles/ring.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tangles {

enum class Var { g, tau, b0, s, q, ell, t };

const char* var_name(Var v);
Var parse_var(const std::string& s);

// Truncated power series c_0 + c_1 v + ... + c_K v^K + O(v^{K+1}).
// Coefficients above K are unknown; reading them is an error.
template <class R>
class TruncSeries {
public:
    TruncSeries() : var_(Var::g), order_(-1) {}
    TruncSeries(Var v, int order) : var_(v), order_(order), c_(std::max(order + 1, 0)) {}
    TruncSeries(Var v, int order, std::vector<R> coeffs) : var_(v), order_(order), c_(std::move(coeffs)) {
        c_.resize(std::max(order + 1, 0));
    }

    static TruncSeries constant(Var v, int order, const R& c) {
        TruncSeries s(v, order);
        if (order >= 0) s.c_[0] = c;
        return s;
    }
    // c * v
    static TruncSeries variable(Var v, int order, const R& c = R(1L)) {
        TruncSeries s(v, order);
        if (order >= 1) s.c_[1] = c;
        return s;
    }

    Var var() const { return var_; }
    int order() const { return order_; }
    const std::vector<R>& coeffs() const { return c_; }

    const R& operator[](int k) const {
        check(k);
        return c_[k];
    }
    R& coeff(int k) {
        check(k);
        return c_[k];
    }

    // Index of the first nonzero coefficient, or order + 1 if none is known.
    int valuation() const {
        for (int k = 0; k <= order_; ++k) {
            if (!is_zero(c_[k])) return k;
        }
        return order_ + 1;
    }

    bool is_zero_series() const { return valuation() > order_; }

    TruncSeries truncated(int k) const {
        if (k > order_) {
            throw TruncationError("cannot extend series of order " + std::to_string(order_) + " to " + std::to_string(k));
        }
        return TruncSeries(var_, k, std::vector<R>(c_.begin(), c_.begin() + std::max(k + 1, 0)));
    }

    TruncSeries with_var(Var v) const {
        TruncSeries s = *this;
        s.var_ = v;
        return s;
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        same_var(a, b);
        TruncSeries r(a.var_, std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        same_var(a, b);
        TruncSeries r(a.var_, std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const R& s) {
        TruncSeries r = a;
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    friend TruncSeries operator*(const R& s, const TruncSeries& a) { return a * s; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        same_var(a, b);
        const int order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
        TruncSeries r(a.var_, order);
        mul_into(r.c_, a.c_, b.c_, order);
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.var_ == b.var_ && a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    // out[k] = sum_{i+j=k} a[i] b[j] for k <= order; missing entries count as zero.
    static void mul_into(std::vector<R>& out, const std::vector<R>& a, const std::vector<R>& b, int order) {
        out.assign(std::max(order + 1, 0), R());
        const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
        for (int i = 0; i < na && i <= order; ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; j < nb && i + j <= order; ++j) fma_into(out[i + j], a[i], b[j]);
        }
    }

private:
    void check(int k) const {
        if (k < 0 || k > order_) {
            throw TruncationError("coefficient " + std::to_string(k) + " requested from series of order " +
                                  std::to_string(order_));
        }
    }
    static void same_var(const TruncSeries& a, const TruncSeries& b) {
        if (a.var_ != b.var_) {
            throw VariableMismatch(std::string("series in ") + var_name(a.var_) + " combined with series in " +
                                   var_name(b.var_));
        }
    }

    Var var_;
    int order_;
    std::vector<R> c_;
};

template <class R>
TruncSeries<R> mul_var_pow(const TruncSeries<R>& a, int k) {
    std::vector<R> c(k, R());
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return TruncSeries<R>(a.var(), a.order() + k, std::move(c));
}

template <class R>
TruncSeries<R> div_var_pow(const TruncSeries<R>& a, int k) {
    for (int i = 0; i < k; ++i) {
        if (!is_zero(a[i])) throw NotDivisible("series has a nonzero coefficient below the divided power");
    }
    return TruncSeries<R>(a.var(), a.order() - k, std::vector<R>(a.coeffs().begin() + k, a.coeffs().end()));
}

// 1/a for a with unit constant term.
template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& a) {
    auto inv0 = try_inverse(a[0]);
    if (!inv0) throw NonUnitLeadingCoefficient("constant term is not a unit: " + ring_str(a[0]));
    const int K = a.order();
    TruncSeries<R> r(a.var(), K);
    r.coeff(0) = *inv0;
    for (int k = 1; k <= K; ++k) {
        R acc;
        for (int j = 1; j <= k; ++j) fma_into(acc, a[j], r[k - j]);
        r.coeff(k) = -(acc * *inv0);
    }
    return r;
}

// a / b where b = v^m (unit + ...); a must vanish below v^m.
template <class R>
TruncSeries<R> series_div(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    const int m = b.valuation();
    if (m > b.order()) throw NonUnitLeadingCoefficient("division by a series with no known nonzero coefficient");
    return div_var_pow(a, m) * series_inverse(div_var_pow(b, m));
}

template <class R>
void require_zero_constant(const TruncSeries<R>& a, const char* what) {
    if (a.order() >= 0 && !is_zero(a[0])) throw NonzeroConstantTerm(std::string(what) + ": nonzero constant term");
}

// h / (1 - h)
template <class R>
TruncSeries<R> series_geom(const TruncSeries<R>& h) {
    require_zero_constant(h, "series_geom");
    auto one_minus = TruncSeries<R>::constant(h.var(), h.order(), R(1L)) - h;
    return h * series_inverse(one_minus);
}

// g / (1 + g)
template <class R>
TruncSeries<R> series_igeom(const TruncSeries<R>& g) {
    require_zero_constant(g, "series_igeom");
    auto one_plus = TruncSeries<R>::constant(g.var(), g.order(), R(1L)) + g;
    return g * series_inverse(one_plus);
}

template <class R>
TruncSeries<R> derivative(const TruncSeries<R>& a) {
    TruncSeries<R> r(a.var(), a.order() - 1);
    for (int k = 1; k <= a.order(); ++k) r.coeff(k - 1) = a[k] * Rational(k);
    return r;
}

// Antiderivative with zero constant term.
template <class R>
TruncSeries<R> integral(const TruncSeries<R>& a) {
    TruncSeries<R> r(a.var(), a.order() + 1);
    for (int k = 0; k <= a.order(); ++k) r.coeff(k + 1) = a[k] * Rational(1, k + 1);
    return r;
}

// f(u) for u with zero constant term. The result carries the variable of u.
template <class R>
TruncSeries<R> series_compose(const TruncSeries<R>& f, const TruncSeries<R>& u) {
    require_zero_constant(u, "series_compose");
    const int Kf = f.order(), Ku = u.order();
    const long vu = u.valuation();
    long vf1 = Kf + 1;
    for (int k = 1; k <= Kf; ++k) {
        if (!is_zero(f[k])) {
            vf1 = k;
            break;
        }
    }
    long K = std::min((Kf + 1) * vu - 1, Ku + (vf1 - 1) * vu);
    K = std::min<long>(K, INT_MAX / 4);
    const int order = static_cast<int>(K);
    std::vector<R> acc(order + 1), tmp;
    for (int k = Kf; k >= 0; --k) {
        TruncSeries<R>::mul_into(tmp, acc, u.coeffs(), order);
        acc.swap(tmp);
        acc[0] = acc[0] + f[k];
    }
    return TruncSeries<R>(u.var(), order, std::move(acc));
}

// p(u) for a polynomial p given by its coefficient list; u is unrestricted.
template <class R>
TruncSeries<R> poly_compose(const std::vector<R>& p, const TruncSeries<R>& u) {
    const int order = u.order();
    std::vector<R> acc(order + 1), tmp;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        TruncSeries<R>::mul_into(tmp, acc, u.coeffs(), order);
        acc.swap(tmp);
        acc[0] = acc[0] + p[k];
    }
    return TruncSeries<R>(u.var(), order, std::move(acc));
}

// Evaluates a polynomial with Rational coefficients at a series argument.
template <class V, class R>
TruncSeries<R> eval_poly(const SparsePoly<V>& p, const TruncSeries<R>& u) {
    if (p.is_zero()) return TruncSeries<R>(u.var(), u.order());
    if (p.low_degree() < 0) throw DomainError("cannot evaluate a Laurent polynomial at a series");
    std::vector<R> dense(p.degree() + 1);
    for (const auto& [e, c] : p.terms()) dense[e] = R(c);
    return poly_compose(dense, u);
}

// Compositional inverse of f = c1 v + c2 v^2 + ... with c1 a unit.
// Lagrange inversion: [v^k] f^{-1} = (1/k) [v^{k-1}] (v / f)^k.
template <class R>
TruncSeries<R> series_revert(const TruncSeries<R>& f) {
    require_zero_constant(f, "series_revert");
    const int K = f.order();
    if (K < 1) throw TruncationError("series_revert needs order >= 1");
    if (!try_inverse(f[1])) throw NonUnitLeadingCoefficient("linear coefficient is not a unit: " + ring_str(f[1]));
    const auto phi = series_inverse(div_var_pow(f, 1));
    TruncSeries<R> r(f.var(), K);
    auto power = TruncSeries<R>::constant(f.var(), K - 1, R(1L));
    for (int k = 1; k <= K; ++k) {
        power = power * phi;
        r.coeff(k) = power[k - 1] * Rational(1, k);
    }
    return r;
}

// exp(a) for a with zero constant term.
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& a) {
    require_zero_constant(a, "series_exp");
    const int K = a.order();
    TruncSeries<R> e(a.var(), K);
    if (K < 0) return e;
    e.coeff(0) = R(1L);
    for (int k = 1; k <= K; ++k) {
        R acc;
        for (int j = 1; j <= k; ++j) {
            if (!is_zero(a[j])) acc += a[j] * e[k - j] * Rational(j);
        }
        e.coeff(k) = acc * Rational(1, k);
    }
    return e;
}

template <class R>
void require_unit_constant(const TruncSeries<R>& a, const char* what) {
    if (a.order() < 0 || a[0] != R(1L)) throw NonzeroConstantTerm(std::string(what) + ": constant term must be 1");
}

// log(a) for a with constant term 1.
template <class R>
TruncSeries<R> series_log(const TruncSeries<R>& a) {
    require_unit_constant(a, "series_log");
    const int K = a.order();
    TruncSeries<R> l(a.var(), K);
    for (int k = 1; k <= K; ++k) {
        R acc;
        for (int j = 1; j < k; ++j) {
            if (!is_zero(l[j])) acc += l[j] * a[k - j] * Rational(j);
        }
        l.coeff(k) = a[k] - acc * Rational(1, k);
    }
    return l;
}

// a^alpha for a with constant term 1.
template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& a, const Rational& alpha) {
    require_unit_constant(a, "series_pow");
    const int K = a.order();
    TruncSeries<R> y(a.var(), K);
    y.coeff(0) = R(1L);
    for (int k = 1; k <= K; ++k) {
        R acc;
        for (int j = 1; j <= k; ++j) {
            if (!is_zero(a[j])) acc += a[j] * y[k - j] * Rational((alpha + 1) * j - k);
        }
        y.coeff(k) = acc * Rational(1, k);
    }
    return y;
}

// (sin a, cos a) for a with zero constant term.
template <class R>
std::pair<TruncSeries<R>, TruncSeries<R>> series_sin_cos(const TruncSeries<R>& a) {
    require_zero_constant(a, "series_sin_cos");
    const int K = a.order();
    TruncSeries<R> s(a.var(), K), c(a.var(), K);
    if (K < 0) return {s, c};
    c.coeff(0) = R(1L);
    for (int k = 1; k <= K; ++k) {
        R as, ac;
        for (int j = 1; j <= k; ++j) {
            if (is_zero(a[j])) continue;
            as += a[j] * c[k - j] * Rational(j);
            ac += a[j] * s[k - j] * Rational(j);
        }
        s.coeff(k) = as * Rational(1, k);
        c.coeff(k) = -(ac * Rational(1, k));
    }
    return {s, c};
}

template <class R, class F>
auto map_coeffs(const TruncSeries<R>& a, F&& f) {
    using S = std::decay_t<decltype(f(a[0]))>;
    std::vector<S> c;
    c.reserve(a.order() + 1);
    for (int k = 0; k <= a.order(); ++k) c.push_back(f(a[k]));
    return TruncSeries<S>(a.var(), a.order(), std::move(c));
}

template <class R>
TruncSeries<R> pow_int(const TruncSeries<R>& a, int m) {
    auto r = TruncSeries<R>::constant(a.var(), a.order(), R(1L));
    for (int i = 0; i < m; ++i) r = r * a;
    return r;
}

} // namespace tangles
