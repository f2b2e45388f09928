#pragma once

#include "tangles/sparse_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tangles {

// Element P(v) + s*Q(v) of the ring generated by v = cos(phi), s = sin(phi)
// with s^2 rewritten as 1 - v^2. With Var = XVar this is the ring in theta;
// with CVar it is the half-angle ring (phi = theta/2) with v invertible.
template <class Var>
class TrigElem {
public:
    using Poly = SparsePoly<Var>;

    TrigElem() = default;
    TrigElem(const Rational& c) : even_(c) {}
    TrigElem(long c) : even_(c) {}
    TrigElem(Poly even, Poly odd = Poly()) : even_(std::move(even)), odd_(std::move(odd)) {}

    static TrigElem v() { return TrigElem(Poly::monomial(1)); }
    static TrigElem s() { return TrigElem(Poly(), Poly(1L)); }

    const Poly& even() const { return even_; }
    const Poly& odd() const { return odd_; }
    bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
    bool is_even() const { return odd_.is_zero(); }
    bool is_odd() const { return even_.is_zero(); }

    TrigElem& operator+=(const TrigElem& o) {
        even_ += o.even_;
        odd_ += o.odd_;
        return *this;
    }
    TrigElem& operator-=(const TrigElem& o) {
        even_ -= o.even_;
        odd_ -= o.odd_;
        return *this;
    }
    TrigElem& operator*=(const Rational& r) {
        even_ *= r;
        odd_ *= r;
        return *this;
    }
    TrigElem& operator*=(const TrigElem& o) {
        *this = *this * o;
        return *this;
    }

    friend TrigElem operator+(TrigElem a, const TrigElem& b) { return a += b; }
    friend TrigElem operator-(TrigElem a, const TrigElem& b) { return a -= b; }
    friend TrigElem operator-(const TrigElem& a) { return TrigElem(-a.even_, -a.odd_); }
    friend TrigElem operator*(TrigElem a, const Rational& r) { return a *= r; }
    friend TrigElem operator*(const Rational& r, TrigElem a) { return a *= r; }
    friend TrigElem operator*(const TrigElem& a, const TrigElem& b) {
        Poly even = a.even_ * b.even_;
        if (!a.odd_.is_zero() && !b.odd_.is_zero()) even += one_minus_v2() * (a.odd_ * b.odd_);
        Poly odd = a.even_ * b.odd_ + a.odd_ * b.even_;
        return TrigElem(std::move(even), std::move(odd));
    }
    friend bool operator==(const TrigElem& a, const TrigElem& b) { return a.even_ == b.even_ && a.odd_ == b.odd_; }
    friend bool operator!=(const TrigElem& a, const TrigElem& b) { return !(a == b); }

    // d/dphi, using dv/dphi = -s and ds/dphi = v.
    TrigElem dphi() const {
        Poly even = Poly::monomial(1) * odd_ - one_minus_v2() * odd_.derivative();
        Poly odd = -even_.derivative();
        return TrigElem(std::move(even), std::move(odd));
    }

    // Exact division by s: (P + sQ)/s = Q + s*P/(1 - v^2).
    TrigElem div_s() const {
        if (even_.is_zero()) return TrigElem(odd_);
        auto q = exact_div(even_, one_minus_v2());
        if (!q) throw NotDivisible("even part not divisible by 1 - v^2: " + even_.str());
        return TrigElem(odd_, *q);
    }

    TrigElem mul_s() const { return TrigElem(one_minus_v2() * odd_, even_); }

    std::optional<TrigElem> inverse() const {
        if (!odd_.is_zero()) return std::nullopt;
        auto inv = even_.inverse();
        if (!inv) return std::nullopt;
        return TrigElem(*inv);
    }

    // Value at phi; v = cos(phi), s = sin(phi).
    template <class T>
    T eval(const T& phi) const {
        using std::cos;
        using std::sin;
        T v = cos(phi);
        return even_.eval(v) + sin(phi) * odd_.eval(v);
    }

    std::string str() const {
        if (odd_.is_zero()) return even_.str();
        std::string s = even_.is_zero() ? "" : even_.str() + " + ";
        return s + "s*(" + odd_.str() + ")";
    }

    static const Poly& one_minus_v2() {
        static const Poly p = Poly(1L) - Poly::monomial(2);
        return p;
    }

private:
    Poly even_;
    Poly odd_;
};

using ThetaElem = TrigElem<XVar>;
using HalfAngleElem = TrigElem<CVar>;

// Chebyshev polynomials T_k and U_k over the given variable.
template <class Var>
SparsePoly<Var> chebyshev_t(int k) {
    SparsePoly<Var> a(1L), b = SparsePoly<Var>::monomial(1);
    if (k == 0) return a;
    const auto two_v = SparsePoly<Var>::monomial(1, 2);
    for (int i = 1; i < k; ++i) {
        auto c = two_v * b - a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

template <class Var>
SparsePoly<Var> chebyshev_u(int k) {
    if (k < 0) return SparsePoly<Var>();
    SparsePoly<Var> a(1L), b = SparsePoly<Var>::monomial(1, 2);
    if (k == 0) return a;
    const auto two_v = SparsePoly<Var>::monomial(1, 2);
    for (int i = 1; i < k; ++i) {
        auto c = two_v * b - a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

// cos(k theta) as a ThetaElem.
ThetaElem cheb(int k);

// sum_k a_k cos(k theta) + sum_k b_k sin(k theta).
ThetaElem from_fourier(const std::vector<Rational>& cos_coeffs, const std::vector<Rational>& sin_coeffs = {});

// Inverse of from_fourier for even elements: coefficients a_k of cos(k theta).
std::vector<Rational> to_cos_fourier(const ThetaElem& a);

// Rewrites a half-angle element in terms of x = cos(theta), s = sin(theta).
// Requires the even part to have only even, nonnegative powers of cos(theta/2)
// and the odd part only odd, positive powers; NotDivisible otherwise.
ThetaElem half_to_theta(const HalfAngleElem& h);

// Embeds x = 2c^2 - 1, s = 2 sin(theta/2) c.
HalfAngleElem theta_to_half(const ThetaElem& t);

// Named wrappers matching the ring-core vocabulary.
inline ThetaElem theta_dtheta(const ThetaElem& a) { return a.dphi(); }
inline ThetaElem theta_div_sin(const ThetaElem& a) { return a.div_s(); }
Real theta_eval(const ThetaElem& a, const Real& theta);

} // namespace tangles
