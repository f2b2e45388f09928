#include "tangles/trig_elem.hpp"

#include <boost/math/constants/constants.hpp>

namespace tangles {

ThetaElem cheb(int k) {
    return ThetaElem(chebyshev_t<XVar>(k));
}

ThetaElem from_fourier(const std::vector<Rational>& cos_coeffs, const std::vector<Rational>& sin_coeffs) {
    XPoly even, odd;
    for (size_t k = 0; k < cos_coeffs.size(); ++k) even += chebyshev_t<XVar>(static_cast<int>(k)) * cos_coeffs[k];
    // sin(k theta) = sin(theta) U_{k-1}(x)
    for (size_t k = 1; k < sin_coeffs.size(); ++k) odd += chebyshev_u<XVar>(static_cast<int>(k) - 1) * sin_coeffs[k];
    return ThetaElem(even, odd);
}

std::vector<Rational> to_cos_fourier(const ThetaElem& a) {
    if (!a.is_even()) throw DomainError("to_cos_fourier: element has an odd part");
    XPoly rest = a.even();
    const int d = rest.is_zero() ? -1 : rest.degree();
    std::vector<Rational> out(std::max(d + 1, 0));
    for (int k = d; k >= 0; --k) {
        const XPoly t = chebyshev_t<XVar>(k);
        const Rational c = rest.coeff(k) / t.coeff(k);
        out[k] = c;
        rest -= t * c;
    }
    return out;
}

ThetaElem half_to_theta(const HalfAngleElem& h) {
    // c^2 = (1 + x)/2
    const XPoly c2 = (XPoly(1L) + XPoly::monomial(1)) * Rational(1, 2);
    auto even_to_x = [&](const CPoly& p, int shift) {
        XPoly out;
        XPoly power(1L);
        int e = 0;
        for (const auto& [exp, coef] : p.terms()) {
            const int k = exp + shift;
            if (k < 0 || k % 2 != 0) {
                throw NotDivisible("half-angle element is not a polynomial in cos(theta): " + h.str());
            }
            while (e < k) {
                power *= c2;
                e += 2;
            }
            out += power * coef;
        }
        return out;
    };
    // sin(theta/2) Q(c) = sin(theta) Q(c) / (2c)
    return ThetaElem(even_to_x(h.even(), 0), even_to_x(h.odd(), -1) * Rational(1, 2));
}

HalfAngleElem theta_to_half(const ThetaElem& t) {
    const CPoly x = CPoly::monomial(2, 2) - CPoly(1L);
    CPoly even, odd;
    CPoly power(1L);
    int e = 0;
    for (const auto& [exp, coef] : t.even().terms()) {
        while (e < exp) {
            power *= x;
            ++e;
        }
        even += power * coef;
    }
    power = CPoly(1L);
    e = 0;
    for (const auto& [exp, coef] : t.odd().terms()) {
        while (e < exp) {
            power *= x;
            ++e;
        }
        odd += power * coef;
    }
    return HalfAngleElem(even, odd * CPoly::monomial(1, 2));
}

Real theta_eval(const ThetaElem& a, const Real& theta) {
    if (!(theta > 0) || !(theta < boost::math::constants::pi<Real>())) {
        throw DomainError("theta_eval: theta must lie in (0, pi)");
    }
    return a.eval(theta);
}

} // namespace tangles
