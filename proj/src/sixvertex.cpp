#include "tangles/sixvertex.hpp"

#include <string>
#include <vector>

namespace tangles {

namespace {

using CSeries = TruncSeries<CPoly>;
using HSeries = TruncSeries<HalfAngleElem>;

Rational binom(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

bool odd(int v) { return (v & 1) != 0; }

// Integrating out X leaves a one-matrix model whose planar limit is a
// self-consistent single-trace potential V(a) = a^2/2 - sum_j t_j a^j with
//   t_j = sum_{k >= j} (2/k) s^k C(k, j) mu_{k-j} cos((2j - k) psi),
// s^2 = b0, psi = theta/2, mu_m the planar moments. The loop equations
//   mu_{k+1} = sum_{a<k} mu_a mu_{k-1-a} + sum_j j t_j mu_{k+j-1}
// close order by order in s. mu_j has the parity of j in s.
struct PlanarModel {
    int budget = 0;
    std::vector<std::vector<CPoly>> mu;  // mu[j][p], p <= budget - j
    std::vector<std::vector<CPoly>> t;   // t[j][p], p <= budget
};

PlanarModel planar_model(int budget) {
    const int N = budget;
    PlanarModel m;
    m.budget = N;
    m.mu.resize(N + 1);
    for (int j = 0; j <= N; ++j) m.mu[j].resize(N - j + 1);
    m.t.assign(N + 1, std::vector<CPoly>(N + 1));
    std::vector<CPoly> cheb(2 * N + 1);
    for (int k = 0; k <= 2 * N; ++k) cheb[k] = chebyshev_t<CVar>(k);

    m.mu[0][0] = CPoly(1L);
    for (int p = 0; p <= N; ++p) {
        for (int j = 1; j <= p; ++j) {
            if (odd(p - j)) continue;
            CPoly acc;
            for (int k = j; k <= p; ++k) {
                const int idx = k - j, ord = p - k;
                if (ord > N - idx) continue;
                const CPoly& mom = m.mu[idx][ord];
                if (mom.is_zero()) continue;
                acc += mom * cheb[std::abs(2 * j - k)] * (make_rational(2, k) * binom(k, j));
            }
            m.t[j][p] = std::move(acc);
        }
        for (int k = 0; k + 1 <= N - p; ++k) {
            if (odd(p - (k + 1))) continue;
            CPoly acc;
            for (int a = 0; a <= k - 1; ++a) {
                for (int p1 = 0; p1 <= p; ++p1) {
                    const CPoly& x = m.mu[a][p1];
                    if (x.is_zero()) continue;
                    const CPoly& y = m.mu[k - 1 - a][p - p1];
                    if (y.is_zero()) continue;
                    acc += x * y;
                }
            }
            for (int j = 1; j <= p; ++j) {
                for (int p1 = j; p1 <= p; ++p1) {
                    const CPoly& tj = m.t[j][p1];
                    if (tj.is_zero()) continue;
                    const CPoly& y = m.mu[k + j - 1][p - p1];
                    if (y.is_zero()) continue;
                    acc += tj * y * Rational(j);
                }
            }
            m.mu[k + 1][p] = std::move(acc);
        }
    }
    return m;
}

// <trA>/N = 2 cos(psi) b0 G, i.e. G = mu_1 / (2 cos(psi) s).
TruncSeries<ThetaElem> g_from_moments(const PlanarModel& m, int order) {
    TruncSeries<ThetaElem> g(Var::b0, order);
    for (int k = 0; k <= order; ++k) {
        const CPoly c = m.mu[1][2 * k + 1].shifted(-1) * Rational(1, 2);
        g.coeff(k) = half_to_theta(HalfAngleElem(c));
    }
    return g;
}

// Endpoint ratio of the effective one-cut density as a series in s.
// The cut is [sigma - delta, sigma + delta]; with X = sigma + delta cos(phi)
// the conditions are <V'(X)> = 0 and <V'(X) delta cos(phi)> = 2, and
// A_m = <X^m> obeys (m+1) A_{m+1} = (2m+1) sigma A_m - m (sigma^2 - delta^2) A_{m-1}.
CSeries log_endpoint_ratio(const PlanarModel& m, int order) {
    const int M = order;
    std::vector<CSeries> t(M + 1);
    for (int j = 1; j <= M; ++j) t[j] = CSeries(Var::s, M, std::vector<CPoly>(m.t[j].begin(), m.t[j].begin() + M + 1));

    CSeries sigma(Var::s, M);
    CSeries delta = CSeries::constant(Var::s, M, CPoly(2L));
    for (int w = 1; w <= M; ++w) {
        const CSeries sg = sigma.truncated(w), dl = delta.truncated(w);
        const CSeries one = CSeries::constant(Var::s, w, CPoly(1L));
        const CSeries d2 = (sg * sg - dl * dl).truncated(w);
        std::vector<CSeries> A{one, sg};
        for (int k = 1; k < w; ++k) {
            const CSeries next = (sg * A[k] * CPoly(Rational(2 * k + 1)) - d2 * A[k - 1] * CPoly(Rational(k))).truncated(w);
            A.push_back(next * CPoly(Rational(1, k + 1)));
        }
        CSeries s0(Var::s, w), s1(Var::s, w);
        for (int j = 1; j <= w; ++j) {
            const CSeries tj = t[j].truncated(w) * CPoly(Rational(j));
            s0 = s0 + (tj * A[j - 1]).truncated(w);
            const CSeries aj = j < static_cast<int>(A.size()) ? A[j] : CSeries(Var::s, w);
            s1 = s1 + (tj * (aj - sg * A[j - 1])).truncated(w);
        }
        CSeries nsig(Var::s, M), ndel(Var::s, M);
        const CSeries root = series_pow(one + s1 * CPoly(Rational(1, 2)), Rational(1, 2)) * CPoly(2L);
        for (int k = 0; k <= w; ++k) {
            nsig.coeff(k) = s0[k];
            ndel.coeff(k) = root[k];
        }
        sigma = nsig;
        delta = ndel;
    }
    // rho = (1 - 2 c s (sigma - delta)) / (1 - 2 c s (sigma + delta))
    const CSeries two_cs = CSeries::variable(Var::s, M, CPoly::monomial(1, 2));
    const CSeries one = CSeries::constant(Var::s, M, CPoly(1L));
    return series_log(one - two_cs * (sigma - delta)) - series_log(one - two_cs * (sigma + delta));
}

// sin(m pi / 2)
int sin_quarter(int m) {
    switch (((m % 4) + 4) % 4) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
    }
}

// sum_r d[r] eps^r / r!
HSeries taylor_at(const std::vector<HSeries>& d, int first, const HSeries& eps, int order) {
    const int R = order;
    HSeries acc(Var::q, order);
    Rational fact(1);
    std::vector<Rational> inv_fact(R + 1);
    for (int r = 0; r <= R; ++r) {
        if (r > 0) fact *= r;
        inv_fact[r] = 1 / fact;
    }
    for (int r = R; r >= 0; --r) {
        acc = (acc * eps).truncated(order);
        acc = acc + d[first + r].truncated(order) * HalfAngleElem(inv_fact[r]);
    }
    return acc;
}

// 2 max_z f(z) with f(z) = sum_n 4 q^n / (n (1 - q^{2n})) sin(n (pi/2 - psi)) sin(2 n z),
// the logarithm of the endpoint ratio on the elliptic side. The maximum sits at
// z = pi/4 + eps(q), found by Newton iteration on q-series.
HSeries elliptic_log_ratio(int order) {
    const int K = order + 1;
    std::vector<HSeries> amp(K + 1);
    for (int n = 1; n <= K; ++n) {
        HalfAngleElem sn;
        if (odd(n)) {
            sn = HalfAngleElem(chebyshev_t<CVar>(n) * Rational(odd((n - 1) / 2) ? -1 : 1));
        } else {
            sn = HalfAngleElem(CPoly(), chebyshev_u<CVar>(n - 1) * Rational(odd(n / 2) ? 1 : -1));
        }
        HSeries a(Var::q, K);
        for (int e = n; e <= K; e += 2 * n) a.coeff(e) = sn * make_rational(4, n);
        amp[n] = a;
    }
    // d[r] = f^{(r)}(pi/4) = sum_n amp_n (2n)^r sin((n + r) pi / 2)
    std::vector<HSeries> d(K + 3, HSeries(Var::q, K));
    for (int r = 0; r <= K + 2; ++r) {
        for (int n = 1; n <= K; ++n) {
            const int sg = sin_quarter(n + r);
            if (sg == 0) continue;
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2UL * n, static_cast<unsigned long>(r));
            d[r] = d[r] + amp[n] * HalfAngleElem(Rational(p * sg));
        }
    }
    HSeries eps(Var::q, K);
    int prec = 1;
    for (int iter = 0; iter < 64; ++iter) {
        const int w = std::min(prec + 1, K);
        // Unknown higher coefficients of eps start at zero.
        const HSeries e(Var::q, w, std::vector<HalfAngleElem>(eps.coeffs().begin(), eps.coeffs().begin() + std::min(eps.order(), w) + 1));
        const HSeries f1 = taylor_at(d, 1, e, w);
        const HSeries f2 = taylor_at(d, 2, e, w);
        const HSeries step = series_div(f1, f2);
        HSeries next(Var::q, K);
        bool changed = false;
        for (int k = 0; k <= step.order(); ++k) {
            next.coeff(k) = e[k] - step[k];
            if (k <= eps.order() && next[k] != eps[k]) changed = true;
        }
        eps = next.truncated(step.order());
        if (w == K && !changed) break;
        prec = std::min(2 * prec + 1, K);
    }
    if (eps.order() < order) throw AnchorMismatch("stationary point series did not reach the requested order");
    return (taylor_at(d, 0, eps.truncated(order), order) * HalfAngleElem(2L)).truncated(order);
}

template <class R>
TruncSeries<ThetaElem> to_theta(const TruncSeries<R>& s) {
    return map_coeffs(s, [](const R& c) { return half_to_theta(HalfAngleElem(c)); });
}

} // namespace

TruncSeries<ThetaElem> two_point_in_b0(int order) {
    const auto m = planar_model(2 * order + 2);
    return g_from_moments(m, order);
}

BareSeriesBundle bare_bundle_n2(int order) {
    if (order < 2) throw DomainError("bare_bundle_n2 needs order >= 2");
    const int pb = order + 1;        // b0 order
    const int N = 2 * pb + 2;        // moment budget
    const int M = 2 * pb + 1;        // s and q order

    const PlanarModel model = planar_model(N);
    const auto g_b0 = g_from_moments(model, pb);

    // Nome: match the endpoint ratio on both sides, s(q) = (log rho)^{-1}(L(q)).
    const CSeries lr = log_endpoint_ratio(model, M);
    const HSeries lr_h = map_coeffs(lr, [](const CPoly& c) { return HalfAngleElem(c); });
    const HSeries ell = elliptic_log_ratio(M);
    const HSeries s_of_q = series_compose(series_revert(lr_h.with_var(Var::ell)), ell);
    const HSeries b0_q = s_of_q * s_of_q;

    TruncSeries<ThetaElem> b0(Var::tau, pb);
    for (int k = 0; k <= b0_q.order(); ++k) {
        if (odd(k) && !b0_q[k].is_zero()) throw AnchorMismatch("b0(q) has an odd power of q");
    }
    for (int m = 0; m <= pb; ++m) b0.coeff(m) = half_to_theta(b0_q[2 * m]);

    // F = int (G - 1)/(2 b0) db0, H = dF/dtheta at fixed b0.
    TruncSeries<ThetaElem> f_b0(Var::b0, pb), h_b0(Var::b0, pb);
    for (int k = 1; k <= pb; ++k) f_b0.coeff(k) = g_b0[k] * Rational(1, 2 * k);
    for (int k = 0; k <= pb; ++k) h_b0.coeff(k) = theta_dtheta(f_b0[k]);

    BareSeriesBundle out;
    out.order = order;
    out.G_b0 = g_b0;
    out.F_b0 = f_b0;
    out.b0 = b0.truncated(order + 1);
    const auto G = series_compose(g_b0, out.b0);
    const auto F = series_compose(f_b0, out.b0);
    const auto H = series_compose(h_b0, out.b0);
    const auto b = out.b0 * G * G;

    const auto x = ThetaElem::v();
    const auto one = TruncSeries<ThetaElem>::constant(Var::tau, order + 1, ThetaElem(1L));
    const auto h_over_s = map_coeffs(H, [](const ThetaElem& e) { return theta_div_sin(e); });
    const auto num_b = (G - one) * ThetaElem(Rational(1, 2)) + h_over_s * x;
    const auto gamma_b = series_div(num_b, b) - one;
    const auto gamma_c = series_div(-h_over_s, b) - one * ThetaElem(2L);
    const auto gb = gamma_b.truncated(order), gc = gamma_c.truncated(order);
    const auto bt = b.truncated(order);
    const auto c = bt * (x * Rational(2));
    const auto dp = dprimes_n2(gb, gc, bt, c);

    out.G = G.truncated(order);
    out.F = F.truncated(order);
    out.H = H.truncated(order);
    out.b = bt;
    out.gamma_b = gb;
    out.gamma_c = gc;
    out.dprime_b = dp.first;
    out.dprime_c = dp.second;
    out.b0 = out.b0.truncated(order);

    // W1 = 1/(2 cos(theta/2)) - 2 cos(theta/2) b0 G
    const auto b0g = map_coeffs((out.b0 * out.G).truncated(order), [](const ThetaElem& e) { return theta_to_half(e); });
    out.w1 = b0g * HalfAngleElem(CPoly::monomial(1, -2));
    out.w1.coeff(0) = out.w1[0] + HalfAngleElem(CPoly::monomial(-1, Rational(1, 2)));

    check_anchors(out);
    return out;
}

void check_anchors(const BareSeriesBundle& bd) {
    const ThetaElem x = ThetaElem::v();
    std::string failures;
    auto expect = [&failures](const TruncSeries<ThetaElem>& s, int k, const ThetaElem& want, const char* name) {
        if (k > s.order()) return;
        if (s[k] != want) {
            failures += std::string(failures.empty() ? "" : "; ") + name + " at tau^" + std::to_string(k) + ": got " +
                        s[k].str() + ", expected " + want.str();
        }
    };
    const ThetaElem one(1L), zero;
    const ThetaElem one_2x = one + x * Rational(2);
    expect(bd.b0, 0, zero, "b0");
    expect(bd.b0, 1, one, "b0");
    expect(bd.b0, 2, one_2x * Rational(-6), "b0");
    expect(bd.G, 0, one, "G");
    expect(bd.G, 1, one_2x * Rational(2), "G");
    expect(bd.gamma_b, 0, zero, "Gamma_b");
    expect(bd.gamma_b, 1, one, "Gamma_b");
    expect(bd.gamma_b, 2, ThetaElem(-1L), "Gamma_b");
    expect(bd.gamma_c, 0, zero, "Gamma_c");
    expect(bd.gamma_c, 1, x * Rational(2), "Gamma_c");
    // The vanishing of D'_c at tau^2 fixes this coefficient to 2 - 4x.
    expect(bd.gamma_c, 2, ThetaElem(2L) - x * Rational(4), "Gamma_c");
    for (int k = 0; k < 5; ++k) {
        expect(bd.dprime_b, k, zero, "D'_b");
        expect(bd.dprime_c, k, zero, "D'_c");
    }
    expect(bd.dprime_b, 5, from_fourier({6, 12, 4, 4}), "D'_b");
    expect(bd.dprime_c, 5, from_fourier({8, 24, 8, 10, 0, 2}), "D'_c");

    auto parity = [&failures](const TruncSeries<ThetaElem>& s, bool even, const char* name) {
        for (int k = 0; k <= s.order(); ++k) {
            if (even ? !s[k].is_even() : !s[k].is_odd()) {
                failures += std::string(failures.empty() ? "" : "; ") + name + " violates theta parity at tau^" +
                            std::to_string(k);
                return;
            }
        }
    };
    for (const auto* s : {&bd.b0, &bd.G, &bd.F, &bd.b, &bd.gamma_b, &bd.gamma_c, &bd.dprime_b, &bd.dprime_c}) {
        parity(*s, true, "even series");
    }
    parity(bd.H, false, "H");
    if (!failures.empty()) throw AnchorMismatch(failures);
}

} // namespace tangles
