#include "tangles/critical.hpp"

#include "tangles/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <vector>

namespace tangles {

namespace {

const Real& pi() {
    static const Real p = boost::math::constants::pi<Real>();
    return p;
}

Real igeom(const Real& u) { return u / (1 + u); }

// Flyped n = 2 relations with numbers in place of series: (D~'_b, D~'_c).
std::pair<Real, Real> tilde_relations(const Real& gb, const Real& gc, const Real& g) {
    const Real hb = igeom(gb - g * (1 + gb));
    const Real plus = igeom((1 - g) * (gc + gb) - g);
    const Real minus = igeom((1 + g) * (gc - gb) + g);
    const Real vc = (plus + minus) / 2;
    const Real vb = (plus - minus) / 2;
    return {hb + vb - gb + g, 2 * vc - gc};
}

struct Branch {
    bool upper;
    const char* name;
};

std::optional<Real> branch_root(const Real& theta, bool upper) {
    const auto roots = quadratic_roots(theta);
    if (!roots) return std::nullopt;
    const Real g = upper ? roots->second : roots->first;
    if (g <= 0 || g >= 1) return std::nullopt;
    return g;
}

std::optional<Real> branch_residual(const Real& theta, bool upper) {
    const auto g = branch_root(theta, upper);
    if (!g) return std::nullopt;
    return critical_residuals(theta, *g).first;
}

} // namespace

Real b0_star(const Real& theta) {
    const Real psi = theta / 2;
    const Real cs = cos(psi);
    return tan(psi) / psi / (cs * cs) / 32;
}

Real b0_star_derivative(const Real& theta) {
    // d log b0* / d theta = (cot psi - 1/psi + 3 tan psi) / 2
    const Real psi = theta / 2;
    return b0_star(theta) * (1 / tan(psi) - 1 / psi + 3 * tan(psi)) / 2;
}

Real G_star(const Real& theta) {
    const Real psi = theta / 2;
    return 8 * psi / tan(psi) - Real(2) / 3 * (pi() * pi() - theta * theta);
}

Real F_star(const Real& theta) {
    const Real psi = theta / 2;
    return -4 * psi / tan(psi) + (pi() * pi() - theta * theta) / 6;
}

Real F_star_derivative(const Real& theta) {
    const Real psi = theta / 2;
    const Real sn = sin(psi);
    return -2 * (1 / tan(psi) - psi / (sn * sn)) - theta / 3;
}

Real H_star_closed(const Real& theta) {
    const Real psi = theta / 2;
    const Real d = pi() * pi() - theta * theta;
    return -2 * theta + d * tan(psi) / 2 - pi() * pi() / (3 * theta) + d / (6 * tan(psi));
}

CriticalObservables critical_observables(const Real& theta) {
    if (!(theta > 0 && theta < pi())) throw DomainError("theta must lie in (0, pi)");
    CriticalObservables o;
    o.theta = theta;
    o.x = cos(theta);
    o.s = sin(theta);
    o.b0 = b0_star(theta);
    o.G = G_star(theta);
    o.F = F_star(theta);
    // dF*/dtheta = (G*/(2 b0*)) db0*/dtheta + dF/dtheta at fixed b0
    o.H = F_star_derivative(theta) - o.G / (2 * o.b0) * b0_star_derivative(theta);
    o.b = o.b0 * o.G * o.G;
    o.c = 2 * o.b * o.x;
    const Real hs = o.H / o.s;
    o.gamma_b = ((o.G - 1) / 2 + o.x * hs) / o.b - 1;
    o.gamma_c = -hs / o.b - 2;
    const Real hb = igeom(o.gamma_b);
    const Real plus = igeom(o.gamma_c + o.gamma_b);
    const Real minus = igeom(o.gamma_c - o.gamma_b);
    const Real vc = (plus + minus) / 2;
    const Real vb = (plus - minus) / 2;
    o.dprime_b = hb + vb - o.gamma_b - o.b;
    o.dprime_c = 2 * vc - o.gamma_c - o.c;
    return o;
}

std::pair<Real, Real> critical_residuals(const Real& theta, const Real& g) {
    const auto o = critical_observables(theta);
    const auto [db, dc] = tilde_relations(o.gamma_b, o.gamma_c, g);
    return {db - o.dprime_b, dc - o.dprime_c};
}

std::optional<std::pair<Real, Real>> quadratic_roots(const Real& theta) {
    // With B_± = 1 + Gamma_c ± Gamma_b the two fractions in D~'_c are
    // 1 - 1/(B_+(1-g)) and 1 - 1/(B_-(1+g)); clearing denominators leaves
    // a g^2 + b g + c = 0 with K = Gamma_c + D'_c.
    const auto o = critical_observables(theta);
    const Real K = o.gamma_c + o.dprime_c;
    const Real bp = 1 + o.gamma_c + o.gamma_b;
    const Real bm = 1 + o.gamma_c - o.gamma_b;
    const Real a = -(2 - K) * bp * bm;
    const Real b = bp - bm;
    const Real c = (2 - K) * bp * bm - bm - bp;
    const Real disc = b * b - 4 * a * c;
    if (disc < 0 || a == 0) return std::nullopt;
    const Real sq = sqrt(disc);
    Real r1 = (-b - sq) / (2 * a), r2 = (-b + sq) / (2 * a);
    if (r1 > r2) std::swap(r1, r2);
    return std::make_pair(r1, r2);
}

CriticalPoint solve_critical(const Real& tolerance) {
    if (tolerance < Real("1e-14")) throw DomainError("tolerance must be at least 1e-14");
    const Branch branches[2] = {{false, "lower"}, {true, "upper"}};

    // Sign-change scan of R_b along both real root branches, theta in (1, 2).
    struct Cell {
        Real lo, hi;
        bool upper;
        const char* name;
    };
    std::vector<Cell> cells;
    for (const auto& br : branches) {
        std::optional<Real> prev;
        Real prev_theta;
        for (int i = 0; i <= 100; ++i) {
            const Real theta = 1 + Real(i) / 100;
            const auto r = branch_residual(theta, br.upper);
            if (r && prev && ((*r < 0) != (*prev < 0))) cells.push_back({prev_theta, theta, br.upper, br.name});
            prev = r;
            prev_theta = theta;
        }
    }
    if (cells.empty()) throw NoRootInBracket("R_b has no sign change on either root branch for theta in (1, 2)");
    if (cells.size() > 1) throw AmbiguousRoot("R_b changes sign " + std::to_string(cells.size()) + " times in (1, 2)");
    const Cell cell = cells.front();
    if (cell.lo < Real("1.5") || cell.hi > Real("1.7")) {
        throw NoRootInBracket("the unique root lies outside the seed bracket [1.5, 1.7]");
    }

    // Bisection to the requested width, then guarded secant polishing.
    Real lo = cell.lo, hi = cell.hi;
    Real flo = *branch_residual(lo, cell.upper);
    while (hi - lo > tolerance) {
        const Real mid = (lo + hi) / 2;
        const auto fm = branch_residual(mid, cell.upper);
        if (!fm) throw NoRootInBracket("root branch turned complex inside the bracket");
        if ((*fm < 0) == (flo < 0)) {
            lo = mid;
            flo = *fm;
        } else {
            hi = mid;
        }
    }
    Real a = lo, b = hi;
    Real fa = flo, fb = *branch_residual(hi, cell.upper);
    for (int it = 0; it < 12 && fb != fa && fb != 0; ++it) {
        const Real next = b - fb * (b - a) / (fb - fa);
        if (!(next > cell.lo && next < cell.hi)) break;
        const auto fn = branch_residual(next, cell.upper);
        if (!fn) break;
        a = b;
        fa = fb;
        b = next;
        fb = *fn;
    }
    const Real theta_c = abs(fb) <= abs(flo) ? b : lo;

    CriticalPoint cp;
    cp.theta_c = theta_c;
    cp.g_c = *branch_root(theta_c, cell.upper);
    cp.inv_g_c = 1 / cp.g_c;
    std::tie(cp.residual_b, cp.residual_c) = critical_residuals(cp.theta_c, cp.g_c);
    cp.bracket_lo = cell.lo;
    cp.bracket_hi = cell.hi;
    cp.branch = cell.name;

    // 2-D damped Newton from the middle of the seed bracket.
    Real t = Real("1.6"), g = Real("0.15");
    const Real h("1e-20");
    for (int it = 0; it < 100; ++it) {
        const auto [rb, rc] = critical_residuals(t, g);
        const Real norm = abs(rb) + abs(rc);
        if (norm < Real("1e-40")) break;
        const auto [bt1, ct1] = critical_residuals(t + h, g);
        const auto [bt0, ct0] = critical_residuals(t - h, g);
        const auto [bg1, cg1] = critical_residuals(t, g + h);
        const auto [bg0, cg0] = critical_residuals(t, g - h);
        const Real j11 = (bt1 - bt0) / (2 * h), j12 = (bg1 - bg0) / (2 * h);
        const Real j21 = (ct1 - ct0) / (2 * h), j22 = (cg1 - cg0) / (2 * h);
        const Real det = j11 * j22 - j12 * j21;
        if (det == 0) throw NoRootInBracket("singular Jacobian in the 2-D Newton solve");
        const Real dt = (rb * j22 - rc * j12) / det;
        const Real dg = (j11 * rc - j21 * rb) / det;
        Real step = 1;
        bool moved = false;
        for (int k = 0; k < 60 && !moved; ++k, step /= 2) {
            const Real nt = t - step * dt, ng = g - step * dg;
            if (!(nt > 0 && nt < pi())) continue;
            const auto [nb, nc] = critical_residuals(nt, ng);
            if (abs(nb) + abs(nc) < norm) {
                t = nt;
                g = ng;
                moved = true;
            }
        }
        if (!moved) break;
    }
    cp.newton_theta = t;
    cp.newton_g = g;
    return cp;
}

} // namespace tangles
