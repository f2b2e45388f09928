#include "tangles/verify.hpp"

#include "tangles/asymptotics.hpp"
#include "tangles/critical.hpp"
#include "tangles/flype_general.hpp"
#include "tangles/flype_n2.hpp"
#include "tangles/oracle.hpp"
#include "tangles/published.hpp"
#include "tangles/sixvertex.hpp"

#include <boost/math/constants/constants.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace tangles {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

// Shared intermediate results, built on first use.
struct Context {
    AcceptanceOptions opts;
    std::optional<CensusTable> census;
    std::optional<BareSeriesBundle> bundle;
    std::optional<OrientedCensus> oriented;
    double oriented_seconds = 0;

    const OrientedCensus& oriented_census() {
        if (!oriented) {
            const auto t0 = Clock::now();
            bundle = bare_bundle_n2(13);
            oriented = solve_oriented(13, *bundle);
            oriented_seconds = since(t0);
        }
        return *oriented;
    }
};

const TruncSeries<Rational>& oriented_row(const OrientedCensus& c, const std::string& name) {
    static const std::map<std::string, TruncSeries<Rational> OrientedCensus::*> rows{
        {"q2", &OrientedCensus::q2},         {"dtheta", &OrientedCensus::dtheta},
        {"b", &OrientedCensus::b},           {"c", &OrientedCensus::c},
        {"g1", &OrientedCensus::g1},         {"g2", &OrientedCensus::g2},
        {"gamma_b", &OrientedCensus::gamma_b}, {"gamma_c", &OrientedCensus::gamma_c},
        {"gamma_1", &OrientedCensus::gamma_1}, {"gamma_2", &OrientedCensus::gamma_2}};
    return c.*rows.at(name);
}

void table1(Context& ctx, CriterionResult& r) {
    const auto t0 = Clock::now();
    ctx.census = solve_census(DPrimeModel::published(), 8);
    r.seconds = since(t0);
    const auto t1 = published_census_type1(), t2 = published_census_type2();
    int cells = 0;
    for (int p = 1; p <= 8; ++p) {
        for (int type = 1; type <= 2; ++type) {
            const NPoly& want = type == 1 ? t1[p] : t2[p];
            const NPoly& got = type == 1 ? ctx.census->type1[p] : ctx.census->type2[p];
            ++cells;
            if (got != want) {
                r.mismatches.push_back("type" + std::to_string(type) + "@g" + std::to_string(p));
            }
        }
    }
    const bool fast = r.seconds < 60;
    r.pass = r.mismatches.empty() && fast;
    r.detail = std::to_string(cells - static_cast<int>(r.mismatches.size())) + "/" + std::to_string(cells) +
               " cells match" + (fast ? "" : ", over the 60 s budget");
}

void table2(Context& ctx, CriterionResult& r) {
    const auto& c = ctx.oriented_census();
    r.seconds = ctx.oriented_seconds;
    int cells = 0;
    for (const auto& row : published_oriented_rows()) {
        const auto& s = oriented_row(c, row.name);
        for (size_t i = 0; i < row.values.size(); ++i) {
            const int p = row.first + static_cast<int>(i);
            ++cells;
            if (s[p] != row.values[i]) {
                r.mismatches.push_back(row.name + "@g" + std::to_string(p));
                r.detail += (r.detail.empty() ? "" : "; ") + row.name + " g^" + std::to_string(p) + " printed " +
                            row.values[i].get_str() + ", computed " + s[p].get_str();
            }
        }
    }
    const bool fast = r.seconds < 1800;
    r.pass = r.mismatches.empty() && fast;
    r.detail = std::to_string(cells - static_cast<int>(r.mismatches.size())) + "/" + std::to_string(cells) +
               " cells match" + (r.detail.empty() ? "" : "; " + r.detail) + (fast ? "" : ", over the 30 min budget");
}

void cross_pipeline(Context& ctx, CriterionResult& r) {
    const auto t0 = Clock::now();
    const auto& c = ctx.oriented_census();
    if (!ctx.census) ctx.census = solve_census(DPrimeModel::published(), 8);
    const auto t1 = published_census_type1(), t2 = published_census_type2();
    const Rational two(2);
    for (int p = 1; p <= 8; ++p) {
        const Rational want1 = t1[p].eval(two), want2 = t2[p].eval(two);
        if (c.gamma_1[p] != want1 || ctx.census->type1[p].eval(two) != want1) {
            r.mismatches.push_back("gamma_1@g" + std::to_string(p));
        }
        if (c.gamma_2[p] != want2 || ctx.census->type2[p].eval(two) != want2) {
            r.mismatches.push_back("gamma_2@g" + std::to_string(p));
        }
    }
    r.seconds = since(t0);
    r.pass = r.mismatches.empty();
    r.detail = "g^7: gamma_1 = " + c.gamma_1[7].get_str() + ", gamma_2 = " + c.gamma_2[7].get_str() + "; " +
               std::to_string(16 - static_cast<int>(r.mismatches.size())) + "/16 match";
}

void critical_constants(Context&, CriterionResult& r) {
    const auto t0 = Clock::now();
    const auto cp = solve_critical();
    r.seconds = since(t0);
    const std::string th = cp.theta_c.str(20), inv = cp.inv_g_c.str(20);
    const bool theta_ok = th.rfind("1.60780446", 0) == 0;
    const bool inv_ok = inv.rfind("6.28329764", 0) == 0;
    const bool resid_ok = abs(cp.residual_b) < Real("1e-12") && abs(cp.residual_c) < Real("1e-12");
    const bool agree = abs(cp.newton_theta - cp.theta_c) < Real("1e-10") && abs(cp.newton_g - cp.g_c) < Real("1e-10");
    const bool fast = r.seconds < 10;
    if (!theta_ok) r.mismatches.push_back("theta_c");
    if (!inv_ok) r.mismatches.push_back("inv_g_c");
    r.pass = theta_ok && inv_ok && resid_ok && agree && fast;
    r.detail = "theta_c = " + cp.theta_c.str(12) + ", 1/g_c = " + cp.inv_g_c.str(12) + ", residuals " +
               cp.residual_b.str(3) + ", " + cp.residual_c.str(3) + (agree ? ", Newton agrees" : ", Newton disagrees");
}

void bare_anchors(Context& ctx, CriterionResult& r) {
    ctx.oriented_census();
    const auto t0 = Clock::now();
    const auto& b = *ctx.bundle;
    const std::map<std::string, const TruncSeries<ThetaElem>*> series{
        {"b0", &b.b0},           {"G", &b.G},
        {"gamma_b", &b.gamma_b}, {"gamma_c", &b.gamma_c},
        {"dprime_b", &b.dprime_b}, {"dprime_c", &b.dprime_c}};
    int cells = 0;
    for (const auto& a : published_bare_anchors()) {
        ++cells;
        const ThetaElem& got = (*series.at(a.series))[a.power];
        if (got != a.value) {
            r.mismatches.push_back(a.series + "@tau" + std::to_string(a.power));
            r.detail += "; " + a.series + " tau^" + std::to_string(a.power) + " printed " + a.value.str() +
                        ", computed " + got.str();
        }
    }
    r.seconds = since(t0);
    r.pass = r.mismatches.empty();
    r.detail = std::to_string(cells - static_cast<int>(r.mismatches.size())) + "/" + std::to_string(cells) +
               " coefficients match" + r.detail;
}

void oracle_identities(Context& ctx, CriterionResult& r) {
    const auto t0 = Clock::now();
    const auto b = oracle_bundle(ctx.opts.oracle_order, ctx.opts.threads);
    const NPoly n = NPoly::monomial(1);
    const NPoly one(1L);
    std::vector<std::pair<std::string, bool>> checks;
    const auto gp = b.gamma2 + b.gamma1, gm = b.gamma2 - b.gamma1;
    const auto hp = b.H2 + b.H1, hm = b.H2 - b.H1;
    checks.emplace_back("Gamma_+ = H_+/(1-H_+)", series_geom(hp) == gp);
    checks.emplace_back("Gamma_- = H_-/(1-H_-)", series_geom(hm) == gm);
    const auto g0 = b.gamma2 * (n + one) + b.gamma1;
    const auto h0 = b.H2 + b.V2 * n + b.H1;
    checks.emplace_back("Gamma_0 = H_0/(1-H_0)", series_geom(h0) == g0);
    checks.emplace_back("D_1 = H_1+V_1-Gamma_1", b.D1 == b.H1 + b.V1 - b.gamma1);
    checks.emplace_back("D_2 = H_2+V_2-Gamma_2", b.D2 == b.H2 + b.V2 - b.gamma2);
    checks.emplace_back("H_1 = V_1", b.H1 == b.V1);
    bool divisible = true;
    for (const auto& [key, c] : (series_igeom(g0) - series_igeom(gp)).terms()) divisible &= c.coeff(0) == 0;
    checks.emplace_back("n | H_0 - H_+", divisible);

    const auto [p1, p2] = dprime_in_gammas(b);
    const auto pub = DPrimeModel::published();
    auto leading = [](const DPrimeModel::Poly2& p, int weight, std::pair<int, int> key, const NPoly& want) {
        for (const auto& [k, c] : p) {
            const int w = k.first + 2 * k.second;
            if (w < weight) return false;
            if (w == weight && (k != key || c != want)) return false;
        }
        auto it = p.find(key);
        return it != p.end() && it->second == want;
    };
    checks.emplace_back("D'_1 = n Gamma_1^5 + ...", leading(p1, 5, {5, 0}, n));
    checks.emplace_back("D'_2 = n Gamma_1^4 Gamma_2 + ...", leading(p2, 6, {4, 1}, n));
    // Where the published data and the oracle overlap they must agree.
    auto overlap = [&](const DPrimeModel::Poly2& got, const DPrimeModel::Poly2& want) {
        for (int a = 0; a <= b.order; ++a) {
            for (int k = 0; a + k <= b.order; ++k) {
                if (a + 2 * k > pub.validity) continue;
                auto gi = got.find({a, k});
                auto wi = want.find({a, k});
                const NPoly gv = gi == got.end() ? NPoly() : gi->second;
                const NPoly wv = wi == want.end() ? NPoly() : wi->second;
                if (gv != wv) return false;
            }
        }
        return true;
    };
    checks.emplace_back("D'_1 overlap with published data", overlap(p1, pub.d1));
    checks.emplace_back("D'_2 overlap with published data", overlap(p2, pub.d2));

    r.seconds = since(t0);
    int ok = 0;
    for (const auto& [name, pass] : checks) {
        if (pass) {
            ++ok;
        } else {
            r.mismatches.push_back(name);
        }
    }
    const bool fast = r.seconds < 600;
    r.pass = ok == static_cast<int>(checks.size()) && fast;
    r.detail = std::to_string(ok) + "/" + std::to_string(checks.size()) + " identities hold through order " +
               std::to_string(b.order) + (fast ? "" : ", over the 10 min budget");
}

void singularity(Context& ctx, CriterionResult& r) {
    const auto t0 = Clock::now();
    const int N = ctx.opts.b0_coefficients;
    const auto G = two_point_in_b0(N);
    const Real pi = boost::math::constants::pi<Real>();
    const std::pair<const char*, Real> points[] = {{"pi/3", pi / 3}, {"pi/2", pi / 2}, {"2pi/3", 2 * pi / 3}};
    bool all = N >= 13;
    std::ostringstream d;
    d << N << " coefficients;";
    for (const auto& [name, theta] : points) {
        std::vector<Real> a;
        for (int k = 1; k <= N; ++k) a.push_back(theta_eval(G[k], theta));
        const auto est = singularity_estimate(a);
        const Real rel = abs(est.radius / b0_star(theta) - 1);
        const bool ok = rel < Real("0.05");
        if (!ok) r.mismatches.push_back(name);
        all &= ok;
        d << " " << name << ": " << est.radius.str(6) << " vs " << b0_star(theta).str(6) << " ("
          << fixed(static_cast<double>(rel) * 100, 2) << "%" << (est.negative_dominant ? ", Euler-transformed" : "")
          << ")";
    }
    r.seconds = since(t0);
    r.pass = all;
    r.detail = d.str();
}

void asymptotics(Context&, CriterionResult& r) {
    const auto t0 = Clock::now();
    std::vector<Rational> gamma;
    for (const auto& row : published_oriented_rows()) {
        if (row.name == "gamma_b") gamma = row.values;
    }
    const auto est = growth_fit(gamma, Real(-2), true);
    const Real target("6.28329764");
    const Real rel = abs(est.rate / target - 1);
    const bool ok = rel < Real("0.05");
    if (!ok) r.mismatches.push_back("growth_rate");
    // Printed reference values; all three have one digit before the point,
    // so five decimals are six significant digits.
    const std::pair<const char*, const char*> printed[] = {
        {"oriented, unflyped", "6.91167"}, {"n = 1, flyped", "6.14793"}, {"n = 1, unflyped", "6.75000"}};
    bool refs_ok = true;
    for (const auto& [label, value] : printed) {
        for (const auto& c : est.references) {
            if (c.label == label && fixed(static_cast<double>(c.value), 5) != value) {
                r.mismatches.push_back(label);
                refs_ok = false;
            }
        }
    }
    r.seconds = since(t0);
    r.pass = ok && refs_ok;
    r.detail = "1/g = " + est.rate.str(6) + " +- " + est.error_bar.str(2) + " (" +
               fixed(static_cast<double>(rel) * 100, 2) + "% from 6.28329764); reference constants " +
               (refs_ok ? "reproduced" : "mismatched");
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    Context ctx{opts, {}, {}, {}, 0};
    const std::vector<std::pair<const char*, std::function<void(Context&, CriterionResult&)>>> criteria{
        {"Table 1 exact match", table1},
        {"Table 2 exact match", table2},
        {"oriented vs general census at n = 2", cross_pipeline},
        {"critical constants", critical_constants},
        {"bare-series anchors", bare_anchors},
        {"oracle identities", oracle_identities},
        {"singularity of G in b0 vs b0*", singularity},
        {"growth rate and reference constants", asymptotics},
    };
    std::vector<CriterionResult> out;
    for (size_t i = 0; i < criteria.size(); ++i) {
        CriterionResult r;
        r.id = static_cast<int>(i) + 1;
        r.title = criteria[i].first;
        try {
            criteria[i].second(ctx, r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    return "criterion " + std::to_string(r.id) + ": " + (r.pass ? "PASS" : "FAIL") + "  " + r.title + "  [" +
           r.detail + "] (" + fixed(r.seconds, 2) + " s)";
}

} // namespace tangles
