#include "tangles/asymptotics.hpp"
#include "tangles/cache.hpp"
#include "tangles/critical.hpp"
#include "tangles/flype_general.hpp"
#include "tangles/flype_n2.hpp"
#include "tangles/io.hpp"
#include "tangles/oracle.hpp"
#include "tangles/sixvertex.hpp"
#include "tangles/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

using namespace tangles;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitFailure = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    std::optional<int> max_order;
    std::string n_mode = "symbolic";
    long n_value = 1;
    std::string dprime_source = "paper";
    std::string format = "text";
    std::string cache_dir;
    int digits = 12;
    int threads = 0;
    bool unflyped = false;
    // asymptotics
    double exponent = -2;
    bool no_log = false;
    // oracle
    std::string observable = "gamma1";
    std::optional<int> j, k;
    bool renormalized = false;
};

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw ValidationError(std::string(name) + " must be an integer");
    }
}

void validate(RunConfig& c) {
    if (c.cache_dir.empty()) {
        if (const char* v = std::getenv("TANGLES_CACHE_DIR")) c.cache_dir = v;
    }
    if (c.threads == 0) c.threads = env_int("TANGLES_THREADS", 1);
    if (c.threads < 1) throw ValidationError("--threads must be at least 1");
    const auto& s = c.subcommand;
    if (s == "general") {
        const int cap = c.dprime_source == "paper" ? 8 : kOracleDefaultCap;
        if (!c.max_order) c.max_order = cap;
        if (*c.max_order < 1 || *c.max_order > cap) {
            throw ValidationError("general: --max-order must lie in 1.." + std::to_string(cap) + " with --dprime-source " +
                                  c.dprime_source);
        }
    } else if (s == "oriented" || s == "asymptotics") {
        if (!c.max_order) c.max_order = 13;
        const int lo = s == "oriented" ? 2 : 8;
        if (*c.max_order < lo || *c.max_order > 25) {
            throw ValidationError(s + ": --max-order must lie in " + std::to_string(lo) + "..25");
        }
    } else if (s == "oracle") {
        if (!c.max_order) c.max_order = 4;
        if (*c.max_order < 0 || *c.max_order > kOracleHardCap) {
            throw ValidationError("oracle: --max-order must lie in 0.." + std::to_string(kOracleHardCap));
        }
        if (c.j.has_value() != c.k.has_value()) throw ValidationError("oracle: give both --j and --k or neither");
        if (c.j && (*c.j < 0 || *c.k < 0 || *c.j + *c.k > *c.max_order)) {
            throw ValidationError("oracle: need j, k >= 0 and j + k <= --max-order");
        }
        if (c.renormalized && c.observable != "gamma1" && c.observable != "gamma2") {
            throw ValidationError("oracle: --renormalized applies to gamma1 and gamma2 only");
        }
    }
    if (c.digits < 1 || c.digits > 45) throw ValidationError("--digits must lie in 1..45");
}

std::string cache_key(const RunConfig& c) {
    std::ostringstream k;
    k << "tangles-result-v1|" << c.subcommand << "|order=" << c.max_order.value_or(-1) << "|format=" << c.format;
    if (c.subcommand == "general") {
        k << "|n=" << c.n_mode << (c.n_mode == "integer" ? ":" + std::to_string(c.n_value) : "")
          << "|dprime=" << c.dprime_source << "|flyped=" << !c.unflyped;
    } else if (c.subcommand == "critical") {
        k << "|digits=" << c.digits;
    } else if (c.subcommand == "asymptotics") {
        k << "|digits=" << c.digits << "|exponent=" << c.exponent << "|log=" << !c.no_log;
    } else if (c.subcommand == "oracle") {
        k << "|obs=" << c.observable << "|ren=" << c.renormalized;
        if (c.j) k << "|j=" << *c.j << "|k=" << *c.k;
    }
    return k.str();
}

// Solves one order further so that dtheta, which the solve fixes one order
// late, is known through g^order as well.
OrientedCensus oriented_census(int order) {
    const auto bundle = bare_bundle_n2(order + 1);
    auto c = solve_oriented(order + 1, bundle);
    c.max_crossings = order;
    for (auto* s : {&c.q2, &c.dtheta, &c.b, &c.c, &c.g1, &c.g2, &c.gamma_b, &c.gamma_c, &c.gamma_1, &c.gamma_2}) {
        *s = s->truncated(order);
    }
    return c;
}

std::string run_general(const RunConfig& c, Format f) {
    CensusTable table;
    if (c.dprime_source == "paper") {
        table = solve_census(DPrimeModel::published(), *c.max_order, !c.unflyped);
    } else {
        const auto ob = oracle_bundle(*c.max_order, c.threads);
        table = solve_census(dprime_model_from_oracle(ob), *c.max_order, !c.unflyped);
        table.t_series = oracle_t_series(ob);
    }
    return c.n_mode == "integer" ? render_census_at(table, c.n_value, f) : render_census(table, f);
}

std::string run_asymptotics(const RunConfig& c, Format f) {
    const auto census = oriented_census(*c.max_order);
    std::vector<Rational> gamma(census.gamma_b.coeffs().begin() + 1, census.gamma_b.coeffs().end());
    AsymptoticsReport r;
    r.tangles = growth_fit(gamma, Real(c.exponent), !c.no_log);
    r.links = link_count_estimate(gamma);
    std::vector<Rational> f_p;
    for (const auto& l : r.links) f_p.push_back(l.f_p);
    r.links_fit = growth_fit(f_p, Real(c.exponent - 1), !c.no_log, 2);
    return render_asymptotics(r, c.digits, f);
}

std::string run_oracle(const RunConfig& c, Format f) {
    std::vector<OracleCoefficient> out;
    if (c.renormalized) {
        const auto ob = oracle_bundle(*c.max_order, c.threads);
        const auto& s = c.observable == "gamma1" ? ob.gamma1 : ob.gamma2;
        for (int t = 0; t <= *c.max_order; ++t) {
            for (int j = t; j >= 0; --j) {
                if (c.j && (j != *c.j || t - j != *c.k)) continue;
                out.push_back({j, t - j, s.coeff(j, t - j)});
            }
        }
    } else {
        const std::map<std::string, Observable> obs{
            {"G", Observable::G}, {"gamma1", Observable::gamma1}, {"gamma2", Observable::gamma2}, {"F", Observable::F}};
        const Observable o = obs.at(c.observable);
        for (int t = 0; t <= *c.max_order; ++t) {
            for (int j = t; j >= 0; --j) {
                if (c.j && (j != *c.j || t - j != *c.k)) continue;
                out.push_back({j, t - j, enumerate_coefficient(o, j, t - j, kOracleHardCap)});
            }
        }
    }
    return render_oracle(std::string(c.renormalized ? "renormalized " : "bare ") + c.observable, out, f);
}

int run_verify(const RunConfig& c, Format f) {
    AcceptanceOptions opts;
    opts.threads = c.threads;
    const auto results = run_acceptance(opts);
    bool all = true;
    if (f == Format::json) {
        Json a = Json::array();
        for (const auto& r : results) {
            a.push_back(Json{{"criterion", r.id},
                             {"title", r.title},
                             {"pass", r.pass},
                             {"detail", r.detail},
                             {"mismatches", r.mismatches}});
            all &= r.pass;
        }
        std::cout << a.dump(2) << "\n";
    } else if (f == Format::csv) {
        std::cout << "criterion,pass,title\n";
        for (const auto& r : results) {
            std::cout << r.id << "," << (r.pass ? "PASS" : "FAIL") << "," << r.title << "\n";
            all &= r.pass;
        }
    } else {
        for (const auto& r : results) {
            std::cout << format_result(r) << "\n";
            all &= r.pass;
        }
    }
    return all ? 0 : kExitFailure;
}

int run(RunConfig& c) {
    validate(c);
    const Format f = parse_format(c.format);
    if (c.subcommand == "verify") return run_verify(c, f);

    const ResultCache cache(c.cache_dir);
    const std::string key = cache_key(c);
    if (auto hit = cache.get(key)) {
        std::cout << *hit;
        return 0;
    }
    std::string out;
    if (c.subcommand == "general") {
        out = run_general(c, f);
    } else if (c.subcommand == "oriented") {
        out = render_oriented(oriented_census(*c.max_order), f);
    } else if (c.subcommand == "critical") {
        out = render_critical(solve_critical(), c.digits, f);
    } else if (c.subcommand == "asymptotics") {
        out = run_asymptotics(c, f);
    } else if (c.subcommand == "oracle") {
        out = run_oracle(c, f);
    }
    cache.put(key, out);
    std::cout << out;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumeration of colored prime alternating tangles"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--cache-dir", cfg.cache_dir, "Result cache directory (env TANGLES_CACHE_DIR)");
        sub->add_option("--threads", cfg.threads, "Worker threads (env TANGLES_THREADS)");
    };

    auto* general = app.add_subcommand("general", "Flype classes by crossing number, polynomial in n");
    common(general);
    general->add_option("--max-order", cfg.max_order, "Largest crossing number (at most 8, or 5 with the oracle source)");
    general->add_option("--n-mode", cfg.n_mode, "Keep n symbolic or substitute --n")
        ->check(CLI::IsMember({"symbolic", "integer"}));
    general->add_option("--n", cfg.n_value, "Value of n in integer mode");
    general->add_option("--dprime-source", cfg.dprime_source, "2PI data: published series or the diagram oracle")
        ->check(CLI::IsMember({"paper", "oracle"}));
    general->add_flag("--unflyped", cfg.unflyped, "Count diagrams instead of flype classes");

    auto* oriented = app.add_subcommand("oriented", "Oriented (n = 2) census from the six-vertex series");
    common(oriented);
    oriented->add_option("--max-order", cfg.max_order, "Largest crossing number (default 13)");

    auto* critical = app.add_subcommand("critical", "Critical point theta_c, g_c");
    common(critical);
    critical->add_option("--digits", cfg.digits, "Significant digits printed");

    auto* asym = app.add_subcommand("asymptotics", "Growth-rate fit of the oriented census and link estimates");
    common(asym);
    asym->add_option("--max-order", cfg.max_order, "Census order used (default 13)");
    asym->add_option("--digits", cfg.digits, "Significant digits printed");
    asym->add_option("--exponent", cfg.exponent, "Power-law exponent of the tangle counts (default -2)");
    asym->add_flag("--no-log", cfg.no_log, "Drop the logarithmic correction");

    auto* oracle = app.add_subcommand("oracle", "Brute-force planar diagram coefficients");
    common(oracle);
    oracle->add_option("--max-order", cfg.max_order, "Total order in (g_1, g_2), at most 6 (default 4)");
    oracle->add_option("--observable", cfg.observable, "G, gamma1, gamma2 or F")
        ->check(CLI::IsMember({"G", "gamma1", "gamma2", "F"}));
    oracle->add_option("--j", cfg.j, "Single coefficient: power of g_1");
    oracle->add_option("--k", cfg.k, "Single coefficient: power of g_2");
    oracle->add_flag("--renormalized", cfg.renormalized, "Skeleton (G = 1) four-point functions");

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        return run(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const OrderCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
