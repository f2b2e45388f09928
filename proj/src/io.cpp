#include "tangles/io.hpp"

#include <iomanip>
#include <sstream>

namespace tangles {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"num/den\" string");
    return parse_rational(j.get<std::string>());
}

Json npoly_json(const NPoly& p) {
    Json out = Json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_string(c);
    return out;
}

NPoly npoly_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("npoly must be an object");
    NPoly p;
    for (const auto& [key, value] : j.items()) {
        int e = 0;
        try {
            size_t used = 0;
            e = std::stoi(key, &used);
            if (used != key.size() || e < 0) throw ParseError("bad exponent");
        } catch (const std::exception&) {
            throw ParseError("npoly exponent must be a nonnegative integer: " + key);
        }
        p = p + NPoly::monomial(e, rational_from_json(value));
    }
    return p;
}

namespace {

Json dense(const XPoly& p) {
    Json out = Json::array();
    if (p.is_zero()) return out;
    for (int e = 0; e <= p.degree(); ++e) out.push_back(to_string(p.coeff(e)));
    return out;
}

XPoly from_dense(const Json& j) {
    if (!j.is_array()) throw ParseError("theta component must be an array");
    XPoly p;
    for (size_t e = 0; e < j.size(); ++e) p = p + XPoly::monomial(static_cast<int>(e), rational_from_json(j[e]));
    return p;
}

std::string plain(const Rational& r) { return r.get_str(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string pad(const std::string& s, size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

} // namespace

Json theta_json(const ThetaElem& t) { return Json{{"even", dense(t.even())}, {"odd", dense(t.odd())}}; }

ThetaElem theta_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("even") || !j.contains("odd")) throw ParseError("theta element needs even and odd");
    return ThetaElem(from_dense(j["even"]), from_dense(j["odd"]));
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw ParseError("unknown format: " + s);
}

std::string decimal(const Real& x, int digits) { return x.str(digits); }

Json census_json(const CensusTable& t) {
    Json type1 = Json::array(), type2 = Json::array();
    for (int p = 1; p <= t.max_crossings; ++p) {
        type1.push_back(Json{{"p", p}, {"npoly", npoly_json(t.type1[p])}});
        type2.push_back(Json{{"p", p}, {"npoly", npoly_json(t.type2[p])}});
    }
    Json ts = Json::array();
    for (int k = 0; k <= t.t_series.order(); ++k) ts.push_back(npoly_json(t.t_series[k]));
    return Json{{"max_crossings", t.max_crossings}, {"type1", type1}, {"type2", type2}, {"t_series", ts}};
}

std::string render_census(const CensusTable& t, Format f) {
    std::ostringstream out;
    switch (f) {
    case Format::json:
        out << census_json(t).dump(2) << "\n";
        break;
    case Format::csv:
        out << "p,type,k,count\n";
        for (int p = 1; p <= t.max_crossings; ++p) {
            for (int type = 1; type <= 2; ++type) {
                const NPoly& e = type == 1 ? t.type1[p] : t.type2[p];
                if (e.is_zero()) out << p << "," << type << ",0,0\n";
                for (const auto& [k, c] : e.terms()) out << p << "," << type << "," << k << "," << plain(c) << "\n";
            }
        }
        break;
    case Format::text: {
        size_t w = 8;
        for (int p = 1; p <= t.max_crossings; ++p) w = std::max({w, t.type1[p].str().size(), t.type2[p].str().size()});
        out << pad("p", 3) << "  " << pad("type 1", w) << "  " << pad("type 2", w) << "\n";
        for (int p = 1; p <= t.max_crossings; ++p) {
            out << pad(std::to_string(p), 3) << "  " << pad(t.type1[p].str(), w) << "  " << pad(t.type2[p].str(), w)
                << "\n";
        }
        if (t.t_series.order() >= 0) {
            out << "t(g) = 1";
            for (int k = 1; k <= t.t_series.order(); ++k) {
                if (!t.t_series[k].is_zero()) out << " + (" << t.t_series[k].str() << ") g^" << k;
            }
            out << " + O(g^" << t.t_series.order() + 1 << ")\n";
        }
        break;
    }
    }
    return out.str();
}

std::string render_census_at(const CensusTable& t, long n, Format f) {
    CensusTable v = t;
    for (int p = 1; p <= t.max_crossings; ++p) {
        v.type1[p] = NPoly(t.type1[p].eval(Rational(n)));
        v.type2[p] = NPoly(t.type2[p].eval(Rational(n)));
    }
    if (t.t_series.order() >= 0) {
        v.t_series = map_coeffs(t.t_series, [n](const NPoly& p) { return NPoly(p.eval(Rational(n))); });
    }
    return render_census(v, f);
}

namespace {

struct Row {
    const char* name;
    const TruncSeries<Rational>* s;
};

std::vector<Row> oriented_rows(const OrientedCensus& c) {
    return {{"q2", &c.q2},         {"dtheta", &c.dtheta},   {"b", &c.b},
            {"c", &c.c},           {"g1", &c.g1},           {"g2", &c.g2},
            {"gamma_b", &c.gamma_b}, {"gamma_c", &c.gamma_c}, {"gamma_1", &c.gamma_1},
            {"gamma_2", &c.gamma_2}};
}

// Blank past the series' truncation order.
std::string cell(const TruncSeries<Rational>& s, int p) { return p <= s.order() ? plain(s[p]) : ""; }

} // namespace

Json oriented_json(const OrientedCensus& c) {
    Json rows = Json::object();
    for (const auto& r : oriented_rows(c)) {
        Json a = Json::array();
        for (int p = 1; p <= std::min(c.max_crossings, r.s->order()); ++p) a.push_back(rational_json((*r.s)[p]));
        rows[r.name] = a;
    }
    return Json{{"order", c.max_crossings}, {"rows", rows}};
}

std::string render_oriented(const OrientedCensus& c, Format f) {
    std::ostringstream out;
    const auto rows = oriented_rows(c);
    switch (f) {
    case Format::json:
        out << oriented_json(c).dump(2) << "\n";
        break;
    case Format::csv:
        out << "row";
        for (int p = 1; p <= c.max_crossings; ++p) out << ",g" << p;
        out << "\n";
        for (const auto& r : rows) {
            out << r.name;
            for (int p = 1; p <= c.max_crossings; ++p) out << "," << cell(*r.s, p);
            out << "\n";
        }
        break;
    case Format::text: {
        // Transposed: one line per order.
        std::vector<size_t> w;
        for (const auto& r : rows) {
            size_t m = std::string(r.name).size();
            for (int p = 1; p <= c.max_crossings; ++p) m = std::max(m, cell(*r.s, p).size());
            w.push_back(m);
        }
        out << pad("p", 3);
        for (size_t i = 0; i < rows.size(); ++i) out << "  " << pad(rows[i].name, w[i]);
        out << "\n";
        for (int p = 1; p <= c.max_crossings; ++p) {
            out << pad(std::to_string(p), 3);
            for (size_t i = 0; i < rows.size(); ++i) out << "  " << pad(cell(*rows[i].s, p), w[i]);
            out << "\n";
        }
        break;
    }
    }
    return out.str();
}

std::string render_critical(const CriticalPoint& cp, int digits, Format f) {
    const std::string rb = decimal(cp.residual_b, 6), rc = decimal(cp.residual_c, 6);
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        Json j{{"theta_c", decimal(cp.theta_c, digits)},
               {"g_c", decimal(cp.g_c, digits)},
               {"inv_g_c", decimal(cp.inv_g_c, digits)},
               {"residuals", Json::array({rb, rc})},
               {"branch", cp.branch},
               {"bracket", Json::array({decimal(cp.bracket_lo, 4), decimal(cp.bracket_hi, 4)})},
               {"newton", Json{{"theta_c", decimal(cp.newton_theta, digits)}, {"g_c", decimal(cp.newton_g, digits)}}}};
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "theta_c,g_c,inv_g_c,residual_b,residual_c\n";
        out << decimal(cp.theta_c, digits) << "," << decimal(cp.g_c, digits) << "," << decimal(cp.inv_g_c, digits)
            << "," << rb << "," << rc << "\n";
        break;
    case Format::text:
        out << "theta_c   " << decimal(cp.theta_c, digits) << "\n";
        out << "g_c       " << decimal(cp.g_c, digits) << "\n";
        out << "1/g_c     " << decimal(cp.inv_g_c, digits) << "\n";
        out << "residuals " << rb << " " << rc << "\n";
        out << "branch    " << cp.branch << " root, bracket [" << decimal(cp.bracket_lo, 4) << ", "
            << decimal(cp.bracket_hi, 4) << "]\n";
        break;
    }
    return out.str();
}

namespace {

Json growth_json(const GrowthEstimate& e, int digits) {
    auto arr = [digits](const std::vector<Real>& v) {
        Json a = Json::array();
        for (const auto& x : v) a.push_back(decimal(x, digits));
        return a;
    };
    return Json{{"rate", decimal(e.rate, digits)},
                {"error_bar", decimal(e.error_bar, 4)},
                {"exponent", decimal(e.exponent, 6)},
                {"log_correction", e.log_correction},
                {"ratios", arr(e.ratios)},
                {"extrapolants", arr(e.extrapolants)}};
}

} // namespace

std::string render_asymptotics(const AsymptoticsReport& r, int digits, Format f) {
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        Json refs = Json::array();
        for (const auto& c : r.tangles.references) {
            refs.push_back(Json{{"label", c.label}, {"closed_form", c.closed_form}, {"value", decimal(c.value, digits)}});
        }
        Json links = Json::array();
        for (const auto& l : r.links) links.push_back(Json{{"p", l.p}, {"f_p", rational_json(l.f_p)}});
        Json j{{"tangles", growth_json(r.tangles, digits)},
               {"references", refs},
               {"links", Json{{"heuristic", true}, {"estimates", links}, {"fit", growth_json(r.links_fit, digits)}}}};
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "series,rate,error_bar,exponent,log_correction\n";
        out << "tangles," << decimal(r.tangles.rate, digits) << "," << decimal(r.tangles.error_bar, 4) << ","
            << decimal(r.tangles.exponent, 6) << "," << (r.tangles.log_correction ? 1 : 0) << "\n";
        out << "links (heuristic)," << decimal(r.links_fit.rate, digits) << "," << decimal(r.links_fit.error_bar, 4)
            << "," << decimal(r.links_fit.exponent, 6) << "," << (r.links_fit.log_correction ? 1 : 0) << "\n";
        break;
    case Format::text:
        out << "tangles: 1/g = " << decimal(r.tangles.rate, digits) << " +- " << decimal(r.tangles.error_bar, 3)
            << " (exponent " << decimal(r.tangles.exponent, 4) << (r.tangles.log_correction ? ", log correction" : "")
            << ")\n";
        out << "links (heuristic f_p ~ gamma_{p-1}/p): 1/g = " << decimal(r.links_fit.rate, digits) << " +- "
            << decimal(r.links_fit.error_bar, 3) << "\n";
        for (const auto& l : r.links) out << "  f_" << l.p << " ~ " << decimal(to_real(l.f_p), 8) << "\n";
        out << "reference constants:\n";
        for (const auto& c : r.tangles.references) {
            out << "  " << c.label << ": " << decimal(c.value, digits) << "  [" << c.closed_form << "]\n";
        }
        break;
    }
    return out.str();
}

std::string render_oracle(const std::string& observable, const std::vector<OracleCoefficient>& coeffs, Format f) {
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        Json a = Json::array();
        for (const auto& c : coeffs) a.push_back(Json{{"j", c.j}, {"k", c.k}, {"npoly", npoly_json(c.value)}});
        out << Json{{"observable", observable}, {"coefficients", a}}.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "j,k,n_power,coefficient\n";
        for (const auto& c : coeffs) {
            if (c.value.is_zero()) out << c.j << "," << c.k << ",0,0\n";
            for (const auto& [e, v] : c.value.terms()) out << c.j << "," << c.k << "," << e << "," << csv_field(plain(v)) << "\n";
        }
        break;
    case Format::text:
        out << observable << "\n";
        for (const auto& c : coeffs) out << "  g1^" << c.j << " g2^" << c.k << ": " << c.value.str() << "\n";
        break;
    }
    return out.str();
}

} // namespace tangles
