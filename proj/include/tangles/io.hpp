#pragma once

#include "tangles/asymptotics.hpp"
#include "tangles/critical.hpp"
#include "tangles/flype_general.hpp"
#include "tangles/flype_n2.hpp"
#include "tangles/oracle.hpp"
#include "tangles/trig_elem.hpp"

#include "json.hpp"

#include <string>

namespace tangles {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"k": "num/den", ...} keyed by the exponent of n.
Json npoly_json(const NPoly& p);
NPoly npoly_from_json(const Json& j);

// {"even": [...], "odd": [...]}, coefficients ascending in x.
Json theta_json(const ThetaElem& t);
ThetaElem theta_from_json(const Json& j);

inline Json ring_json(const Rational& r) { return rational_json(r); }
inline Json ring_json(const NPoly& p) { return npoly_json(p); }
inline Json ring_json(const ThetaElem& t) { return theta_json(t); }

template <class R>
R ring_from_json(const Json& j);
template <>
inline Rational ring_from_json<Rational>(const Json& j) { return rational_from_json(j); }
template <>
inline NPoly ring_from_json<NPoly>(const Json& j) { return npoly_from_json(j); }
template <>
inline ThetaElem ring_from_json<ThetaElem>(const Json& j) { return theta_from_json(j); }

template <class R>
Json series_json(const TruncSeries<R>& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(ring_json(s[k]));
    return Json{{"var", var_name(s.var())}, {"order", s.order()}, {"coeffs", coeffs}};
}

template <class R>
TruncSeries<R> series_from_json(const Json& j) {
    try {
        const int order = j.at("order").get<int>();
        const auto& cj = j.at("coeffs");
        if (!cj.is_array() || static_cast<int>(cj.size()) != order + 1) throw ParseError("series coefficient count");
        std::vector<R> coeffs;
        for (const auto& c : cj) coeffs.push_back(ring_from_json<R>(c));
        return TruncSeries<R>(parse_var(j.at("var").get<std::string>()), order, std::move(coeffs));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series: ") + e.what());
    }
}

enum class Format { json, csv, text };
Format parse_format(const std::string& s);

// Table 1 shape.
std::string render_census(const CensusTable& t, Format f);
// n evaluated at an integer: the text/csv cells become integers.
std::string render_census_at(const CensusTable& t, long n, Format f);
Json census_json(const CensusTable& t);

// Table 2 shape; dtheta starts at g^2, the other rows at g^1.
std::string render_oriented(const OrientedCensus& c, Format f);
Json oriented_json(const OrientedCensus& c);

std::string render_critical(const CriticalPoint& cp, int digits, Format f);

struct AsymptoticsReport {
    GrowthEstimate tangles;
    std::vector<LinkEstimate> links;
    GrowthEstimate links_fit;
};
std::string render_asymptotics(const AsymptoticsReport& r, int digits, Format f);

struct OracleCoefficient {
    int j;
    int k;
    NPoly value;
};
std::string render_oracle(const std::string& observable, const std::vector<OracleCoefficient>& coeffs, Format f);

std::string decimal(const Real& x, int digits);

} // namespace tangles
