#include "tangles/cache.hpp"
#include "tangles/errors.hpp"
#include "tangles/io.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tangles;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("tangles-test-" + std::to_string(fnv1a64(std::to_string(rand()))));
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

CensusTable small_census() {
    CensusTable t;
    t.max_crossings = 2;
    t.type1 = {NPoly(), NPoly(1L), NPoly()};
    t.type2 = {NPoly(), NPoly(), NPoly(1L) + NPoly::monomial(1, 2)};
    return t;
}

} // namespace

TEST_CASE("FNV-1a 64-bit reference vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("result cache: miss, hit, corruption") {
    TempDir dir;
    const ResultCache cache(dir.path);
    REQUIRE(cache.enabled());
    CHECK_FALSE(cache.get("census 8").has_value());
    cache.put("census 8", "payload\nwith lines\n");
    const auto hit = cache.get("census 8");
    REQUIRE(hit.has_value());
    CHECK(*hit == "payload\nwith lines\n");
    CHECK_FALSE(cache.get("census 7").has_value());
    CHECK(cache.path_for("census 8") != cache.path_for("census 7"));

    {
        std::ifstream in(cache.path_for("census 8"));
        std::stringstream ss;
        ss << in.rdbuf();
        auto text = ss.str();
        text.back() = 'X';
        std::ofstream out(cache.path_for("census 8"), std::ios::trunc);
        out << text;
    }
    CHECK_FALSE(cache.get("census 8").has_value());

    const ResultCache off{fs::path()};
    CHECK_FALSE(off.enabled());
    off.put("k", "v");
    CHECK_FALSE(off.get("k").has_value());
}

TEST_CASE("census renderings") {
    const auto t = small_census();
    const auto j = census_json(t);
    CHECK(j.at("max_crossings") == 2);
    REQUIRE(j.at("type1").is_array());
    CHECK(j.at("type1").size() == 2);
    CHECK(j.at("type2")[1].at("p") == 2);
    CHECK(j.at("type2")[1].at("npoly").at("1") == "2/1");
    CHECK(first_line(render_census(t, Format::csv)) == "p,type,k,count");
    const auto at2 = render_census_at(t, 2, Format::text);
    CHECK(at2.find("5") != std::string::npos);
}

TEST_CASE("oriented renderings") {
    OrientedCensus c;
    c.max_crossings = 2;
    for (auto* s : {&c.q2, &c.dtheta, &c.b, &c.c, &c.g1, &c.g2, &c.gamma_b, &c.gamma_c, &c.gamma_1, &c.gamma_2}) {
        *s = TruncSeries<Rational>::variable(Var::g, 2);
    }
    c.dtheta = TruncSeries<Rational>(Var::g, 1);
    const auto j = oriented_json(c);
    CHECK(j.at("order") == 2);
    CHECK(j.at("rows").at("q2").size() == 2);
    CHECK(j.at("rows").at("q2")[0] == "1/1");
    CHECK(j.at("rows").at("dtheta").size() == 1);
    CHECK(first_line(render_oriented(c, Format::csv)) == "row,g1,g2");
}

TEST_CASE("oracle renderings") {
    const std::vector<OracleCoefficient> coeffs{{2, 0, NPoly(8L)}, {1, 1, NPoly::monomial(1, 3)}};
    const auto j = Json::parse(render_oracle("gamma1", coeffs, Format::json));
    CHECK(j.at("observable") == "gamma1");
    CHECK(j.at("coefficients").size() == 2);
    CHECK(j.at("coefficients")[1].at("npoly").at("1") == "3/1");
    CHECK(first_line(render_oracle("gamma1", coeffs, Format::csv)) == "j,k,n_power,coefficient");
}

TEST_CASE("format parsing") {
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("text") == Format::text);
    CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("decimal") {
    CHECK(decimal(Real("6.28329764483"), 9) == "6.28329764");
    CHECK(decimal(Real(1) / 3, 4) == "0.3333");
}
