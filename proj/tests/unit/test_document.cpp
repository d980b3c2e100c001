#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "origami/belyi.hpp"
#include "origami/document.hpp"
#include "origami/errors.hpp"
#include "support/fixtures.hpp"

using namespace origami;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string parse_error_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

const fs::path kFixtures = ORIGAMI_FIXTURE_DIR;

}  // namespace

TEST_CASE("torus fixture parses and validates") {
    const auto doc = parse_document(slurp(kFixtures / "torus1.json"));
    CHECK(doc.dessin == fixtures::one_square_torus());
    CHECK(is_valid(doc.dessin));
    CHECK_FALSE(doc.metric.has_value());
    CHECK_FALSE(doc.colors.has_value());
}

TEST_CASE("serialize after parse is idempotent on every fixture") {
    std::size_t seen = 0;
    for (const auto& entry : fs::directory_iterator(kFixtures)) {
        if (entry.path().extension() != ".json") continue;
        CAPTURE(entry.path().string());
        const std::string once = serialize_document(parse_document(slurp(entry.path())));
        const std::string twice = serialize_document(parse_document(once));
        CHECK(once == twice);
        ++seen;
    }
    CHECK(seen >= 5);
}

TEST_CASE("canonical text of the torus fixture") {
    CHECK(serialize_document(make_document(fixtures::one_square_torus())) == slurp(kFixtures / "torus1.json"));
}

TEST_CASE("tricolored round trip") {
    const auto doc = parse_document(slurp(kFixtures / "pillow_subdivided.json"));
    REQUIRE(doc.colors.has_value());
    const auto t = tricolored_from(doc);
    CHECK(validate_tricoloring(t).empty());
    const auto again = tricolored_from(parse_document(serialize_document(make_document(t))));
    CHECK(again.base == t.base);
    CHECK(again.edge_color == t.edge_color);
    CHECK(again.face_shade == t.face_shade);
    CHECK(again.vertex_label == t.vertex_label);
    CHECK_THROWS_AS(tricolored_from(parse_document(slurp(kFixtures / "torus1.json"))), ParseError);
}

TEST_CASE("metric block") {
    const auto doc = parse_document(slurp(kFixtures / "torus1_metric.json"));
    REQUIRE(doc.metric.has_value());
    CHECK(doc.metric->lengths == std::vector<double>(4, 1.0));
}

TEST_CASE("strict parsing with located errors") {
    const std::string head = R"({"format_version": "dessin/1", "n_darts": 4, )";
    CHECK(parse_error_of(head + R"("rho0": [1,2,3,7], "rho1": [2,3,0,1]})") ==
          "/rho0/3: entry 7 out of range [0, 4)");
    CHECK(parse_error_of(head + R"("rho0": [1,2,3], "rho1": [2,3,0,1]})") == "/rho0: expected 4 entries, found 3");
    CHECK(parse_error_of(head + R"("rho0": [1,2,3,0], "rho1": [2,3,0,1], "extra": 1})") == "/extra: unknown key");
    CHECK(parse_error_of(head + R"("rho0": [1,2,3,0]})") == "/: missing key 'rho1'");
    CHECK(parse_error_of(head + R"("rho0": [1,2,3,0.5], "rho1": [2,3,0,1]})") == "/rho0/3: expected an integer");
    CHECK(parse_error_of(R"({"format_version": "dessin/2", "n_darts": 1, "rho0": [0], "rho1": [0]})") ==
          "/format_version: expected \"dessin/1\"");
    CHECK(parse_error_of(head + R"("rho0": [1,2,3,0], "rho1": [2,3,0,1], "metric": {"lengths": [1,1,1,1]}})") ==
          "/metric: missing key 'angles'");
    CHECK(parse_error_of(head + R"("rho0": [1,2,3,0], "rho1": [2,3,0,1],
        "colors": {"edge_color": ["blue","red"], "face_shade": ["white"], "vertex_label": ["purple"]}})") ==
          "/colors/vertex_label/0: unknown value 'purple'");
    CHECK(parse_error_of(head + R"("rho0": [1,2,3,0], "rho1": [2,3,0,1],
        "colors": {"edge_color": ["blue"], "face_shade": ["white"], "vertex_label": ["zero"]}})") ==
          "/colors/edge_color: expected 2 entries, found 1");
    const std::string syntax = parse_error_of(R"({"format_version": "dessin/1",, })");
    CHECK(syntax.rfind("syntax error (byte 31)", 0) == 0);
}

TEST_CASE("invalid but well-formed dessins still parse") {
    const auto doc = parse_document(slurp(kFixtures / "not_transitive.json"));
    CHECK_FALSE(is_valid(doc.dessin));
}
