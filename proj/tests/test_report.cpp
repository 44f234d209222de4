#include "doctest.h"

#include "logbundle/report.hpp"

#include <regex>

using namespace logbundle;

namespace {

const std::string data_dir = LOGBUNDLE_DATA_DIR;

Input load(const std::string& name) { return read_input(data_dir + "/" + name); }

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("input parsing") {
    CHECK(load("b3.json").arrangement->size() == 9);
    CHECK(load("conic_pencil.json").curve.degree() == 6);
    CHECK_FALSE(load("conic_pencil.json").arrangement.has_value());
    CHECK(load("exinout_half.json").arrangement->size() == 11);
    CHECK_THROWS_AS(load("duplicate.json"), InputError);
    CHECK_THROWS_AS(load("missing.json"), InputError);
    CHECK_THROWS_AS(parse_input(Json::parse(R"({"lines": [], "curve": []})")), InputError);
    CHECK_THROWS_AS(parse_input(Json::parse(R"({"lines": [["0","0","0"], ["1","0","0"]]})")), InputError);
    CHECK_THROWS_AS(parse_input(Json::parse(R"({"lines": [["1/0","0","1"]]})")), InputError);
    CHECK_THROWS_AS(parse_input(Json::parse(R"({"curve": [{"coef":"1","exp":[1,0,0]},{"coef":"1","exp":[1,1,0]}]})")),
                    InputError);
    CHECK_THROWS_AS(parse_input(Json::parse(R"({"family": {"id": "ex1"}})")), InputError);
    const Input fam = parse_input(Json::parse(R"({"family": {"id": "ex1", "params": {"t": 2}}})"));
    CHECK(fam.arrangement->contains(LinearForm(1, 2, -3)));
}

TEST_CASE("point display keeps the last coordinate positive") {
    CHECK(to_json(ProjPoint(1, -1, -1)) == Json::array({"-1", "1", "1"}));
    CHECK(to_json(ProjPoint(1, 2, 0)) == Json::array({"1", "2", "0"}));
    CHECK(to_json(ProjPoint(1, -2, 0)) == Json::array({"-1", "2", "0"}));
    CHECK(to_json(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("analysis report of the added-line arrangement") {
    const Json r = analyze(load("exline.json"));
    CHECK(r["class"] == "NearlyFree");
    CHECK(r["exponents"] == Json::array({4, 5}));
    CHECK(r["jumping_point"] == Json::array({"-1", "1", "1"}));
    CHECK(r["generators"] == Json::array({4, 5, 5}));
    CHECK(r["relations"] == Json::array({6}));
    CHECK(r["c1"] == -8);
    CHECK(r["c2"] == 17);
    CHECK(r["tjurina"] == 47);
    CHECK(r["splitting"]["generic"] == Json::array({4, 4}));
    const auto& lines = r["splitting"]["lines"];
    REQUIRE(lines.size() == 9);
    int jumping = 0;
    for (const auto& l : lines) {
        CHECK(l["split"][0].get<int>() + l["split"][1].get<int>() == 8);
        jumping += l["jumping"].get<bool>() ? 1 : 0;
        CHECK(l["jumping"] == l["contains_jumping_point"]);
    }
    CHECK(jumping == 3);
    CHECK(r["audit"]["passed"] == true);
    CHECK_FALSE(r.contains("timing_ms"));
    CHECK(analyze(load("exline.json"), {true, true}).contains("timing_ms"));
}

TEST_CASE("analysis report of B3 and of a curve") {
    const Json b3 = analyze(load("b3.json"));
    CHECK(b3["class"] == "Free");
    CHECK(b3["exponents"] == Json::array({3, 5}));
    CHECK(b3["jumping_point"].is_null());
    CHECK(b3["lattice"]["points"] == 13);
    CHECK(b3["lattice"]["multiplicities"]["3"] == 4);
    CHECK(b3["audit"]["passed"] == true);

    const Json conics = analyze(load("conic_pencil.json"), {false, false});
    CHECK(conics["class"] == "NearlyFree");
    CHECK(conics["jumping_point"] == Json::array({"0", "0", "1"}));
    CHECK(conics["tjurina"].is_null());
    CHECK(conics["lattice"].is_null());
    CHECK(conics["splitting"]["lines_through_point"].size() == 5);
    CHECK(conics["audit"]["passed"] == true);

    CHECK_THROWS_AS(analyze(load("double_line.json")), DegreeBoundExceeded);
}

TEST_CASE("sweep flags rows outside the common class") {
    const Json rows = sweep("exinout", "t", Rational(1, 2), 2, Rational(1, 2));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0]["t"] == "1/2");
    CHECK(rows[0]["jumping_point"] == Json::array({"7", "9", "8"}));
    CHECK(rows[1]["error"].is_string());
    CHECK(rows[1]["flagged"] == true);
    CHECK(rows[2]["exponents"] == Json::array({5, 6}));
    CHECK(rows[2]["flagged"] == false);
    CHECK_THROWS_AS(sweep("ex1", "t", 0, 1, 0), InputError);
}

TEST_CASE("construct emits parseable arrangements") {
    const Json j = construct("c0", {{"a", 3}, {"b", 4}});
    const Input in = parse_input(j);
    CHECK(in.arrangement->size() == 8);
    CHECK(classify(in.curve) == BundleClass{Free{3, 4}});
    const Input conics = parse_input(construct("conic_pencil", {}));
    CHECK(conics.curve == std::get<HomPoly>(named_example("conic_pencil")));
}

TEST_CASE("plots") {
    const std::string exline = plot_svg(load("exline.json"), 5);
    CHECK(count(exline, "<line ") == 8);
    CHECK(count(exline, "class=\"jumping\"") == 3);
    CHECK(exline.find("cx=\"220.00\" cy=\"220.00\"") != std::string::npos);
    CHECK(exline.find("at infinity") != std::string::npos);

    const std::string pencil = plot_svg(load("pencil3.json"), 5);
    CHECK(count(pencil, "<line ") == 3);
    // every segment passes through the centre of the view
    const std::regex seg("x1=\"([0-9.]+)\" y1=\"([0-9.]+)\" x2=\"([0-9.]+)\" y2=\"([0-9.]+)\"");
    for (auto it = std::sregex_iterator(pencil.begin(), pencil.end(), seg); it != std::sregex_iterator(); ++it) {
        const double x1 = std::stod((*it)[1]), y1 = std::stod((*it)[2]);
        const double x2 = std::stod((*it)[3]), y2 = std::stod((*it)[4]);
        CHECK((x1 + x2) / 2 == doctest::Approx(270));
        CHECK((y1 + y2) / 2 == doctest::Approx(270));
    }

    const std::string far = plot_svg(load("far.json"), 5);
    CHECK(count(far, "<line ") == 0);
    CHECK(far.find("no line meets the view box") != std::string::npos);
    CHECK(far.rfind("</svg>\n") == far.size() - 7);

    CHECK_THROWS_WITH_AS(plot_svg(load("conic_pencil.json"), 5), "plot supports arrangements only", Unsupported);
}

TEST_CASE("comparisons") {
    const Json shift = compare(load("exline.json"), load("exline_shift.json"));
    CHECK(shift["lattice_isomorphic"] == true);
    CHECK(shift["same_class"] == true);
    CHECK(shift["class_a"] == "NearlyFree(4,5)");
    CHECK(shift["jumping_point_b"] == Json::array({"-4", "2", "3"}));

    const Json inout = compare(load("exinout_half.json"), load("exinout_two_thirds.json"));
    CHECK(inout["lattice_isomorphic"] == true);
    CHECK(inout["same_class"] == true);
    CHECK(inout["point_in_arrangement_a"] != inout["point_in_arrangement_b"]);
    CHECK(inout["jumping_point_b"] == Json::array({"4", "5", "4"}));

    CHECK(compare(load("triangle.json"), load("pencil3.json"))["lattice_isomorphic"] == false);
    CHECK_THROWS_AS(compare(load("b3.json"), load("conic_pencil.json")), Unsupported);
}
