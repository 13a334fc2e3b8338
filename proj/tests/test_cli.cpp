#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "ovalsets/serialize.hpp"

using ovalsets::Json;
using ovalsets::kPi;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ovalsets::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string curve(const std::string& name) { return OVALSETS_SOURCE_DIR "/data/curves/" + name; }

std::string temp_spec(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / ("ovalsets_cli_" + name);
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("info") {
    const Result r = run({"info", curve("constant_width_3.json")});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["command"] == "info");
    CHECK(j["input"]["a0"] == 10.0);
    CHECK(j["report"]["length"].get<double>() == doctest::Approx(20 * kPi));
    CHECK(j["report"]["constant_width"] == true);

    const Json c = Json::parse(run({"info", curve("circle.json")}).out);
    CHECK(c["report"]["length"].get<double>() == doctest::Approx(10 * kPi));
    CHECK(c["report"]["area"].get<double>() == doctest::Approx(25 * kPi));

    const Json e = Json::parse(run({"info", curve("ellipse_2_1.json")}).out);
    CHECK(e["report"]["length"].get<double>() == doctest::Approx(9.688448220547675));
}

TEST_CASE("exit codes") {
    const Result bad = run({"info", curve("not_an_oval.json")});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("rho_min = -2") != std::string::npos);
    CHECK(run({"info", temp_spec("garbage.json", "{not json")}).code == 2);
    CHECK(run({"info", temp_spec("badkind.json", R"({"kind":"blob"})")}).code == 2);
    CHECK(run({"info", "/nonexistent/curve.json"}).code == 6);
    CHECK(run({}).code == 4);
    CHECK(run({"frobnicate"}).code == 4);
    CHECK(run({"derive", curve("oval_cwms12.json"), "--set", "equidistant"}).code == 4);
    CHECK(run({"derive", curve("oval_cwms12.json"), "--set", "cwms", "--lambda", "0.3"}).code == 4);
    CHECK(run({"derive", curve("oval_cwms12.json"), "--set", "evolute"}).code == 4);
    CHECK(run({"derive", curve("ellipse_2_1.json"), "--set", "sms"}).code == 4);
    CHECK(run({"fuzz", "--count", "0"}).code == 4);
    CHECK(run({"fuzz", "--degree", "17"}).code == 4);
    CHECK(run({"render", curve("circle.json"), "--samples", "8"}).code == 4);
    CHECK(run({"render", curve("circle.json"), "-o", "/nonexistent/dir/out.svg"}).code == 6);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("derive") {
    const Json f4 = Json::parse(run({"derive", curve("oval_cwms12.json"), "--set", "cwms"}).out);
    CHECK(f4["report"]["cusp_count"] == 12);
    const Json f9 = Json::parse(run({"derive", curve("oval_sms10.json"), "--set", "sms"}).out);
    CHECK(f9["report"]["cusp_count"] == 10);
    const Result pt = run({"derive", curve("constant_width_3.json"), "--set", "cwms"});
    CHECK(pt.code == 0);
    CHECK(Json::parse(pt.out)["report"]["degenerate"] == "point");
    const Json eq = Json::parse(run({"derive", curve("mixed_harmonics.json"), "--set", "equidistant", "--lambda", "0.25"}).out);
    CHECK(eq["report"]["kind"]["lambda"] == 0.25);
    CHECK(eq["input"]["options"]["lambda"] == 0.25);
}

TEST_CASE("verify") {
    const Result r10 = run({"verify", curve("mixed_harmonics.json"), "--stability"});
    CHECK(r10.code == 0);
    const Json j = Json::parse(r10.out);
    CHECK(j["report"]["passed"] == true);
    CHECK(j["report"]["stability"]["all_hold"] == true);

    const Json j9 = Json::parse(run({"verify", curve("oval_sms10.json")}).out);
    for (const auto& c : j9["report"]["identities"]["checks"]) {
        if (c["id"] == "5.6") {
            CHECK(c["lhs"].get<double>() == doctest::Approx(78 * kPi));
            CHECK(c["rhs"].get<double>() == doctest::Approx(78 * kPi));
        }
    }
    CHECK(run({"verify", curve("circle.json")}).code == 0);
    CHECK(run({"verify", curve("two_singularity_curve.json")}).code == 0);
}

TEST_CASE("render") {
    const fs::path out = fs::temp_directory_path() / "ovalsets_cli_mixed.svg";
    const Result r = run({"render", curve("mixed_harmonics.json"), "--sets", "m,wigner,cwms,sms", "--samples", "256", "-o",
                          out.string()});
    REQUIRE(r.code == 0);
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string svg = buf.str();
    std::size_t polylines = 0, cusps = 0;
    for (auto p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++polylines;
    for (auto p = svg.find("class=\"cusp"); p != std::string::npos; p = svg.find("class=\"cusp", p + 1)) ++cusps;
    CHECK(polylines == 4);
    CHECK(cusps == 19);
    const Json j = Json::parse(r.out);
    CHECK(j["report"]["layers"].size() == 4);

    const Result stdout_svg = run({"render", curve("ellipse_2_1.json"), "--samples", "64"});
    CHECK(stdout_svg.code == 0);
    CHECK(stdout_svg.out.find("<svg") != std::string::npos);
}

TEST_CASE("fuzz is deterministic") {
    const Result a = run({"fuzz", "--seed", "1", "--count", "20", "--degree", "6"});
    const Result b = run({"fuzz", "--seed", "1", "--count", "20", "--degree", "6"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j["seed"] == 1);
    CHECK(j["report"]["passed"] == 20);
    CHECK(run({"fuzz", "--seed", "2", "--count", "20", "--degree", "6"}).out != a.out);
}
