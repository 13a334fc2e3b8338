#include <doctest.h>

#include <fstream>
#include <string>

#include "ovalsets/derived.hpp"
#include "ovalsets/serialize.hpp"

using namespace ovalsets;

namespace {

Json golden(const std::string& name) {
    std::ifstream in(OVALSETS_SOURCE_DIR "/tests/golden/" + name);
    REQUIRE(in);
    return Json::parse(in);
}

DerivedKind kind_named(const std::string& s) {
    if (s == "wigner") return DerivedKind::wigner();
    if (s == "cwms") return DerivedKind::cwms();
    return DerivedKind::sms();
}

void check_counts(const Json& entry) {
    const OvalSpec o = validate_oval(curve_spec_from_json(entry["support"]).support);
    for (const auto& [set, want] : entry["cusps"].items()) {
        const DerivedSetReport r = derived_report(o, kind_named(set));
        CHECK_MESSAGE(r.cusp_count == want.get<int>(), set);
        CHECK(r.cusp_angles.generic());
    }
}

}  // namespace

TEST_CASE("cusp-count goldens") {
    for (const char* name : {"cwms12.json", "sms10.json", "mixed_harmonics.json"}) {
        INFO(name);
        check_counts(golden(name));
    }
}

TEST_CASE("CWMS family with 4n cusps") {
    for (const auto& e : golden("cwms_family.json")) {
        INFO("n = " << e["n"].get<int>());
        check_counts(e);
    }
}

TEST_CASE("SMS family with n cusps") {
    for (const auto& e : golden("sms_family.json")) {
        INFO("n = " << e["n"].get<int>());
        check_counts(e);
    }
}

TEST_CASE("area split for 102 + cos 4t + cos 5t") {
    const Json g = golden("sms10.json");
    const IdentityReport r = verify_identities(validate_oval(curve_spec_from_json(g["support"]).support));
    const Json& a = g["areas_over_pi"];
    CHECK(4 * std::abs(r.area_sms) / kPi == doctest::Approx(a["four_abs_sms"].get<double>()).epsilon(1e-12));
    CHECK(8 * std::abs(r.area_wigner) / kPi == doctest::Approx(a["eight_abs_wigner"].get<double>()).epsilon(1e-12));
    CHECK(std::abs(r.area_cwms) / kPi == doctest::Approx(a["abs_cwms"].get<double>()).epsilon(1e-12));
}
