#include "ovalsets/serialize.hpp"

#include <fstream>
#include <sstream>

#include "ovalsets/errors.hpp"

namespace ovalsets {

namespace {

double number_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number()) throw ParseError(std::string("field \"") + key + "\" must be a number");
    return v.get<double>();
}

}  // namespace

Json to_json(const TrigPoly& f) {
    Json terms = Json::array();
    for (const auto& h : f.terms()) terms.push_back(Json::array({h.n, h.a, h.b}));
    return Json{{"a0", f.a0()}, {"terms", terms}};
}

TrigPoly trigpoly_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("series must be a JSON object");
    const double a0 = number_field(j, "a0");
    std::vector<Harmonic> terms;
    if (j.contains("terms")) {
        const Json& t = j.at("terms");
        if (!t.is_array()) throw ParseError("\"terms\" must be an array");
        int last = 0;
        for (const Json& e : t) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number() || !e[2].is_number()) {
                throw ParseError("each term must be [n, a_n, b_n] with integer n");
            }
            const int n = e[0].get<int>();
            if (n <= last) throw ParseError("term indices must be >= 1 and strictly increasing");
            last = n;
            terms.push_back({n, e[1].get<double>(), e[2].get<double>()});
        }
    }
    try {
        return TrigPoly(a0, std::move(terms));
    } catch (const InvalidTrigPoly& e) {
        throw ParseError(e.what());
    }
}

CurveSpec curve_spec_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("curve spec must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string()) throw ParseError("missing string field \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    CurveSpec spec;
    if (kind == "support") {
        spec.kind = CurveSpec::Kind::Support;
        spec.support = trigpoly_from_json(j);
    } else if (kind == "parametric") {
        spec.kind = CurveSpec::Kind::Parametric;
        if (!j.contains("x") || !j.contains("y")) throw ParseError("parametric spec needs \"x\" and \"y\"");
        spec.x = trigpoly_from_json(j.at("x"));
        spec.y = trigpoly_from_json(j.at("y"));
        if (j.contains("orientation")) {
            const Json& o = j.at("orientation");
            if (!o.is_number_integer() || (o.get<int>() != 1 && o.get<int>() != -1)) {
                throw ParseError("\"orientation\" must be 1 or -1");
            }
            spec.orientation = o.get<int>();
        }
    } else {
        throw ParseError("unknown kind \"" + kind + "\" (expected \"support\" or \"parametric\")");
    }
    return spec;
}

Json to_json(const CurveSpec& spec) {
    if (spec.kind == CurveSpec::Kind::Support) {
        Json j{{"kind", "support"}};
        const Json s = to_json(spec.support);
        j["a0"] = s["a0"];
        j["terms"] = s["terms"];
        return j;
    }
    return Json{{"kind", "parametric"}, {"x", to_json(spec.x)}, {"y", to_json(spec.y)}, {"orientation", spec.orientation}};
}

CurveSpec load_curve_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return curve_spec_from_json(j);
}

Json to_json(const RootList& r) { return Json{{"angles", r.angles}, {"tangential", r.tangential}}; }

Json to_json(const Vec2& v) { return Json::array({v.x, v.y}); }

Json to_json(const OvalSummary& s) {
    Json j{{"length", s.length},
           {"length_quadrature", s.length_quadrature},
           {"area", s.area},
           {"area_quadrature", s.area_quadrature},
           {"avg_width", s.avg_width},
           {"width_min", s.width_min},
           {"width_max", s.width_max},
           {"constant_width", s.is_constant_width},
           {"centrally_symmetric", s.is_centrally_symmetric},
           {"vertices_degenerate", s.vertices_degenerate},
           {"vertex_count", s.vertex_angles.angles.size()},
           {"vertex_angles", to_json(s.vertex_angles)},
           {"steiner", to_json(s.steiner)}};
    return j;
}

Json to_json(const DerivedSetReport& r) {
    Json kind{{"type", r.kind.name()}};
    if (r.kind.type() == DerivedKind::Type::Equidistant) kind["lambda"] = r.kind.lambda();
    return Json{{"kind", kind},
                {"support", to_json(r.support)},
                {"signed_radius", to_json(r.signed_radius)},
                {"oriented_area", r.oriented_area},
                {"oriented_area_quadrature", r.oriented_area_quadrature},
                {"raw_oriented_area", r.raw_oriented_area},
                {"length", r.length},
                {"cusp_count", r.cusp_count},
                {"raw_cusp_count", r.raw_cusp_count},
                {"cusp_angles", to_json(r.cusp_angles)},
                {"rotation_number_abs", r.rotation_number_abs},
                {"double_cover", r.double_cover}};
}

Json to_json(const IdentityReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"id", c.id},
                              {"description", c.description},
                              {"kind", c.inequality ? "inequality" : "equality"},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {c.inequality ? "slack" : "residual", c.value},
                              {"tolerance", c.tolerance},
                              {"passed", c.passed()}});
    }
    return Json{{"length", r.length},
                {"area", r.area},
                {"area_wigner", r.area_wigner},
                {"area_cwms", r.area_cwms},
                {"area_sms", r.area_sms},
                {"length_wigner", r.length_wigner},
                {"length_cwms", r.length_cwms},
                {"length_sms", r.length_sms},
                {"constant_width", r.constant_width},
                {"centrally_symmetric", r.centrally_symmetric},
                {"checks", checks},
                {"all_passed", r.all_passed()}};
}

Json to_json(const StabilityReport& r) {
    Json slacks = Json::object();
    Json detail = Json::array();
    for (const auto& b : r.bound_slacks) {
        slacks[b.id] = b.slack;
        detail.push_back(Json{{"id", b.id}, {"description", b.description}, {"lhs", b.lhs}, {"rhs", b.rhs}});
    }
    return Json{{"steiner", to_json(r.steiner)},
                {"phi_wigner", r.phi_wigner},
                {"phi_wigner_geometric", r.phi_wigner_geometric},
                {"phi_cwms", r.phi_cwms},
                {"phi_cwms_geometric", r.phi_cwms_geometric},
                {"d_inf_W", r.d_inf_W},
                {"d_2_W", r.d_2_W},
                {"d_inf_S", r.d_inf_S},
                {"d_2_S", r.d_2_S},
                {"bound_slacks", slacks},
                {"bounds", detail},
                {"all_hold", r.all_hold()}};
}

Json to_json(const SmsParametricReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.sample_points) {
        samples.push_back(Json{{"t", s.t}, {"curve", to_json(s.curve)}, {"sms", to_json(s.sms)}});
    }
    return Json{{"length", r.length},
                {"area", r.area},
                {"sms_area", r.sms_area},
                {"closed_form_sms_area", r.closed_form_sms_area},
                {"singular_count", r.singular_params.angles.size()},
                {"singular_params", to_json(r.singular_params)},
                {"point_set", r.point_set},
                {"equality_residual", r.equality_residual},
                {"constant_width_case", r.constant_width_case},
                {"geometric_sms_area", r.geometric_sms_area},
                {"residual_double_cover", r.residual_double_cover},
                {"sample_points", samples}};
}

}  // namespace ovalsets
