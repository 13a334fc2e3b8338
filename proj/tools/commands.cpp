#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ovalsets/derived.hpp"
#include "ovalsets/errors.hpp"
#include "ovalsets/fuzz.hpp"
#include "ovalsets/general_curve.hpp"
#include "ovalsets/oval.hpp"
#include "ovalsets/serialize.hpp"
#include "ovalsets/stability.hpp"
#include "ovalsets/svg.hpp"

#ifndef OVALSETS_VERSION
#define OVALSETS_VERSION "0.0.0"
#endif

namespace ovalsets::cli {

namespace {

/// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::string set;
    std::optional<double> lambda;
    bool stability = false;
    std::string sets;
    std::size_t samples = 2048;
    std::string output;
    std::uint64_t seed = 1;
    long long count = 100;
    int degree = 8;
};

Json envelope(const std::string& command, const Json& input, const Json& report) {
    Json j{{"command", command}, {"tool_version", version()}, {"input", input}};
    j["report"] = report;
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

ParametricCurve make_parametric(const CurveSpec& spec) { return ParametricCurve(spec.x, spec.y, spec.orientation); }

Json parametric_info(const ParametricCurve& c) {
    return Json{{"length", arc_length(c)},
                {"area", enclosed_area(c)},
                {"min_speed", c.min_speed()},
                {"simple", is_simple(c)},
                {"convex", is_convex(c)}};
}

int cmd_info(const Options& opt, std::ostream& out) {
    const CurveSpec spec = load_curve_spec(opt.file);
    Json report;
    if (spec.kind == CurveSpec::Kind::Support) {
        report = to_json(geometry_summary(validate_oval(spec.support)));
    } else {
        report = parametric_info(make_parametric(spec));
    }
    emit(out, envelope("info", to_json(spec), report));
    return kOk;
}

DerivedKind parse_kind(const Options& opt) {
    if (opt.set == "equidistant") {
        if (!opt.lambda) throw UsageError("--set equidistant requires --lambda");
        return DerivedKind::equidistant(*opt.lambda);
    }
    if (opt.lambda) throw UsageError("--lambda only applies to --set equidistant");
    if (opt.set == "wigner") return DerivedKind::wigner();
    if (opt.set == "cwms") return DerivedKind::cwms();
    return DerivedKind::sms();
}

int cmd_derive(const Options& opt, std::ostream& out) {
    const CurveSpec spec = load_curve_spec(opt.file);
    if (spec.kind != CurveSpec::Kind::Support) throw UsageError("derive needs a support-function spec");
    const DerivedKind kind = parse_kind(opt);
    const OvalSpec o = validate_oval(spec.support);
    Json input = to_json(spec);
    Json options{{"set", opt.set}};
    if (opt.lambda) options["lambda"] = *opt.lambda;
    input["options"] = options;
    Json report;
    try {
        report = to_json(derived_report(o, kind));
    } catch (const PointSet& p) {
        Json k{{"type", kind.name()}};
        if (kind.type() == DerivedKind::Type::Equidistant) k["lambda"] = kind.lambda();
        report = Json{{"kind", k}, {"degenerate", "point"}, {"point", to_json(Vec2{p.x(), p.y()})}};
    }
    emit(out, envelope("derive", input, report));
    return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const CurveSpec spec = load_curve_spec(opt.file);
    Json input = to_json(spec);
    input["options"] = Json{{"stability", opt.stability}};
    if (spec.kind == CurveSpec::Kind::Parametric) {
        if (opt.stability) throw UsageError("--stability needs a support-function spec");
        const SmsParametricReport r = sms_parametric(make_parametric(spec));
        const bool ok = r.equality_residual <= 1e-8;
        Json report = to_json(r);
        report["passed"] = ok;
        emit(out, envelope("verify", input, report));
        return ok ? kOk : kVerification;
    }
    const OvalSpec o = validate_oval(spec.support);
    const IdentityReport ids = verify_identities(o);
    bool ok = ids.all_passed();
    Json report{{"identities", to_json(ids)}};
    if (opt.stability) {
        const StabilityReport st = stability_report(o);
        ok = ok && st.all_hold(1e-9) && st.phi_wigner >= -1e-9 * st.length * st.length &&
             st.phi_cwms >= -1e-9 * st.length * st.length;
        report["stability"] = to_json(st);
    }
    report["passed"] = ok;
    emit(out, envelope("verify", input, report));
    return ok ? kOk : kVerification;
}

std::vector<std::string> split_sets(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int cmd_render(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.samples < 16) throw UsageError("--samples must be at least 16");
    const CurveSpec spec = load_curve_spec(opt.file);
    std::vector<SvgLayer> layers;
    if (spec.kind == CurveSpec::Kind::Support) {
        const auto sets = split_sets(opt.sets.empty() ? "m,wigner,cwms,sms" : opt.sets);
        for (const auto& s : sets) {
            if (s != "m" && s != "wigner" && s != "cwms" && s != "sms") throw UsageError("unknown set \"" + s + "\"");
        }
        layers = oval_layers(validate_oval(spec.support), sets, opt.samples);
    } else {
        const auto sets = split_sets(opt.sets.empty() ? "m,sms" : opt.sets);
        for (const auto& s : sets) {
            if (s != "m" && s != "sms") throw UsageError("unknown set \"" + s + "\" for a parametric curve");
        }
        layers = parametric_layers(make_parametric(spec), sets, opt.samples);
    }
    const std::string svg = render_svg(layers);
    if (opt.output.empty() || opt.output == "-") {
        out << svg;
        return kOk;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file || !(file << svg) || !file.flush()) {
        err << "error: cannot write " << opt.output << '\n';
        return kIo;
    }
    Json summary = Json::array();
    for (const auto& l : layers) {
        summary.push_back(Json{{"set", l.name},
                               {"polyline_points", l.polyline.size()},
                               {"cusp_markers", l.cusps.size()},
                               {"point", l.point.has_value()}});
    }
    Json input = to_json(spec);
    input["options"] = Json{{"sets", opt.sets}, {"samples", opt.samples}, {"output", opt.output}};
    emit(out, envelope("render", input, Json{{"layers", summary}}));
    return kOk;
}

int cmd_fuzz(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.count < 1) throw UsageError("--count must be at least 1");
    if (opt.degree < 1 || opt.degree > 16) throw UsageError("--degree must be in [1, 16]");
    const FuzzSummary s = run_fuzz(opt.seed, static_cast<std::size_t>(opt.count), opt.degree);
    Json failures = Json::array();
    for (const auto& f : s.failures) {
        failures.push_back(Json{{"index", f.index}, {"support", to_json(f.support)}, {"failures", f.failures}});
        err << "case " << f.index << " failed; support = " << to_json(f.support).dump() << '\n';
        for (const auto& m : f.failures) err << "  " << m << '\n';
    }
    Json report{{"count", s.count},        {"degree", s.degree}, {"passed", s.passed},
                {"failed", s.failed},      {"non_generic", s.non_generic}, {"failures", failures}};
    Json input{{"seed", opt.seed}, {"count", opt.count}, {"degree", opt.degree}};
    Json j = envelope("fuzz", input, report);
    j["seed"] = opt.seed;
    emit(out, j);
    return s.ok() ? kOk : kVerification;
}

}  // namespace

const char* version() noexcept { return OVALSETS_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derived sets of ovals: Wigner caustic, CWMS and SMS from support functions", "ovalsets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version());
    Options opt;

    auto* info = app.add_subcommand("info", "Summary of the curve (length, area, widths, vertices)");
    info->add_option("file", opt.file, "Curve-spec JSON")->required();

    auto* derive = app.add_subcommand("derive", "Report on one derived set");
    derive->add_option("file", opt.file, "Curve-spec JSON")->required();
    derive->add_option("--set", opt.set, "wigner, cwms, sms or equidistant")
        ->required()
        ->check(CLI::IsMember({"wigner", "cwms", "sms", "equidistant"}));
    derive->add_option("--lambda", opt.lambda, "Equidistant parameter");

    auto* verify = app.add_subcommand("verify", "Check the integral identities and inequalities");
    verify->add_option("file", opt.file, "Curve-spec JSON")->required();
    verify->add_flag("--stability", opt.stability, "Also report the stability bounds");

    auto* render = app.add_subcommand("render", "Draw the curve and its derived sets as SVG");
    render->add_option("file", opt.file, "Curve-spec JSON")->required();
    render->add_option("--sets", opt.sets, "Comma-separated subset of m,wigner,cwms,sms");
    render->add_option("--samples", opt.samples, "Samples per polyline (>= 16)");
    render->add_option("-o,--output", opt.output, "Output SVG path (stdout if omitted)");

    auto* fuzz = app.add_subcommand("fuzz", "Check all invariants on seeded random ovals");
    fuzz->add_option("--seed", opt.seed, "Random seed");
    fuzz->add_option("--count", opt.count, "Number of ovals");
    fuzz->add_option("--degree", opt.degree, "Maximum harmonic degree (<= 16)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (info->parsed()) return cmd_info(opt, out);
        if (derive->parsed()) return cmd_derive(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (render->parsed()) return cmd_render(opt, out, err);
        return cmd_fuzz(opt, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const ParseError& e) {
        err << "error: parse failure: " << e.what() << '\n';
        return kParse;
    } catch (const NotAnOval& e) {
        err << "error: NotAnOval(rho_min = " << e.rho_min() << "): " << e.what() << '\n';
        return kNotAnOval;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << '\n';
        return kNotAnOval;
    }
}

}  // namespace ovalsets::cli
