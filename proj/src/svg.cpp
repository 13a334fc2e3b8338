#include "ovalsets/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ovalsets/derived.hpp"
#include "ovalsets/errors.hpp"

namespace ovalsets {

namespace {

struct Style {
    const char* stroke;
    const char* dash;
    double width;
};

Style style_for(const std::string& name) {
    if (name == "m") return {"#000000", "none", 1.5};
    if (name == "wigner") return {"#1f77b4", "6 3", 1.0};
    if (name == "cwms") return {"#d62728", "none", 2.0};
    if (name == "sms") return {"#2ca02c", "none", 1.0};
    return {"#7f7f7f", "2 2", 1.0};
}

Vec2 support_point(const TrigPoly& q, double t) {
    const double v = q(t);
    const double d = q.eval(t, 1);
    const double c = std::cos(t);
    const double s = std::sin(t);
    return {v * c - d * s, v * s + d * c};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::vector<SvgLayer> oval_layers(const OvalSpec& o, const std::vector<std::string>& sets, std::size_t samples) {
    std::vector<SvgLayer> layers;
    for (const std::string& name : sets) {
        SvgLayer layer;
        layer.name = name;
        if (name == "m") {
            for (std::size_t i = 0; i < samples; ++i) {
                layer.polyline.push_back(curve_point(o, kTwoPi * static_cast<double>(i) / static_cast<double>(samples)));
            }
            layers.push_back(std::move(layer));
            continue;
        }
        DerivedKind kind = DerivedKind::wigner();
        if (name == "cwms") {
            kind = DerivedKind::cwms();
        } else if (name == "sms") {
            kind = DerivedKind::sms();
        } else if (name != "wigner") {
            throw GeometryError("unknown set \"" + name + "\" (expected m, wigner, cwms, sms)");
        }
        try {
            const DerivedSetReport r = derived_report(o, kind);
            // A double cover closes after half a turn.
            const double span = r.double_cover ? kPi : kTwoPi;
            for (std::size_t i = 0; i < samples; ++i) {
                layer.polyline.push_back(
                    support_point(r.support, span * static_cast<double>(i) / static_cast<double>(samples)));
            }
            for (double t : r.cusp_angles.angles) layer.cusps.push_back(support_point(r.support, t));
        } catch (const PointSet& p) {
            layer.point = Vec2{p.x(), p.y()};
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::vector<SvgLayer> parametric_layers(const ParametricCurve& c, const std::vector<std::string>& sets,
                                        std::size_t samples) {
    std::vector<SvgLayer> layers;
    const double L = arc_length(c);
    for (const std::string& name : sets) {
        SvgLayer layer;
        layer.name = name;
        if (name == "m") {
            for (std::size_t i = 0; i < samples; ++i) {
                layer.polyline.push_back(c.point(kTwoPi * static_cast<double>(i) / static_cast<double>(samples)));
            }
        } else if (name == "sms") {
            for (std::size_t i = 0; i < samples; ++i) {
                layer.polyline.push_back(
                    sms_point(c, L, kTwoPi * static_cast<double>(i) / static_cast<double>(samples)));
            }
            const SmsParametricReport r = sms_parametric(c, 1);
            if (r.point_set) {
                // Offset of a circle collapses to its centre.
                layer.point = layer.polyline.front();
                layer.polyline.clear();
            } else {
                for (double t : r.singular_params.angles) layer.cusps.push_back(sms_point(c, L, t));
            }
        } else {
            throw GeometryError("unknown set \"" + name + "\" for a parametric curve (expected m, sms)");
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::string render_svg(const std::vector<SvgLayer>& layers) {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    bool first = true;
    auto grow = [&](const Vec2& v) {
        if (first) {
            x0 = x1 = v.x;
            y0 = y1 = v.y;
            first = false;
            return;
        }
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    };
    for (const auto& l : layers) {
        for (const auto& v : l.polyline) grow(v);
        for (const auto& v : l.cusps) grow(v);
        if (l.point) grow(*l.point);
    }
    double w = x1 - x0;
    double h = y1 - y0;
    const double extent = std::max({w, h, 1e-9});
    if (w < 1e-12 * extent || w == 0.0) w = extent;
    if (h < 1e-12 * extent || h == 0.0) h = extent;
    const double mx = 0.05 * w;
    const double my = 0.05 * h;
    const double marker = 0.006 * std::max(w, h);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0 - mx) << ' ' << num(-(y1 + my)) << ' '
        << num(w + 2 * mx) << ' ' << num(h + 2 * my) << "\">\n";
    // Flip y so the mathematical orientation is preserved.
    out << "<g transform=\"scale(1,-1)\">\n";
    for (const auto& l : layers) {
        const Style st = style_for(l.name);
        if (!l.polyline.empty()) {
            out << "<polyline class=\"" << l.name << "\" fill=\"none\" stroke=\"" << st.stroke
                << "\" stroke-dasharray=\"" << st.dash << "\" stroke-width=\"" << st.width
                << "\" vector-effect=\"non-scaling-stroke\" points=\"";
            for (std::size_t i = 0; i <= l.polyline.size(); ++i) {
                const Vec2& v = l.polyline[i % l.polyline.size()];
                if (i) out << ' ';
                out << num(v.x) << ',' << num(v.y);
            }
            out << "\"/>\n";
        }
        for (const auto& c : l.cusps) {
            out << "<circle class=\"cusp " << l.name << "\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\""
                << num(marker) << "\" fill=\"" << st.stroke << "\"/>\n";
        }
        if (l.point) {
            out << "<circle class=\"point " << l.name << "\" cx=\"" << num(l.point->x) << "\" cy=\""
                << num(l.point->y) << "\" r=\"" << num(2 * marker) << "\" fill=\"" << st.stroke << "\"/>\n";
        }
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace ovalsets
