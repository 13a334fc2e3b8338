#include "ovalsets/derived.hpp"

#include <algorithm>
#include <cmath>

#include "ovalsets/errors.hpp"

namespace ovalsets {

namespace {

std::size_t exact_nodes(int degree) { return 4 * static_cast<std::size_t>(degree + 1) + 16; }

struct SetMeasures {
    double area = 0.0;
    double area_quadrature = 0.0;
    double raw_area = 0.0;
    double length = 0.0;
};

// A point set has zero area and length.
SetMeasures measures_or_point(const OvalSpec& o, const DerivedKind& k) {
    try {
        const DerivedSetReport r = derived_report(o, k);
        return {r.oriented_area, r.oriented_area_quadrature, r.raw_oriented_area, r.length};
    } catch (const PointSet&) {
        return {};
    }
}

IdentityCheck equality(std::string id, std::string description, double lhs, double rhs, double tol) {
    return {std::move(id), std::move(description), lhs, rhs, std::abs(lhs - rhs), false, tol};
}

IdentityCheck at_most(std::string id, std::string description, double lhs, double rhs, double tol) {
    return {std::move(id), std::move(description), lhs, rhs, rhs - lhs, true, tol};
}

}  // namespace

DerivedKind DerivedKind::equidistant(double lambda) {
    if (!std::isfinite(lambda)) throw GeometryError("equidistant parameter must be finite");
    if (lambda == 0.5) return wigner();
    return DerivedKind(Type::Equidistant, lambda);
}

std::string DerivedKind::name() const {
    switch (type_) {
        case Type::Equidistant: return "equidistant";
        case Type::Wigner: return "wigner";
        case Type::CWMS: return "cwms";
        case Type::SMS: return "sms";
    }
    return "unknown";
}

TrigPoly derived_support(const OvalSpec& o, const DerivedKind& kind) {
    const TrigPoly& p = o.support();
    switch (kind.type()) {
        case DerivedKind::Type::Equidistant:
            return combine(kind.lambda(), p, -(1.0 - kind.lambda()), antipodal_shift(p));
        case DerivedKind::Type::Wigner:
            return parity_parts(p).odd;
        case DerivedKind::Type::CWMS:
            return 2.0 * filter_harmonics(p, false, [](int n) { return n % 2 == 0; });
        case DerivedKind::Type::SMS:
            return filter_harmonics(p, false, [](int) { return true; });
    }
    return {};
}

double oriented_area(const TrigPoly& q) noexcept {
    double spectral = 0.0;
    for (const auto& h : q.terms()) {
        const double n2 = static_cast<double>(h.n) * h.n;
        spectral += (n2 - 1.0) * (h.a * h.a + h.b * h.b);
    }
    return kPi * q.a0() * q.a0() - 0.5 * kPi * spectral;
}

double oriented_area_quadrature(const TrigPoly& q) {
    const TrigPoly dq = derivative(q);
    return 0.5 * periodic_trapezoid(
                     [&](double t) {
                         const double v = q(t);
                         const double d = dq(t);
                         return v * v - d * d;
                     },
                     exact_nodes(q.degree()));
}

DerivedSetReport derived_report(const OvalSpec& o, const DerivedKind& kind) {
    DerivedSetReport r;
    r.kind = kind;
    r.support = derived_support(o, kind);
    r.signed_radius = r.support + derivative(r.support, 2);

    const double tol = o.classification_tolerance();
    if (r.signed_radius.is_zero(tol)) throw PointSet(r.support.cos_coef(1), r.support.sin_coef(1));

    switch (kind.type()) {
        case DerivedKind::Type::Wigner: r.double_cover = true; break;
        case DerivedKind::Type::SMS: r.double_cover = (r.support + antipodal_shift(r.support)).is_zero(tol); break;
        default: r.double_cover = false; break;
    }
    const double multiplicity = r.double_cover ? 2.0 : 1.0;

    const RootList raw = sign_changes(r.signed_radius);
    r.raw_cusp_count = static_cast<int>(raw.angles.size());
    if (r.double_cover) {
        r.cusp_angles = sign_changes(r.signed_radius, true);
        r.cusp_count = r.raw_cusp_count / 2;
    } else {
        r.cusp_angles = raw;
        r.cusp_count = r.raw_cusp_count;
    }

    r.raw_oriented_area = oriented_area(r.support);
    r.oriented_area = r.raw_oriented_area / multiplicity;
    r.oriented_area_quadrature = oriented_area_quadrature(r.support) / multiplicity;
    r.length = abs_integral(r.signed_radius) / multiplicity;
    r.rotation_number_abs = r.double_cover ? 0.5 : 1.0;
    return r;
}

double derived_curvature(const OvalSpec& o, const DerivedKind& kind, double theta) {
    const TrigPoly q = derived_support(o, kind);
    const TrigPoly r = q + derivative(q, 2);
    const double v = r(theta);
    if (std::abs(v) <= value_tolerance(r)) throw SingularPoint(theta);
    return 1.0 / std::abs(v);
}

double derived_curvature_quotient(const OvalSpec& o, const DerivedKind& kind, double theta) {
    const TrigPoly rho = o.radius_of_curvature();
    const double k = 1.0 / rho(theta);
    const double kh = 1.0 / rho(theta + kPi);
    double num = 0.0;
    double den = 0.0;
    switch (kind.type()) {
        case DerivedKind::Type::Equidistant: {
            const double lam = kind.lambda();
            num = k * kh;
            den = lam * kh - (1.0 - lam) * k;
            break;
        }
        case DerivedKind::Type::Wigner:
            num = 2.0 * k * kh;
            den = kh - k;
            break;
        case DerivedKind::Type::CWMS:
            num = k * kh;
            den = k + kh - o.average_width() * k * kh;
            break;
        case DerivedKind::Type::SMS:
            num = kTwoPi * k;
            den = kTwoPi - o.length() * k;
            break;
    }
    if (std::abs(den) <= kValueTolerance * std::abs(num)) throw SingularPoint(theta);
    return num / std::abs(den);
}

bool IdentityReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

IdentityReport verify_identities(const OvalSpec& o) {
    const OvalSummary summary = geometry_summary(o);
    const double L = summary.length;
    const double A = summary.area;
    const double L2 = L * L;
    const double tol_area = 1e-9 * L2;
    const double tol_len = 1e-9 * L;

    const SetMeasures w = measures_or_point(o, DerivedKind::wigner());
    const SetMeasures c = measures_or_point(o, DerivedKind::cwms());
    const SetMeasures s = measures_or_point(o, DerivedKind::sms());

    IdentityReport rep;
    rep.length = L;
    rep.area = A;
    rep.area_wigner = w.area;
    rep.area_cwms = c.area;
    rep.area_sms = s.area;
    rep.length_wigner = w.length;
    rep.length_cwms = c.length;
    rep.length_sms = s.length;
    rep.constant_width = summary.is_constant_width;
    rep.centrally_symmetric = summary.is_centrally_symmetric;

    auto& out = rep.checks;
    out.push_back(at_most("1.1", "4 pi A <= L^2", 4.0 * kPi * A, L2, tol_area));
    out.push_back(equality("5.1", "L^2 = 4 pi A + 8 pi |A_wigner| + pi |A_cwms|", L2,
                           4.0 * kPi * A + 8.0 * kPi * std::abs(w.area) + kPi * std::abs(c.area), tol_area));
    if (rep.constant_width) {
        out.push_back(equality("5.4", "L^2 = 4 pi A + 8 pi |A_sms|", L2, 4.0 * kPi * A + 8.0 * kPi * std::abs(s.area),
                               tol_area));
        // Computed through the p(theta + pi) forms rather than coefficient filtering.
        const TrigPoly& p = o.support();
        const TrigPoly sms_direct = p - TrigPoly::constant(L / kTwoPi);
        const TrigPoly wigner_direct = 0.5 * (p - antipodal_shift(p));
        const TrigPoly cwms_direct = p + antipodal_shift(p) - TrigPoly::constant(L / kPi);
        const double gap = sup_abs(sms_direct - wigner_direct) + sup_abs(cwms_direct);
        out.push_back(equality("5.7", "SMS = Wigner caustic and CWMS = {origin}", gap, 0.0, tol_len));
    } else {
        out.push_back(equality("5.3", "L^2 = 4 pi A + 4 pi |A_sms|", L2, 4.0 * kPi * A + 4.0 * kPi * std::abs(s.area),
                               tol_area));
        out.push_back(equality("5.6", "4 |A_sms| = 8 |A_wigner| + |A_cwms|", 4.0 * std::abs(s.area),
                               8.0 * std::abs(w.area) + std::abs(c.area), tol_area));
    }
    out.push_back(equality("5.5", "A_sms (full period) = A - L^2 / (4 pi)", s.raw_area, A - L2 / (4.0 * kPi), tol_area));

    double quad_gap = std::abs(summary.area - summary.area_quadrature);
    quad_gap = std::max({quad_gap, std::abs(w.area - w.area_quadrature), std::abs(c.area - c.area_quadrature),
                         std::abs(s.area - s.area_quadrature)});
    out.push_back(equality("quadrature", "coefficient areas agree with quadrature", quad_gap, 0.0, tol_area));

    out.push_back(at_most("3.14", "L_cwms <= 4 L", c.length, 4.0 * L, tol_len));
    out.push_back(at_most("4.6", "L_sms <= 2 L", s.length, 2.0 * L, tol_len));
    if (rep.constant_width) {
        out.push_back(at_most("4.7", "L_sms <= L (constant width)", s.length, L, tol_len));
    } else {
        out.push_back(at_most("5.8", "L_sms <= L_cwms / 2 + 2 L_wigner", s.length, 0.5 * c.length + 2.0 * w.length,
                              tol_len));
    }
    out.push_back(at_most("wigner_length", "2 L_wigner <= L", 2.0 * w.length, L, tol_len));
    out.push_back(at_most("cwms_orientation", "A_cwms <= 0", c.area, 0.0, tol_area));
    out.push_back(at_most("sms_orientation", "A_sms <= 0", s.area, 0.0, tol_area));
    return rep;
}

}  // namespace ovalsets
