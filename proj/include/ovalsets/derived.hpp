#pragma once

#include <string>
#include <vector>

#include "ovalsets/oval.hpp"
#include "ovalsets/roots.hpp"
#include "ovalsets/trigpoly.hpp"

namespace ovalsets {

/// Which derived set of an oval: affine lambda-equidistant, Wigner caustic,
/// Constant Width Measure Set or Spherical Measure Set.
class DerivedKind {
public:
    enum class Type { Equidistant, Wigner, CWMS, SMS };

    static DerivedKind equidistant(double lambda);
    static DerivedKind wigner() { return DerivedKind(Type::Wigner, 0.5); }
    static DerivedKind cwms() { return DerivedKind(Type::CWMS, 0.0); }
    static DerivedKind sms() { return DerivedKind(Type::SMS, 0.0); }

    Type type() const noexcept { return type_; }
    /// Only meaningful for Equidistant (and 1/2 for Wigner).
    double lambda() const noexcept { return lambda_; }
    std::string name() const;

    friend bool operator==(const DerivedKind&, const DerivedKind&) = default;

private:
    DerivedKind(Type t, double lambda) : type_(t), lambda_(lambda) {}
    Type type_;
    double lambda_;
};

/// Generalised support function q of the derived set.
TrigPoly derived_support(const OvalSpec& o, const DerivedKind& kind);

/// 1/2 integral of q^2 - q'^2 over one period, coefficient form.
double oriented_area(const TrigPoly& q) noexcept;
/// Same integral by periodic quadrature.
double oriented_area_quadrature(const TrigPoly& q);

struct DerivedSetReport {
    DerivedKind kind = DerivedKind::wigner();
    TrigPoly support;
    TrigPoly signed_radius;  ///< q + q''
    double oriented_area = 0.0;             ///< geometric (covering-adjusted)
    double oriented_area_quadrature = 0.0;  ///< same via quadrature
    double raw_oriented_area = 0.0;         ///< over the full parameter period
    double length = 0.0;                    ///< geometric (covering-adjusted)
    RootList cusp_angles;                   ///< geometric cusps ([0, pi) for double covers)
    int cusp_count = 0;
    int raw_cusp_count = 0;  ///< sign changes of q + q'' over [0, 2 pi)
    double rotation_number_abs = 1.0;
    bool double_cover = false;
};

/// Throws PointSet when the signed radius vanishes identically.
DerivedSetReport derived_report(const OvalSpec& o, const DerivedKind& kind);

/// Curvature of the derived set at parameter theta; throws SingularPoint at cusps.
double derived_curvature(const OvalSpec& o, const DerivedKind& kind, double theta);

/// Curvature from the quotient formulas in the base curve's curvature
/// (independent route used as a cross-check of derived_curvature).
double derived_curvature_quotient(const OvalSpec& o, const DerivedKind& kind, double theta);

struct IdentityCheck {
    std::string id;
    std::string description;
    double lhs = 0.0;
    double rhs = 0.0;
    /// Equalities: |lhs - rhs|. Inequalities lhs <= rhs: rhs - lhs.
    double value = 0.0;
    bool inequality = false;
    double tolerance = 0.0;
    bool passed() const noexcept { return inequality ? value >= -tolerance : value <= tolerance; }
};

struct IdentityReport {
    double length = 0.0;
    double area = 0.0;
    double area_wigner = 0.0;  ///< geometric oriented areas
    double area_cwms = 0.0;
    double area_sms = 0.0;
    double length_wigner = 0.0;
    double length_cwms = 0.0;
    double length_sms = 0.0;
    bool constant_width = false;
    bool centrally_symmetric = false;
    std::vector<IdentityCheck> checks;

    bool all_passed() const noexcept;
};

IdentityReport verify_identities(const OvalSpec& o);

}  // namespace ovalsets
