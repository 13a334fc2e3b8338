#pragma once

#include <stdexcept>
#include <string>

namespace ovalsets {

/// Base class for every domain failure raised by the library.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coefficient list violates the TrigPoly invariants (bad index, degree cap, non-finite value).
class InvalidTrigPoly : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Root isolation was asked to work on the zero function.
class IdenticallyZero : public GeometryError {
public:
    IdenticallyZero() : GeometryError("function is identically zero") {}
};

/// The support function has a non-positive radius of curvature somewhere.
class NotAnOval : public GeometryError {
public:
    explicit NotAnOval(double rho_min)
        : GeometryError("not an oval: min radius of curvature = " + std::to_string(rho_min)),
          rho_min_(rho_min) {}
    double rho_min() const noexcept { return rho_min_; }

private:
    double rho_min_;
};

/// A derived set collapsed to a single point (signed radius vanishes identically).
class PointSet : public GeometryError {
public:
    PointSet(double x, double y)
        : GeometryError("derived set degenerates to a point"), x_(x), y_(y) {}
    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }

private:
    double x_;
    double y_;
};

/// Curvature requested at a cusp (signed radius below the value tolerance).
class SingularPoint : public GeometryError {
public:
    explicit SingularPoint(double theta)
        : GeometryError("singular point at theta = " + std::to_string(theta)), theta_(theta) {}
    double theta() const noexcept { return theta_; }

private:
    double theta_;
};

/// Parametric curve speed drops below the regularity threshold.
class NotRegular : public GeometryError {
public:
    explicit NotRegular(double min_speed)
        : GeometryError("curve is not regular: min speed = " + std::to_string(min_speed)),
          min_speed_(min_speed) {}
    double min_speed() const noexcept { return min_speed_; }

private:
    double min_speed_;
};

/// Declared orientation contradicts the sign of the enclosed area.
class OrientationMismatch : public GeometryError {
public:
    using GeometryError::GeometryError;
};

}  // namespace ovalsets
