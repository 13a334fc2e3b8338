#pragma once

#include <cmath>

namespace ovalsets {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2& operator+=(const Vec2& o) noexcept {
        x += o.x;
        y += o.y;
        return *this;
    }
    friend Vec2 operator+(Vec2 a, const Vec2& b) noexcept { return a += b; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, const Vec2& v) noexcept { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(const Vec2& a, const Vec2& b) noexcept { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) noexcept { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) noexcept { return std::hypot(v.x, v.y); }
/// Rotation by +pi/2.
inline Vec2 perp(const Vec2& v) noexcept { return {-v.y, v.x}; }

}  // namespace ovalsets
