#pragma once

#include <cmath>

namespace crlab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {s * x, s * y}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
};

inline Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

// Clockwise quarter turn, v -> (v2, -v1).
inline Vec2 perp(const Vec2& v) { return {v.y, -v.x}; }
// Counterclockwise quarter turn.
inline Vec2 perp_ccw(const Vec2& v) { return {-v.y, v.x}; }

// Angle at vertex a between rays a->b and a->c, in (0, pi).
inline double vertex_angle(const Vec2& a, const Vec2& b, const Vec2& c) {
    const Vec2 u = b - a, v = c - a;
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

inline double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
    return 0.5 * cross(b - a, c - a);
}

}  // namespace crlab
