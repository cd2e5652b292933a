#pragma once

#include <array>

#include "crlab/geometry.hpp"

namespace crlab {

// Geometry of a single counterclockwise triangle: barycentric coordinates,
// their gradients, edge data and angles.  Edge i is opposite vertex i and
// connects vertices i+1 and i-1 (cyclic).
struct BarycentricFrame {
    std::array<Vec2, 3> vertex;
    double area = 0.0;
    double diameter = 0.0;
    std::array<Vec2, 3> grad;          // grad lambda_i = (A_{i+1}-A_{i-1})^perp / (2|K|)
    std::array<double, 3> edge_len;    // |E_i|
    std::array<Vec2, 3> normal;        // outer unit normal of E_i
    std::array<Vec2, 3> tangent;       // ccw unit tangent of E_i
    std::array<double, 3> angle;       // interior angle at vertex i

    // lambda_i(x); affine, exact up to rounding.
    double lambda(int i, const Vec2& x) const;
    std::array<double, 3> barycentric(const Vec2& x) const;
    Vec2 point(double l1, double l2, double l3) const;

    // Angle between edges E_i and E_k at their common vertex; pi when i == k.
    double beta(int i, int k) const;

    double dn_lambda(int i, int k) const { return dot(grad[i], normal[k]); }
    double dt_lambda(int i, int k) const { return dot(grad[i], tangent[k]); }
};

// Throws on degenerate input (|K| <= 1e-14 * diam^2) or clockwise orientation.
BarycentricFrame barycentric_frame(const Vec2& a1, const Vec2& a2, const Vec2& a3);

}  // namespace crlab
