#pragma once

#include <array>
#include <functional>
#include <vector>

#include "crlab/geometry.hpp"

namespace crlab {

// Quadrature rule on a triangle in barycentric coordinates.  Weights sum to 1,
// so an integral over a physical triangle K is |K| * sum_q w_q f(x_q).
struct QuadratureRule {
    std::vector<std::array<double, 3>> points;  // (l1, l2, l3)
    std::vector<double> weights;
    int exact_degree = 0;
};

// Collapsed tensor-product Gauss rule (Duffy transform), exact for all
// polynomials of the requested total degree, 0 <= degree <= 40.
QuadratureRule triangle_quadrature(int degree);

double integrate_on_triangle(const QuadratureRule& rule, const Vec2& a, const Vec2& b,
                             const Vec2& c, const std::function<double(Vec2)>& f);

// Same but the integrand is given barycentric coordinates.
double integrate_on_triangle_bary(const QuadratureRule& rule, double area,
                                  const std::function<double(double, double, double)>& f);

}  // namespace crlab
