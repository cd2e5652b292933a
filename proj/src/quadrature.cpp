#include "crlab/quadrature.hpp"

#include <stdexcept>

#include "crlab/jacobi.hpp"

namespace crlab {

QuadratureRule triangle_quadrature(int degree) {
    if (degree < 0 || degree > 40)
        throw std::invalid_argument("triangle_quadrature: degree must be in [0,40]");
    const int n = degree / 2 + 1;
    // Reference triangle (0,0),(1,0),(0,1); map x = u, y = v(1-u) with the
    // Jacobian (1-u) absorbed into a Gauss-Jacobi rule in u.
    const GaussRule1D gj = gauss_jacobi(n, 1.0, 0.0);
    const GaussRule1D gl = gauss_legendre(n);
    QuadratureRule rule;
    rule.exact_degree = degree;
    rule.points.reserve(static_cast<size_t>(n) * n);
    rule.weights.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double u = 0.5 * (1.0 + gj.points[i]);
        for (int j = 0; j < n; ++j) {
            const double v = 0.5 * (1.0 + gl.points[j]);
            const double x = u;
            const double y = v * (1.0 - u);
            rule.points.push_back({1.0 - x - y, x, y});
            rule.weights.push_back(gj.weights[i] * gl.weights[j] / 4.0);
        }
    }
    return rule;
}

double integrate_on_triangle(const QuadratureRule& rule, const Vec2& a, const Vec2& b,
                             const Vec2& c, const std::function<double(Vec2)>& f) {
    const double area = signed_area(a, b, c);
    double sum = 0.0;
    for (size_t q = 0; q < rule.points.size(); ++q) {
        const auto& l = rule.points[q];
        const Vec2 x = l[0] * a + l[1] * b + l[2] * c;
        sum += rule.weights[q] * f(x);
    }
    return area * sum;
}

double integrate_on_triangle_bary(const QuadratureRule& rule, double area,
                                  const std::function<double(double, double, double)>& f) {
    double sum = 0.0;
    for (size_t q = 0; q < rule.points.size(); ++q) {
        const auto& l = rule.points[q];
        sum += rule.weights[q] * f(l[0], l[1], l[2]);
    }
    return area * sum;
}

}  // namespace crlab
