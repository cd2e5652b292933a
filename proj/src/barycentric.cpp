#include "crlab/barycentric.hpp"

#include <algorithm>
#include <stdexcept>

namespace crlab {

namespace {
inline int cyc(int i) { return (i % 3 + 3) % 3; }
}

double BarycentricFrame::lambda(int i, const Vec2& x) const {
    const Vec2& am = vertex[static_cast<size_t>(cyc(i - 1))];
    const Vec2& ap = vertex[static_cast<size_t>(cyc(i + 1))];
    return cross(x - am, ap - am) / (2.0 * area);
}

std::array<double, 3> BarycentricFrame::barycentric(const Vec2& x) const {
    std::array<double, 3> l{};
    for (int i = 0; i < 3; ++i) {
        const Vec2& am = vertex[static_cast<size_t>(cyc(i - 1))];
        const Vec2& ap = vertex[static_cast<size_t>(cyc(i + 1))];
        // det[x - A_{i-1} | A_{i+1} - A_{i-1}] / (2|K|)
        l[static_cast<size_t>(i)] = cross(x - am, ap - am) / (2.0 * area);
    }
    return l;
}

Vec2 BarycentricFrame::point(double l1, double l2, double l3) const {
    return l1 * vertex[0] + l2 * vertex[1] + l3 * vertex[2];
}

double BarycentricFrame::beta(int i, int k) const {
    if (i == k) return 3.14159265358979323846;
    const int j = 3 - i - k;  // the vertex where E_i and E_k meet
    return angle[static_cast<size_t>(j)];
}

BarycentricFrame barycentric_frame(const Vec2& a1, const Vec2& a2, const Vec2& a3) {
    BarycentricFrame f;
    f.vertex = {a1, a2, a3};
    const double two_area = cross(a2 - a1, a3 - a1);
    f.diameter = std::max({norm(a2 - a1), norm(a3 - a2), norm(a1 - a3)});
    if (two_area <= 2e-14 * f.diameter * f.diameter)
        throw std::invalid_argument(
            two_area <= 0.0 ? "barycentric_frame: clockwise or degenerate triangle"
                            : "barycentric_frame: degenerate triangle");
    f.area = 0.5 * two_area;
    for (int i = 0; i < 3; ++i) {
        const Vec2& am = f.vertex[static_cast<size_t>(cyc(i - 1))];
        const Vec2& ap = f.vertex[static_cast<size_t>(cyc(i + 1))];
        f.grad[static_cast<size_t>(i)] = perp(ap - am) / two_area;
        f.edge_len[static_cast<size_t>(i)] = norm(ap - am);
        f.tangent[static_cast<size_t>(i)] = (am - ap) / f.edge_len[static_cast<size_t>(i)];
        f.normal[static_cast<size_t>(i)] = perp(f.tangent[static_cast<size_t>(i)]);
        f.angle[static_cast<size_t>(i)] =
            vertex_angle(f.vertex[static_cast<size_t>(i)], ap, am);
    }
    return f;
}

}  // namespace crlab
