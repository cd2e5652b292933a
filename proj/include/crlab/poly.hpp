#pragma once

#include <array>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "crlab/barycentric.hpp"
#include "crlab/geometry.hpp"
#include "crlab/mesh.hpp"

namespace crlab {

using MultiIndex3 = std::array<int, 3>;

inline int multi_total(const MultiIndex3& mu) { return mu[0] + mu[1] + mu[2]; }

// Dense enumeration of {mu : |mu| = d}; index runs over (mu2, mu3) with
// mu1 = d - mu2 - mu3.
int homog_count(int degree);
int homog_index(int degree, int mu2, int mu3);
const std::vector<MultiIndex3>& homog_multiindices(int degree);

// Scalar polynomial on one triangle, stored as homogeneous barycentric
// monomial coefficients: p = sum_{|mu|=d} c_mu lambda^mu.
struct TriPoly {
    int degree = 0;
    Eigen::VectorXd coeff;

    static TriPoly zero(int degree);
    static TriPoly constant(int degree, double value);  // value * (sum lambda)^degree

    double eval(double l1, double l2, double l3) const;
    // Exact representation of the same polynomial with degree raised by one
    // (multiplication by lambda1+lambda2+lambda3 == 1).
    TriPoly raised() const;
    TriPoly raised_to(int target_degree) const;
    // Directional derivative: needs the constants grad lambda_i of the frame.
    TriPoly directional_derivative(const BarycentricFrame& frame, const Vec2& dir) const;

    TriPoly& operator+=(const TriPoly& o);
    TriPoly operator*(double s) const;
};

// sum_k c1d[k] * lambda_v^k, homogenized to `degree`.
TriPoly tripoly_from_lambda_series(int vertex, const std::vector<double>& c1d, int degree);

// Piecewise polynomial over a triangulation; zero outside `parts`.
struct PiecewisePoly {
    int degree = 0;
    std::map<int, TriPoly> parts;  // triangle index -> local polynomial

    double eval_on(int tri, double l1, double l2, double l3) const;
    bool supported_on(int tri) const { return parts.count(tri) > 0; }
};

// Exact divergence of the vector field (vx, vy), one degree lower,
// using the per-triangle gradient constants of the mesh frames.
PiecewisePoly poly_divergence(const Triangulation& mesh, const PiecewisePoly& vx,
                              const PiecewisePoly& vy);

// Directional derivative field of a scalar piecewise polynomial.
PiecewisePoly poly_directional_derivative(const Triangulation& mesh, const PiecewisePoly& v,
                                          const Vec2& dir);

// Interpolation on the lattice nodes mu/p of a triangle: solves the
// barycentric-monomial Vandermonde system (cached LU per degree).
TriPoly tripoly_from_node_values(int degree, const Eigen::VectorXd& values);
// Nodes in the same canonical order as homog_multiindices(degree).
std::vector<std::array<double, 3>> lattice_nodes_bary(int degree);

}  // namespace crlab
