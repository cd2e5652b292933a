#include "crlab/poly.hpp"

#include <mutex>
#include <stdexcept>

namespace crlab {

int homog_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

int homog_index(int degree, int mu2, int mu3) {
    // Row mu2 starts after rows 0..mu2-1 with lengths degree+1, degree, ...
    return mu2 * (2 * degree + 3 - mu2) / 2 + mu3;
}

const std::vector<MultiIndex3>& homog_multiindices(int degree) {
    static std::mutex mu;
    static std::map<int, std::vector<MultiIndex3>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it == cache.end()) {
        std::vector<MultiIndex3> list;
        list.reserve(static_cast<size_t>(homog_count(degree)));
        for (int m2 = 0; m2 <= degree; ++m2)
            for (int m3 = 0; m3 <= degree - m2; ++m3)
                list.push_back({degree - m2 - m3, m2, m3});
        it = cache.emplace(degree, std::move(list)).first;
    }
    return it->second;
}

TriPoly TriPoly::zero(int degree) {
    TriPoly p;
    p.degree = degree;
    p.coeff = Eigen::VectorXd::Zero(homog_count(degree));
    return p;
}

TriPoly TriPoly::constant(int degree, double value) {
    TriPoly p = zero(degree);
    // (l1+l2+l3)^d = sum multinomial(mu) lambda^mu
    const auto& idx = homog_multiindices(degree);
    for (size_t k = 0; k < idx.size(); ++k) {
        double m = 1.0;
        for (int j = 2; j <= degree; ++j) m *= j;
        for (int c : idx[k])
            for (int j = 2; j <= c; ++j) m /= j;
        p.coeff[static_cast<Eigen::Index>(k)] = value * m;
    }
    return p;
}

double TriPoly::eval(double l1, double l2, double l3) const {
    // Powers up front, then one product per monomial.
    std::array<std::vector<double>, 3> pw;
    for (int i = 0; i < 3; ++i) {
        pw[static_cast<size_t>(i)].resize(static_cast<size_t>(degree) + 1);
        pw[static_cast<size_t>(i)][0] = 1.0;
    }
    for (int k = 1; k <= degree; ++k) {
        pw[0][static_cast<size_t>(k)] = pw[0][static_cast<size_t>(k - 1)] * l1;
        pw[1][static_cast<size_t>(k)] = pw[1][static_cast<size_t>(k - 1)] * l2;
        pw[2][static_cast<size_t>(k)] = pw[2][static_cast<size_t>(k - 1)] * l3;
    }
    const auto& idx = homog_multiindices(degree);
    double sum = 0.0;
    for (size_t k = 0; k < idx.size(); ++k) {
        const auto& mu = idx[k];
        sum += coeff[static_cast<Eigen::Index>(k)] * pw[0][static_cast<size_t>(mu[0])] *
               pw[1][static_cast<size_t>(mu[1])] * pw[2][static_cast<size_t>(mu[2])];
    }
    return sum;
}

TriPoly TriPoly::raised() const {
    TriPoly out = zero(degree + 1);
    const auto& idx = homog_multiindices(degree);
    for (size_t k = 0; k < idx.size(); ++k) {
        const double c = coeff[static_cast<Eigen::Index>(k)];
        if (c == 0.0) continue;
        const auto& mu = idx[k];
        out.coeff[homog_index(degree + 1, mu[1], mu[2])] += c;
        out.coeff[homog_index(degree + 1, mu[1] + 1, mu[2])] += c;
        out.coeff[homog_index(degree + 1, mu[1], mu[2] + 1)] += c;
    }
    return out;
}

TriPoly TriPoly::raised_to(int target_degree) const {
    if (target_degree < degree)
        throw std::invalid_argument("TriPoly::raised_to: cannot lower the degree");
    TriPoly out = *this;
    while (out.degree < target_degree) out = out.raised();
    return out;
}

TriPoly TriPoly::directional_derivative(const BarycentricFrame& frame, const Vec2& dir) const {
    if (degree == 0) return zero(0);
    TriPoly out = zero(degree - 1);
    std::array<double, 3> dl{};
    for (int i = 0; i < 3; ++i)
        dl[static_cast<size_t>(i)] = dot(frame.grad[static_cast<size_t>(i)], dir);
    const auto& idx = homog_multiindices(degree);
    for (size_t k = 0; k < idx.size(); ++k) {
        const double c = coeff[static_cast<Eigen::Index>(k)];
        if (c == 0.0) continue;
        const auto& mu = idx[k];
        if (mu[0] > 0) out.coeff[homog_index(degree - 1, mu[1], mu[2])] += c * mu[0] * dl[0];
        if (mu[1] > 0) out.coeff[homog_index(degree - 1, mu[1] - 1, mu[2])] += c * mu[1] * dl[1];
        if (mu[2] > 0) out.coeff[homog_index(degree - 1, mu[1], mu[2] - 1)] += c * mu[2] * dl[2];
    }
    return out;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    if (o.degree != degree) throw std::invalid_argument("TriPoly: degree mismatch in +=");
    coeff += o.coeff;
    return *this;
}

TriPoly TriPoly::operator*(double s) const {
    TriPoly out = *this;
    out.coeff *= s;
    return out;
}

TriPoly tripoly_from_lambda_series(int vertex, const std::vector<double>& c1d, int degree) {
    if (static_cast<int>(c1d.size()) - 1 > degree)
        throw std::invalid_argument("tripoly_from_lambda_series: series degree exceeds target");
    TriPoly out = TriPoly::zero(degree);
    for (size_t k = 0; k < c1d.size(); ++k) {
        if (c1d[k] == 0.0) continue;
        TriPoly term = TriPoly::zero(static_cast<int>(k));
        MultiIndex3 mu{0, 0, 0};
        mu[static_cast<size_t>(vertex)] = static_cast<int>(k);
        term.coeff[homog_index(static_cast<int>(k), mu[1], mu[2])] = c1d[k];
        out += term.raised_to(degree);
    }
    return out;
}

double PiecewisePoly::eval_on(int tri, double l1, double l2, double l3) const {
    const auto it = parts.find(tri);
    return it == parts.end() ? 0.0 : it->second.eval(l1, l2, l3);
}

PiecewisePoly poly_divergence(const Triangulation& mesh, const PiecewisePoly& vx,
                              const PiecewisePoly& vy) {
    if (vx.degree != vy.degree)
        throw std::invalid_argument("poly_divergence: mismatched component degrees");
    PiecewisePoly out;
    out.degree = vx.degree == 0 ? 0 : vx.degree - 1;
    std::map<int, TriPoly> parts;
    for (const auto& [t, p] : vx.parts) {
        const auto& f = mesh.frames[static_cast<size_t>(t)];
        parts.emplace(t, p.directional_derivative(f, {1.0, 0.0}));
    }
    for (const auto& [t, p] : vy.parts) {
        const auto& f = mesh.frames[static_cast<size_t>(t)];
        TriPoly d = p.directional_derivative(f, {0.0, 1.0});
        auto it = parts.find(t);
        if (it == parts.end())
            parts.emplace(t, std::move(d));
        else
            it->second += d;
    }
    out.parts = std::move(parts);
    return out;
}

PiecewisePoly poly_directional_derivative(const Triangulation& mesh, const PiecewisePoly& v,
                                          const Vec2& dir) {
    PiecewisePoly out;
    out.degree = v.degree == 0 ? 0 : v.degree - 1;
    for (const auto& [t, p] : v.parts)
        out.parts.emplace(t, p.directional_derivative(mesh.frames[static_cast<size_t>(t)], dir));
    return out;
}

std::vector<std::array<double, 3>> lattice_nodes_bary(int degree) {
    std::vector<std::array<double, 3>> nodes;
    if (degree == 0) {
        nodes.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
        return nodes;
    }
    const auto& idx = homog_multiindices(degree);
    nodes.reserve(idx.size());
    for (const auto& mu : idx)
        nodes.push_back({static_cast<double>(mu[0]) / degree, static_cast<double>(mu[1]) / degree,
                         static_cast<double>(mu[2]) / degree});
    return nodes;
}

namespace {

const Eigen::PartialPivLU<Eigen::MatrixXd>& vandermonde_lu(int degree) {
    static std::mutex mu;
    static std::map<int, Eigen::PartialPivLU<Eigen::MatrixXd>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it == cache.end()) {
        const auto nodes = lattice_nodes_bary(degree);
        const auto& idx = homog_multiindices(degree);
        const int n = homog_count(degree);
        Eigen::MatrixXd V(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                const auto& mu = idx[static_cast<size_t>(c)];
                double val = 1.0;
                for (int i = 0; i < 3; ++i)
                    for (int k = 0; k < mu[static_cast<size_t>(i)]; ++k)
                        val *= nodes[static_cast<size_t>(r)][static_cast<size_t>(i)];
                V(r, c) = val;
            }
        }
        it = cache.emplace(degree, Eigen::PartialPivLU<Eigen::MatrixXd>(V)).first;
    }
    return it->second;
}

}  // namespace

TriPoly tripoly_from_node_values(int degree, const Eigen::VectorXd& values) {
    if (values.size() != homog_count(degree))
        throw std::invalid_argument("tripoly_from_node_values: wrong number of node values");
    TriPoly out;
    out.degree = degree;
    out.coeff = vandermonde_lu(degree).solve(values);
    return out;
}

}  // namespace crlab
