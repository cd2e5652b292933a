#include "crlab/basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "crlab/jacobi.hpp"

namespace crlab {

LagrangeNodeSet lagrange_nodes(const Triangulation& mesh, int p) {
    if (p < 0) throw std::invalid_argument("lagrange_nodes: p must be >= 0");
    LagrangeNodeSet set;
    set.p = p;
    const int nt = mesh.num_triangles();
    set.tri_nodes.assign(static_cast<size_t>(nt), {});

    if (p == 0) {
        for (int t = 0; t < nt; ++t) {
            const auto& f = mesh.frames[static_cast<size_t>(t)];
            LagrangeNode node;
            node.pos = f.point(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
            node.occ.push_back({t, 0});
            set.tri_nodes[static_cast<size_t>(t)].push_back(set.count());
            set.nodes.push_back(std::move(node));
        }
        return set;
    }

    double h_max = 0.0;
    for (const auto& f : mesh.frames) h_max = std::max(h_max, f.diameter);
    const double tol = 1e-9 * h_max;
    const double cell = 4.0 * tol;
    std::map<std::pair<long long, long long>, std::vector<int>> grid;
    auto find_or_add = [&](const Vec2& pos) {
        const long long cx = static_cast<long long>(std::floor(pos.x / cell));
        const long long cy = static_cast<long long>(std::floor(pos.y / cell));
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                const auto it = grid.find({cx + dx, cy + dy});
                if (it == grid.end()) continue;
                for (int id : it->second)
                    if (norm(set.nodes[static_cast<size_t>(id)].pos - pos) <= tol) return id;
            }
        grid[{cx, cy}].push_back(set.count());
        LagrangeNode node;
        node.pos = pos;
        set.nodes.push_back(std::move(node));
        return set.count() - 1;
    };

    const auto& idx = homog_multiindices(p);
    for (int t = 0; t < nt; ++t) {
        const auto& f = mesh.frames[static_cast<size_t>(t)];
        set.tri_nodes[static_cast<size_t>(t)].resize(idx.size());
        for (size_t k = 0; k < idx.size(); ++k) {
            const auto& mu = idx[k];
            const Vec2 pos = f.point(static_cast<double>(mu[0]) / p,
                                     static_cast<double>(mu[1]) / p,
                                     static_cast<double>(mu[2]) / p);
            const int id = find_or_add(pos);
            LagrangeNode& node = set.nodes[static_cast<size_t>(id)];
            node.occ.push_back({t, static_cast<int>(k)});
            set.tri_nodes[static_cast<size_t>(t)][k] = id;
            for (int i = 0; i < 3; ++i) {
                if (mu[static_cast<size_t>(i)] == p) {
                    node.is_mesh_vertex = true;
                    node.mesh_vertex = mesh.triangles[static_cast<size_t>(t)][static_cast<size_t>(i)];
                    if (mesh.boundary_vertex[static_cast<size_t>(node.mesh_vertex)])
                        node.on_boundary = true;
                }
                if (mu[static_cast<size_t>(i)] == 0) {
                    const int e = mesh.tri_edges[static_cast<size_t>(t)][static_cast<size_t>(i)];
                    if (mesh.boundary_edge[static_cast<size_t>(e)]) node.on_boundary = true;
                }
            }
        }
    }
    return set;
}

PiecewisePoly lagrange_basis(const Triangulation& mesh, const LagrangeNodeSet& nodes,
                             int node_id) {
    (void)mesh;
    if (node_id < 0 || node_id >= nodes.count())
        throw std::invalid_argument("lagrange_basis: unknown node");
    const int p = nodes.p;
    PiecewisePoly out;
    out.degree = p;
    for (const auto& [t, lattice] : nodes.nodes[static_cast<size_t>(node_id)].occ) {
        Eigen::VectorXd values = Eigen::VectorXd::Zero(homog_count(p));
        values[lattice] = 1.0;
        out.parts.emplace(t, tripoly_from_node_values(p, values));
    }
    return out;
}

PiecewisePoly cr_triangle_bubble(const Triangulation& mesh, int tri, int p) {
    if (p < 2 || p % 2 != 0)
        throw std::invalid_argument("cr_triangle_bubble: p must be even and >= 2");
    if (tri < 0 || tri >= mesh.num_triangles())
        throw std::invalid_argument("cr_triangle_bubble: bad triangle index");
    const auto series = jacobi_shifted_coeffs(p, 0.0, 0.0);
    TriPoly sum = TriPoly::constant(p, -0.5);
    for (int i = 0; i < 3; ++i) sum += tripoly_from_lambda_series(i, series, p) * 0.5;
    PiecewisePoly out;
    out.degree = p;
    out.parts.emplace(tri, std::move(sum));
    return out;
}

PiecewisePoly cr_edge_bubble(const Triangulation& mesh, int edge, int p) {
    if (p < 1 || p % 2 != 1)
        throw std::invalid_argument("cr_edge_bubble: p must be odd and >= 1");
    if (edge < 0 || edge >= mesh.num_edges())
        throw std::invalid_argument("cr_edge_bubble: bad edge index");
    const auto series = jacobi_shifted_coeffs(p, 0.0, 0.0);
    PiecewisePoly out;
    out.degree = p;
    for (int t : mesh.edges[static_cast<size_t>(edge)].tri) {
        if (t < 0) continue;
        int opp = -1;
        for (int i = 0; i < 3; ++i)
            if (mesh.tri_edges[static_cast<size_t>(t)][static_cast<size_t>(i)] == edge) opp = i;
        out.parts.emplace(t, tripoly_from_lambda_series(opp, series, p));
    }
    return out;
}

CRBasis cr_basis(const Triangulation& mesh, int p) {
    if (p < 1) throw std::invalid_argument("cr_basis: p must be >= 1");
    CRBasis basis;
    basis.p = p;
    basis.nodes = lagrange_nodes(mesh, p);
    const bool odd = (p % 2 == 1);
    for (int id = 0; id < basis.nodes.count(); ++id) {
        const auto& node = basis.nodes.nodes[static_cast<size_t>(id)];
        if (node.on_boundary) continue;
        if (odd && node.is_mesh_vertex) continue;
        basis.entries.push_back({CRBasisEntry::Kind::LagrangeNode, id,
                                 lagrange_basis(mesh, basis.nodes, id)});
    }
    if (odd) {
        for (int e = 0; e < mesh.num_edges(); ++e)
            if (!mesh.boundary_edge[static_cast<size_t>(e)])
                basis.entries.push_back({CRBasisEntry::Kind::EdgeBubble, e,
                                         cr_edge_bubble(mesh, e, p)});
    } else {
        for (int t = 0; t < mesh.num_triangles(); ++t)
            basis.entries.push_back({CRBasisEntry::Kind::TriangleBubble, t,
                                     cr_triangle_bubble(mesh, t, p)});
    }
    return basis;
}

SpaceKind space_from_string(const std::string& s) {
    if (s == "cr") return SpaceKind::CR;
    if (s == "conforming") return SpaceKind::Conforming;
    throw std::invalid_argument("unknown space: " + s);
}

std::string to_string(SpaceKind s) {
    return s == SpaceKind::CR ? "cr" : "conforming";
}

CRBasis scalar_velocity_basis(const Triangulation& mesh, int p, SpaceKind space) {
    if (space == SpaceKind::CR) return cr_basis(mesh, p);
    CRBasis basis;
    basis.p = p;
    basis.nodes = lagrange_nodes(mesh, p);
    for (int id = 0; id < basis.nodes.count(); ++id) {
        if (basis.nodes.nodes[static_cast<size_t>(id)].on_boundary) continue;
        basis.entries.push_back({CRBasisEntry::Kind::LagrangeNode, id,
                                 lagrange_basis(mesh, basis.nodes, id)});
    }
    return basis;
}

std::vector<double> jump_moment(const Triangulation& mesh, int edge, const PiecewisePoly& v,
                                int q_degree) {
    if (edge < 0 || edge >= mesh.num_edges())
        throw std::invalid_argument("jump_moment: bad edge index");
    if (q_degree < 0) throw std::invalid_argument("jump_moment: q_degree must be >= 0");
    const Edge& e = mesh.edges[static_cast<size_t>(edge)];
    const Vec2 a = mesh.vertices[static_cast<size_t>(e.v0)];
    const Vec2 b = mesh.vertices[static_cast<size_t>(e.v1)];
    const double half_len = 0.5 * norm(b - a);
    const int n1d = (v.degree + q_degree) / 2 + 1;
    const GaussRule1D rule = gauss_legendre(n1d);
    std::vector<double> moments(static_cast<size_t>(q_degree) + 1, 0.0);
    for (int q = 0; q < n1d; ++q) {
        const double t = rule.points[static_cast<size_t>(q)];
        const Vec2 x = 0.5 * ((1.0 - t) * a + (1.0 + t) * b);
        double jump = 0.0;
        for (int side = 0; side < 2; ++side) {
            const int tri = e.tri[static_cast<size_t>(side)];
            if (tri < 0) continue;
            const auto l = mesh.frames[static_cast<size_t>(tri)].barycentric(x);
            const double val = v.eval_on(tri, l[0], l[1], l[2]);
            jump += (side == 0) ? val : -val;
        }
        const double w = rule.weights[static_cast<size_t>(q)] * half_len;
        for (int j = 0; j <= q_degree; ++j)
            moments[static_cast<size_t>(j)] += w * jump * jacobi_eval(j, 0.0, 0.0, t);
    }
    return moments;
}

}  // namespace crlab
