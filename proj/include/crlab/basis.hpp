#pragma once

#include <string>
#include <vector>

#include "crlab/mesh.hpp"
#include "crlab/poly.hpp"

namespace crlab {

// Global Lagrange node of order p: deduplicated across triangles.
struct LagrangeNode {
    Vec2 pos;
    bool on_boundary = false;
    bool is_mesh_vertex = false;
    int mesh_vertex = -1;
    std::vector<std::pair<int, int>> occ;  // (triangle, lattice index)
};

struct LagrangeNodeSet {
    int p = 1;
    std::vector<LagrangeNode> nodes;
    std::vector<std::vector<int>> tri_nodes;  // per triangle: lattice index -> node id

    int count() const { return static_cast<int>(nodes.size()); }
};

// Union of the mapped lattice nodes of all triangles; p = 0 gives the
// barycenters (no deduplication needed there).
LagrangeNodeSet lagrange_nodes(const Triangulation& mesh, int p);

// Continuous nodal basis function: Kronecker at the nodes, supported on the
// triangles containing the node.
PiecewisePoly lagrange_basis(const Triangulation& mesh, const LagrangeNodeSet& nodes,
                             int node_id);

// Nonconforming bubbles.  The triangle bubble (p even) lives on one triangle,
// the edge bubble (p odd) on the one or two triangles of the edge patch with
// trace 1 on the edge itself.
PiecewisePoly cr_triangle_bubble(const Triangulation& mesh, int tri, int p);
PiecewisePoly cr_edge_bubble(const Triangulation& mesh, int edge, int p);

struct CRBasisEntry {
    enum class Kind { LagrangeNode, TriangleBubble, EdgeBubble };
    Kind kind;
    int index;  // node / triangle / edge id depending on kind
    PiecewisePoly poly;
};

struct CRBasis {
    int p = 1;
    LagrangeNodeSet nodes;
    std::vector<CRBasisEntry> entries;

    int dim() const { return static_cast<int>(entries.size()); }
};

// Basis of the zero-boundary Crouzeix-Raviart space: for odd p the interior
// non-vertex Lagrange functions plus edge bubbles on interior edges, for even
// p all interior Lagrange functions plus one bubble per triangle.
CRBasis cr_basis(const Triangulation& mesh, int p);

enum class SpaceKind { CR, Conforming };
SpaceKind space_from_string(const std::string& s);
std::string to_string(SpaceKind s);

// Scalar velocity space with zero boundary conditions in the respective
// sense; Conforming keeps only the interior Lagrange functions.
CRBasis scalar_velocity_basis(const Triangulation& mesh, int p, SpaceKind space);

// Moments int_E [v] q_j for Legendre polynomials q_j, j = 0..q_degree, on the
// edge parameterized from its lower to its higher vertex index.  For boundary
// edges the jump is the trace itself.
std::vector<double> jump_moment(const Triangulation& mesh, int edge, const PiecewisePoly& v,
                                int q_degree);

}  // namespace crlab
