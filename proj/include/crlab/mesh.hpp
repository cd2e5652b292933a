#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "crlab/barycentric.hpp"
#include "crlab/geometry.hpp"

namespace crlab {

struct MeshError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    int v0 = -1;               // v0 < v1
    int v1 = -1;
    std::array<int, 2> tri{-1, -1};
    bool boundary() const { return tri[1] < 0; }
};

// Regular triangulation of a polygonal domain: counterclockwise triangles,
// full edge adjacency, boundary flags.  Immutable after construction.
struct Triangulation {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<Edge> edges;
    std::vector<std::array<int, 3>> tri_edges;  // edge opposite local vertex i
    std::vector<bool> boundary_vertex;
    std::vector<bool> boundary_edge;
    std::vector<BarycentricFrame> frames;
    std::vector<std::string> warnings;
    bool simply_connected_hint = false;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_triangles() const { return static_cast<int>(triangles.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    bool is_interior_vertex(int v) const { return !boundary_vertex[static_cast<size_t>(v)]; }
    std::vector<int> interior_vertices() const;

    // Local index (0..2) of global vertex v in triangle t; -1 if absent.
    int local_vertex(int t, int v) const;
};

// Builds adjacency, orients triangles counterclockwise (with a warning per
// flip) and validates regularity.  Throws MeshError on invalid input.
Triangulation make_triangulation(std::vector<Vec2> vertices,
                                 std::vector<std::array<int, 3>> triangles,
                                 bool simply_connected = false);

// Native text format: `# comment` lines, `V <count>` followed by `x y` lines,
// `T <count>` followed by `i j k` lines (0-based, whitespace separated).
Triangulation load_mesh(std::istream& in);
Triangulation load_mesh_file(const std::string& path);
void save_mesh(const Triangulation& mesh, std::ostream& out);
std::string save_mesh_string(const Triangulation& mesh);

struct MeshQuality {
    double gamma = 0.0;   // max_K diam(K) / inscribed-ball-diameter(K)
    int d_T = 0;          // triangles with no interior vertex
    double h_max = 0.0;
};

MeshQuality mesh_quality(const Triangulation& mesh);

// Star of triangles around an interior vertex, cyclically ordered
// counterclockwise.  tris[i] and tris[i+1 mod m] share spokes[i]; spokes[i]
// joins the center to rim[i]; tris[i] has rim corners rim[i-1 mod m], rim[i].
// The first spoke is the one with the smallest global edge index.
struct NodalPatch {
    int center = -1;
    std::vector<int> tris;
    std::vector<int> spokes;
    std::vector<int> rim;
    bool is_interior = true;

    int size() const { return static_cast<int>(tris.size()); }
};

NodalPatch nodal_patch(const Triangulation& mesh, int z);

// Sub-triangulation of a patch: local vertex 0 is the center, 1..m the rim in
// cyclic order; local triangle i corresponds to patch.tris[i].
Triangulation patch_submesh(const Triangulation& mesh, const NodalPatch& patch);

enum class CriticalKind { InteriorCrisscross, PatchBoundaryCollinear };

struct CriticalChain {
    std::vector<int> rim_positions;  // consecutive positions into patch.rim
    int flank_before = -1;           // rim position of the non-critical neighbours
    int flank_after = -1;
};

struct CriticalSet {
    bool center_critical = false;
    std::vector<int> rim_critical;          // rim positions, ascending
    std::vector<CriticalChain> chains;
    std::vector<double> rim_angle_defect;   // |angle sum - pi| per rim position
    std::array<double, 2> center_defect{0.0, 0.0};
    std::vector<std::string> flags;

    int sigma() const {
        return static_cast<int>(rim_critical.size()) + (center_critical ? 1 : 0);
    }
};

// Angle-based criticality test with absolute tolerance eps_angle (radians).
CriticalSet detect_critical_points(const Triangulation& mesh, const NodalPatch& patch,
                                   double eps_angle = 1e-9);

// Deterministic mesh generators.
Triangulation generate_crisscross(double side = 1.0);
Triangulation generate_fan(int m, double radius = 1.0);
// One interior vertex whose rim contains an edge-connected run of exactly n
// critical points flanked by non-critical ones.
Triangulation generate_singular_chain(int n, unsigned long long seed = 0);
Triangulation generate_perturbed_grid(int nx, int ny, double amplitude = 0.2,
                                      unsigned long long seed = 0);

// Generator spec strings: "crisscross:1.0", "fan:m=6", "chain:n=2,seed=7",
// "grid:nx=4,ny=4,perturb=0.2,seed=7".
Triangulation generate_mesh(const std::string& spec);

Triangulation transformed(const Triangulation& mesh, double scale, double angle,
                          Vec2 shift);

}  // namespace crlab
