#include "crlab/mesh.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace crlab {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt_coord(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Uniform double in [-1,1) from a seeded engine, portable across platforms.
double unit_sym(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

}  // namespace

std::vector<int> Triangulation::interior_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < num_vertices(); ++v)
        if (!boundary_vertex[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

int Triangulation::local_vertex(int t, int v) const {
    const auto& tri = triangles[static_cast<size_t>(t)];
    for (int i = 0; i < 3; ++i)
        if (tri[static_cast<size_t>(i)] == v) return i;
    return -1;
}

Triangulation make_triangulation(std::vector<Vec2> vertices,
                                 std::vector<std::array<int, 3>> triangles,
                                 bool simply_connected) {
    Triangulation m;
    m.vertices = std::move(vertices);
    m.triangles = std::move(triangles);
    m.simply_connected_hint = simply_connected;
    const int nv = m.num_vertices();
    const int nt = m.num_triangles();
    if (nv < 3 || nt < 1) throw MeshError("mesh must have >= 3 vertices and >= 1 triangle");

    for (int t = 0; t < nt; ++t) {
        auto& tri = m.triangles[static_cast<size_t>(t)];
        for (int k : tri)
            if (k < 0 || k >= nv)
                throw MeshError("triangle " + std::to_string(t) + ": vertex index out of range");
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
            throw MeshError("triangle " + std::to_string(t) + ": repeated vertex");
        const double a2 = cross(m.vertices[static_cast<size_t>(tri[1])] - m.vertices[static_cast<size_t>(tri[0])],
                                m.vertices[static_cast<size_t>(tri[2])] - m.vertices[static_cast<size_t>(tri[0])]);
        if (a2 < 0.0) {
            std::swap(tri[1], tri[2]);
            m.warnings.push_back("triangle " + std::to_string(t) +
                                 ": clockwise orientation, flipped");
        }
    }

    // Duplicate triangles (same vertex set) violate regularity.
    {
        std::set<std::array<int, 3>> seen;
        for (int t = 0; t < nt; ++t) {
            auto s = m.triangles[static_cast<size_t>(t)];
            std::sort(s.begin(), s.end());
            if (!seen.insert(s).second)
                throw MeshError("triangle " + std::to_string(t) +
                                ": duplicate triangle violates regularity");
        }
    }

    // Edges, sorted lexicographically for a deterministic numbering.
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (int t = 0; t < nt; ++t) {
        const auto& tri = m.triangles[static_cast<size_t>(t)];
        for (int i = 0; i < 3; ++i) {
            int a = tri[static_cast<size_t>((i + 1) % 3)];
            int b = tri[static_cast<size_t>((i + 2) % 3)];
            if (a > b) std::swap(a, b);
            edge_tris[{a, b}].push_back(t);
        }
    }
    std::map<std::pair<int, int>, int> edge_index;
    for (const auto& [key, tris] : edge_tris) {
        if (tris.size() > 2)
            throw MeshError("edge (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ") has " +
                            std::to_string(tris.size()) + " adjacent triangles");
        Edge e;
        e.v0 = key.first;
        e.v1 = key.second;
        e.tri[0] = tris[0];
        e.tri[1] = tris.size() > 1 ? tris[1] : -1;
        edge_index[key] = m.num_edges();
        m.edges.push_back(e);
    }
    m.tri_edges.assign(static_cast<size_t>(nt), {-1, -1, -1});
    for (int t = 0; t < nt; ++t) {
        const auto& tri = m.triangles[static_cast<size_t>(t)];
        for (int i = 0; i < 3; ++i) {
            int a = tri[static_cast<size_t>((i + 1) % 3)];
            int b = tri[static_cast<size_t>((i + 2) % 3)];
            if (a > b) std::swap(a, b);
            m.tri_edges[static_cast<size_t>(t)][static_cast<size_t>(i)] = edge_index.at({a, b});
        }
    }

    m.boundary_edge.assign(static_cast<size_t>(m.num_edges()), false);
    m.boundary_vertex.assign(static_cast<size_t>(nv), false);
    for (int e = 0; e < m.num_edges(); ++e) {
        if (m.edges[static_cast<size_t>(e)].boundary()) {
            m.boundary_edge[static_cast<size_t>(e)] = true;
            m.boundary_vertex[static_cast<size_t>(m.edges[static_cast<size_t>(e)].v0)] = true;
            m.boundary_vertex[static_cast<size_t>(m.edges[static_cast<size_t>(e)].v1)] = true;
        }
    }

    // Hanging nodes: a vertex in the relative interior of another edge.
    for (int v = 0; v < nv; ++v) {
        const Vec2 p = m.vertices[static_cast<size_t>(v)];
        for (const Edge& e : m.edges) {
            if (e.v0 == v || e.v1 == v) continue;
            const Vec2 a = m.vertices[static_cast<size_t>(e.v0)];
            const Vec2 b = m.vertices[static_cast<size_t>(e.v1)];
            const double len = norm(b - a);
            const double t = dot(p - a, b - a) / (len * len);
            if (t <= 1e-12 || t >= 1.0 - 1e-12) continue;
            if (std::abs(cross(p - a, b - a)) / len < 1e-12 * len)
                throw MeshError("vertex " + std::to_string(v) +
                                " lies inside edge (" + std::to_string(e.v0) + "," +
                                std::to_string(e.v1) + "): hanging node");
        }
    }

    if (m.simply_connected_hint) {
        const int euler = nv - m.num_edges() + nt;
        if (euler != 1)
            throw MeshError("Euler relation violated: V-E+T = " + std::to_string(euler));
    }

    m.frames.reserve(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) {
        const auto& tri = m.triangles[static_cast<size_t>(t)];
        try {
            m.frames.push_back(barycentric_frame(m.vertices[static_cast<size_t>(tri[0])],
                                                 m.vertices[static_cast<size_t>(tri[1])],
                                                 m.vertices[static_cast<size_t>(tri[2])]));
        } catch (const std::exception& ex) {
            throw MeshError("triangle " + std::to_string(t) + ": " + ex.what());
        }
    }
    return m;
}

namespace {

struct LineReader {
    std::istream& in;
    int lineno = 0;
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            const auto pos = out.find('#');
            if (pos != std::string::npos) out.erase(pos);
            bool blank = true;
            for (char c : out)
                if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
            if (!blank) return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw MeshError("parse error at line " + std::to_string(lineno) + ": " + msg);
    }
};

}  // namespace

Triangulation load_mesh(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw MeshError("parse error: empty input");
    std::istringstream header(line);
    std::string tag;
    int nv = 0;
    if (!(header >> tag >> nv) || tag != "V" || nv < 0) reader.fail("expected 'V <count>'");
    std::vector<Vec2> vertices;
    vertices.reserve(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        if (!reader.next(line)) reader.fail("unexpected end of file in vertex block");
        std::istringstream is(line);
        double x = 0.0, y = 0.0;
        if (!(is >> x >> y)) reader.fail("expected 'x y'");
        vertices.push_back({x, y});
    }
    if (!reader.next(line)) throw MeshError("parse error: missing triangle block");
    std::istringstream theader(line);
    int nt = 0;
    if (!(theader >> tag >> nt) || tag != "T" || nt < 0) reader.fail("expected 'T <count>'");
    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(static_cast<size_t>(nt));
    for (int i = 0; i < nt; ++i) {
        if (!reader.next(line)) reader.fail("unexpected end of file in triangle block");
        std::istringstream is(line);
        std::array<int, 3> tri{};
        if (!(is >> tri[0] >> tri[1] >> tri[2])) reader.fail("expected 'i j k'");
        triangles.push_back(tri);
    }
    return make_triangulation(std::move(vertices), std::move(triangles));
}

Triangulation load_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MeshError("cannot open mesh file: " + path);
    return load_mesh(in);
}

void save_mesh(const Triangulation& mesh, std::ostream& out) {
    out << "V " << mesh.num_vertices() << "\n";
    for (const Vec2& v : mesh.vertices)
        out << fmt_coord(v.x) << " " << fmt_coord(v.y) << "\n";
    out << "T " << mesh.num_triangles() << "\n";
    for (const auto& t : mesh.triangles)
        out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

std::string save_mesh_string(const Triangulation& mesh) {
    std::ostringstream os;
    save_mesh(mesh, os);
    return os.str();
}

MeshQuality mesh_quality(const Triangulation& mesh) {
    MeshQuality q;
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& f = mesh.frames[static_cast<size_t>(t)];
        const double perimeter = f.edge_len[0] + f.edge_len[1] + f.edge_len[2];
        const double inradius = 2.0 * f.area / perimeter;
        q.gamma = std::max(q.gamma, f.diameter / (2.0 * inradius));
        q.h_max = std::max(q.h_max, f.diameter);
        bool touches_interior = false;
        for (int v : mesh.triangles[static_cast<size_t>(t)])
            if (mesh.is_interior_vertex(v)) touches_interior = true;
        if (!touches_interior) ++q.d_T;
    }
    return q;
}

NodalPatch nodal_patch(const Triangulation& mesh, int z) {
    if (z < 0 || z >= mesh.num_vertices()) throw MeshError("nodal_patch: bad vertex index");
    if (mesh.boundary_vertex[static_cast<size_t>(z)])
        throw MeshError("nodal_patch: vertex " + std::to_string(z) + " is on the boundary");

    struct Spoke {
        int edge;
        int other;
        double ang;
    };
    std::vector<Spoke> spokes;
    for (int e = 0; e < mesh.num_edges(); ++e) {
        const Edge& ed = mesh.edges[static_cast<size_t>(e)];
        if (ed.v0 != z && ed.v1 != z) continue;
        const int other = (ed.v0 == z) ? ed.v1 : ed.v0;
        const Vec2 d = mesh.vertices[static_cast<size_t>(other)] - mesh.vertices[static_cast<size_t>(z)];
        spokes.push_back({e, other, std::atan2(d.y, d.x)});
    }
    if (spokes.size() < 3) throw MeshError("nodal_patch: vertex has fewer than 3 spokes");
    // Counterclockwise order starting from the smallest global edge index.
    const double base = std::min_element(spokes.begin(), spokes.end(),
                                         [](const Spoke& a, const Spoke& b) {
                                             return a.edge < b.edge;
                                         })->ang;
    std::sort(spokes.begin(), spokes.end(), [&](const Spoke& a, const Spoke& b) {
        auto key = [&](const Spoke& s) {
            double d = s.ang - base;
            while (d < -1e-15) d += 2.0 * kPi;
            return d;
        };
        return key(a) < key(b);
    });

    NodalPatch patch;
    patch.center = z;
    const int m = static_cast<int>(spokes.size());
    for (const Spoke& s : spokes) {
        patch.spokes.push_back(s.edge);
        patch.rim.push_back(s.other);
    }
    // tris[i] is the triangle adjacent to both spokes[i-1] and spokes[i].
    for (int i = 0; i < m; ++i) {
        const Edge& ea = mesh.edges[static_cast<size_t>(patch.spokes[static_cast<size_t>((i + m - 1) % m)])];
        const Edge& eb = mesh.edges[static_cast<size_t>(patch.spokes[static_cast<size_t>(i)])];
        int found = -1;
        for (int ta : ea.tri)
            for (int tb : eb.tri)
                if (ta >= 0 && ta == tb) found = ta;
        if (found < 0)
            throw MeshError("nodal_patch: patch around vertex " + std::to_string(z) +
                            " is not a closed fan");
        patch.tris.push_back(found);
    }
    return patch;
}

Triangulation patch_submesh(const Triangulation& mesh, const NodalPatch& patch) {
    const int m = patch.size();
    std::vector<Vec2> verts;
    verts.push_back(mesh.vertices[static_cast<size_t>(patch.center)]);
    for (int v : patch.rim) verts.push_back(mesh.vertices[static_cast<size_t>(v)]);
    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < m; ++i)
        tris.push_back({0, 1 + (i + m - 1) % m, 1 + i});
    return make_triangulation(std::move(verts), std::move(tris), true);
}

CriticalSet detect_critical_points(const Triangulation& mesh, const NodalPatch& patch,
                                   double eps_angle) {
    if (eps_angle <= 0.0) throw std::invalid_argument("detect_critical_points: eps_angle must be > 0");
    CriticalSet cs;
    const int m = patch.size();
    const Vec2 zc = mesh.vertices[static_cast<size_t>(patch.center)];

    // Center: four triangles with both pairs of opposite spokes straight.
    if (m == 4) {
        for (int k = 0; k < 2; ++k) {
            const Vec2 a = mesh.vertices[static_cast<size_t>(patch.rim[static_cast<size_t>(k)])] - zc;
            const Vec2 b = mesh.vertices[static_cast<size_t>(patch.rim[static_cast<size_t>(k + 2)])] - zc;
            cs.center_defect[static_cast<size_t>(k)] =
                std::abs(kPi - std::atan2(std::abs(cross(a, b)), dot(a, b)));
        }
        cs.center_critical = cs.center_defect[0] <= eps_angle && cs.center_defect[1] <= eps_angle;
    }

    cs.rim_angle_defect.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int zp = patch.rim[static_cast<size_t>(i)];
        const Vec2 p = mesh.vertices[static_cast<size_t>(zp)];
        double sum = 0.0;
        for (int t : {patch.tris[static_cast<size_t>(i)], patch.tris[static_cast<size_t>((i + 1) % m)]}) {
            const auto& tri = mesh.triangles[static_cast<size_t>(t)];
            std::array<Vec2, 2> others;
            int k = 0;
            for (int v : tri)
                if (v != zp) others[static_cast<size_t>(k++)] = mesh.vertices[static_cast<size_t>(v)];
            sum += vertex_angle(p, others[0], others[1]);
        }
        const double defect = std::abs(sum - kPi);
        cs.rim_angle_defect[static_cast<size_t>(i)] = defect;
        if (defect <= eps_angle) cs.rim_critical.push_back(i);
        if (defect > eps_angle && defect <= 64.0 * eps_angle)
            cs.flags.push_back("rim vertex " + std::to_string(zp) +
                               ": angle defect within 64x tolerance, borderline");
    }
    if (cs.center_critical && !cs.rim_critical.empty())
        cs.flags.push_back("center and rim critical points coexist; outside the two standard cases");

    // Maximal runs of consecutive critical rim positions (cyclic).
    if (!cs.rim_critical.empty() && static_cast<int>(cs.rim_critical.size()) < m) {
        std::vector<bool> crit(static_cast<size_t>(m), false);
        for (int i : cs.rim_critical) crit[static_cast<size_t>(i)] = true;
        for (int start = 0; start < m; ++start) {
            if (!crit[static_cast<size_t>(start)] || crit[static_cast<size_t>((start + m - 1) % m)]) continue;
            CriticalChain chain;
            int i = start;
            while (crit[static_cast<size_t>(i % m)]) {
                chain.rim_positions.push_back(i % m);
                ++i;
            }
            chain.flank_before = (start + m - 1) % m;
            chain.flank_after = i % m;
            cs.chains.push_back(std::move(chain));
        }
    } else if (static_cast<int>(cs.rim_critical.size()) == m) {
        cs.flags.push_back("all rim vertices critical; no chain decomposition exists");
    }
    return cs;
}

Triangulation generate_crisscross(double side) {
    if (!(side > 0.0)) throw std::invalid_argument("crisscross: side must be > 0");
    const double s = side, h = 0.5 * side;
    std::vector<Vec2> v = {{0, 0}, {s, 0}, {s, s}, {0, s}, {h, h}};
    std::vector<std::array<int, 3>> t = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
    return make_triangulation(std::move(v), std::move(t), true);
}

Triangulation generate_fan(int m, double radius) {
    if (m < 3) throw std::invalid_argument("fan: need m >= 3");
    if (!(radius > 0.0)) throw std::invalid_argument("fan: radius must be > 0");
    std::vector<Vec2> v;
    v.push_back({0, 0});
    for (int k = 0; k < m; ++k) {
        const double a = 2.0 * kPi * k / m;
        v.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    std::vector<std::array<int, 3>> t;
    for (int k = 0; k < m; ++k) t.push_back({0, 1 + k, 1 + (k + 1) % m});
    return make_triangulation(std::move(v), std::move(t), true);
}

Triangulation generate_singular_chain(int n, unsigned long long seed) {
    if (n < 1) throw std::invalid_argument("singular-chain: need n >= 1");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    // Center at the origin; n+2 rim points on a straight line below it make
    // the middle n of them critical, then a short arc above closes the fan.
    const double depth = 0.8 + 0.2 * unit_sym(rng);
    std::vector<double> xs(static_cast<size_t>(n) + 2);
    double x = -0.6 * (n + 1);
    for (int i = 0; i < n + 2; ++i) {
        xs[static_cast<size_t>(i)] = x;
        x += 0.9 + 0.35 * unit_sym(rng);
    }
    const double mid = 0.5 * (xs.front() + xs.back());
    for (double& xi : xs) xi -= mid;

    std::vector<Vec2> v;
    v.push_back({0, 0});
    // Walking the line left to right below the center is counterclockwise
    // around it; an arc through the upper half plane closes the fan.
    for (int i = 0; i <= n + 1; ++i) v.push_back({xs[static_cast<size_t>(i)], -depth});
    const double span = xs.back() - xs.front();
    const double r = 0.75 * span;
    const int arc = 3;
    const Vec2 first = v[1], last = v.back();
    const double a0 = std::atan2(first.y, first.x) + 2.0 * kPi;
    const double a1 = std::atan2(last.y, last.x);
    for (int k = 1; k <= arc; ++k) {
        double a = a1 + (a0 - a1) * k / (arc + 1);
        a += 0.03 * unit_sym(rng);
        v.push_back({r * std::cos(a), r * std::sin(a)});
    }
    const int m = static_cast<int>(v.size()) - 1;
    std::vector<std::array<int, 3>> t;
    for (int k = 0; k < m; ++k) t.push_back({0, 1 + k, 1 + (k + 1) % m});
    return make_triangulation(std::move(v), std::move(t), true);
}

Triangulation generate_perturbed_grid(int nx, int ny, double amplitude,
                                      unsigned long long seed) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("grid: need nx, ny >= 2");
    if (amplitude < 0.0 || amplitude > 0.3)
        throw std::invalid_argument("grid: perturbation amplitude must be in [0, 0.3]");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x853c49e6748fea9bULL);
    const double hx = 1.0 / nx, hy = 1.0 / ny;
    std::vector<Vec2> v;
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i) {
            Vec2 p{i * hx, j * hy};
            if (i > 0 && i < nx && j > 0 && j < ny) {
                p.x += amplitude * hx * unit_sym(rng);
                p.y += amplitude * hy * unit_sym(rng);
            }
            v.push_back(p);
        }
    auto id = [&](int i, int j) { return j * (nx + 1) + i; };
    auto interior = [&](int i, int j) { return i > 0 && i < nx && j > 0 && j < ny; };
    std::vector<std::array<int, 3>> t;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            // Split along the diagonal with an interior endpoint so every
            // triangle touches an interior vertex.
            const bool main_ok = interior(i, j) || interior(i + 1, j + 1);
            if (main_ok) {
                t.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
                t.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
            } else {
                t.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
                t.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
            }
        }
    return make_triangulation(std::move(v), std::move(t), true);
}

namespace {

std::map<std::string, double> parse_kv(const std::string& s) {
    std::map<std::string, double> kv;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            kv["_"] = std::stod(item);
        } else {
            kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        }
    }
    return kv;
}

}  // namespace

Triangulation generate_mesh(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    std::map<std::string, double> kv;
    if (colon != std::string::npos && colon + 1 < spec.size())
        kv = parse_kv(spec.substr(colon + 1));
    auto get = [&](const std::string& key, double dflt) {
        const auto it = kv.find(key);
        return it != kv.end() ? it->second : dflt;
    };
    if (kind == "crisscross") {
        const double side = kv.count("_") ? kv["_"] : get("side", 1.0);
        return generate_crisscross(side);
    }
    if (kind == "fan") {
        const double m = kv.count("_") ? kv["_"] : get("m", 6.0);
        return generate_fan(static_cast<int>(m), get("radius", 1.0));
    }
    if (kind == "chain" || kind == "singular-chain") {
        const double n = kv.count("_") ? kv["_"] : get("n", 1.0);
        return generate_singular_chain(static_cast<int>(n),
                                       static_cast<unsigned long long>(get("seed", 0.0)));
    }
    if (kind == "grid" || kind == "perturbed-grid") {
        return generate_perturbed_grid(static_cast<int>(get("nx", 4.0)),
                                       static_cast<int>(get("ny", 4.0)), get("perturb", 0.2),
                                       static_cast<unsigned long long>(get("seed", 0.0)));
    }
    throw std::invalid_argument("unknown mesh generator: " + kind);
}

Triangulation transformed(const Triangulation& mesh, double scale, double angle, Vec2 shift) {
    if (!(scale > 0.0)) throw std::invalid_argument("transformed: scale must be > 0");
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Vec2> v;
    v.reserve(mesh.vertices.size());
    for (const Vec2& p : mesh.vertices)
        v.push_back({scale * (c * p.x - s * p.y) + shift.x, scale * (s * p.x + c * p.y) + shift.y});
    return make_triangulation(std::move(v), mesh.triangles, mesh.simply_connected_hint);
}

}  // namespace crlab
