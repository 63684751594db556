#include "symca/lattice.hpp"

#include "symca/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

namespace symca {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

/// Facets of the convex hull of points in convex position, each as a cycle
/// ordered counter-clockwise seen from outside.
std::vector<Face> hull_faces(const std::vector<Vec3>& pts) {
    const std::size_t n = pts.size();
    double scale = 0;
    for (const auto& p : pts)
        scale = std::max(scale, norm(p));
    const double eps = 1e-9 * scale;

    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Face> faces;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                Vec3 normal = cross(sub(pts[j], pts[i]), sub(pts[l], pts[i]));
                double len = norm(normal);
                if (len < eps)
                    continue;
                for (auto& c : normal)
                    c /= len;
                double offset = dot(normal, pts[i]);
                bool above = false, below = false;
                std::vector<std::uint32_t> on;
                for (std::size_t m = 0; m < n; ++m) {
                    double s = dot(normal, pts[m]) - offset;
                    if (s > eps)
                        above = true;
                    else if (s < -eps)
                        below = true;
                    else
                        on.push_back(static_cast<std::uint32_t>(m));
                    if (above && below)
                        break;
                }
                if (above && below)
                    continue;
                if (!seen.insert(on).second)
                    continue;
                if (above)
                    for (auto& c : normal)
                        c = -c;
                Vec3 centroid{0, 0, 0};
                for (auto v : on)
                    for (int d = 0; d < 3; ++d)
                        centroid[d] += pts[v][d] / double(on.size());
                Vec3 u = sub(pts[on[0]], centroid);
                u = {u[0] / norm(u), u[1] / norm(u), u[2] / norm(u)};
                Vec3 w = cross(normal, u);
                std::sort(on.begin(), on.end(), [&](auto a, auto b) {
                    auto ang = [&](std::uint32_t v) {
                        Vec3 r = sub(pts[v], centroid);
                        return std::atan2(dot(r, w), dot(r, u));
                    };
                    return ang(a) < ang(b);
                });
                faces.push_back(Face(on.begin(), on.end()));
            }
    return faces;
}

/// Builds a closed-surface lattice whose adjacency is read off the faces.
Lattice from_faces(std::vector<Face> faces, std::size_t vertices, unsigned valence,
                   Surface surface, std::optional<Schlafli> schlafli) {
    std::vector<std::set<std::uint32_t>> adjacency(vertices);
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto a = f[i], b = f[(i + 1) % f.size()];
            if (a >= vertices || b >= vertices)
                throw Error(ErrorCode::InvalidLattice, "face references a missing vertex");
            if (a == b)
                throw Error(ErrorCode::InvalidLattice, "face repeats a vertex consecutively");
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
    LatticeParts parts;
    parts.valence = valence;
    parts.surface = surface;
    parts.schlafli = schlafli;
    parts.faces = std::move(faces);
    for (auto& s : adjacency)
        parts.neighbors.emplace_back(s.begin(), s.end());
    return Lattice(std::move(parts));
}

std::vector<Vec3> icosahedron_points() {
    std::vector<Vec3> pts;
    for (double a : {-1.0, 1.0})
        for (double b : {-kPhi, kPhi}) {
            pts.push_back({0, a, b});
            pts.push_back({a, b, 0});
            pts.push_back({b, 0, a});
        }
    return pts;
}

std::vector<Vec3> platonic_points(Schlafli s) {
    std::vector<Vec3> pts;
    if (s == Schlafli{3, 3}) {
        pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    } else if (s == Schlafli{4, 3}) {
        for (double x : {-1.0, 1.0})
            for (double y : {-1.0, 1.0})
                for (double z : {-1.0, 1.0})
                    pts.push_back({x, y, z});
    } else if (s == Schlafli{3, 4}) {
        for (double a : {-1.0, 1.0}) {
            pts.push_back({a, 0, 0});
            pts.push_back({0, a, 0});
            pts.push_back({0, 0, a});
        }
    } else if (s == Schlafli{5, 3}) {
        for (double x : {-1.0, 1.0})
            for (double y : {-1.0, 1.0})
                for (double z : {-1.0, 1.0})
                    pts.push_back({x, y, z});
        for (double a : {-1.0, 1.0})
            for (double b : {-1.0, 1.0}) {
                pts.push_back({0, a / kPhi, b * kPhi});
                pts.push_back({a / kPhi, b * kPhi, 0});
                pts.push_back({a * kPhi, 0, b / kPhi});
            }
    } else if (s == Schlafli{3, 5}) {
        pts = icosahedron_points();
    } else {
        throw Error(ErrorCode::Domain, "no Platonic solid " + to_string(s) +
                                           "; admissible symbols are {3,3}, {4,3}, {5,3}, {3,4}, {3,5}");
    }
    return pts;
}

} // namespace

Lattice build_platonic(Schlafli schlafli) {
    auto pts = platonic_points(schlafli);
    auto faces = hull_faces(pts);
    return from_faces(std::move(faces), pts.size(), schlafli.k, Surface::Sphere, schlafli);
}

FullereneCounts fullerene_counts(long hexagons, long chi) {
    if (hexagons < 0)
        throw Error(ErrorCode::Domain, "hexagon count must be non-negative");
    if (chi < 0)
        throw Error(ErrorCode::Domain, "chi = " + std::to_string(chi) +
                                           " would need a negative number of pentagons");
    if (chi > 2)
        throw Error(ErrorCode::Domain, "no closed surface has chi > 2");
    return {6 * chi, 2 * hexagons + 10 * chi, 3 * hexagons + 15 * chi};
}

Lattice build_fullerene_c60() {
    // Truncated icosahedron: cut every icosahedron edge at its thirds.
    auto ico = icosahedron_points();
    double edge = 2.0;
    std::vector<Vec3> pts;
    for (std::size_t i = 0; i < ico.size(); ++i)
        for (std::size_t j = i + 1; j < ico.size(); ++j) {
            if (std::abs(norm(sub(ico[i], ico[j])) - edge) > 1e-9)
                continue;
            for (double t : {1.0 / 3.0, 2.0 / 3.0}) {
                Vec3 p;
                for (int d = 0; d < 3; ++d)
                    p[d] = ico[i][d] + t * (ico[j][d] - ico[i][d]);
                pts.push_back(p);
            }
        }
    return build_fullerene(hull_faces(pts));
}

Lattice build_fullerene(const std::vector<Face>& faces) {
    if (faces.empty())
        throw Error(ErrorCode::InvalidLattice, "face list is empty");
    long pentagons = 0, hexagons = 0;
    std::uint32_t max_vertex = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& f = faces[i];
        if (f.size() == 5)
            ++pentagons;
        else if (f.size() == 6)
            ++hexagons;
        else
            throw Error(ErrorCode::InvalidLattice, "face size: face " + std::to_string(i) + " has " +
                                                       std::to_string(f.size()) +
                                                       " vertices; fullerene faces must have 5 or 6");
        for (auto v : f)
            max_vertex = std::max(max_vertex, v);
    }
    const std::size_t vertices = std::size_t{max_vertex} + 1;

    std::map<std::pair<std::uint32_t, std::uint32_t>, int> usage;
    std::vector<std::set<std::uint32_t>> adjacency(vertices);
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto a = f[i], b = f[(i + 1) % f.size()];
            ++usage[{std::min(a, b), std::max(a, b)}];
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
    for (const auto& [e, count] : usage)
        if (count != 2)
            throw Error(ErrorCode::InvalidLattice, "edge balance: edge " + std::to_string(e.first) +
                                                       "-" + std::to_string(e.second) + " borders " +
                                                       std::to_string(count) + " faces");
    for (std::size_t v = 0; v < vertices; ++v)
        if (adjacency[v].size() != 3)
            throw Error(ErrorCode::InvalidLattice, "regularity: vertex " + std::to_string(v) +
                                                       " has degree " +
                                                       std::to_string(adjacency[v].size()) +
                                                       ", expected 3");

    long edges = static_cast<long>(usage.size());
    long chi = static_cast<long>(vertices) - edges + static_cast<long>(faces.size());
    if (chi < 0 || chi > 2)
        throw Error(ErrorCode::InvalidLattice, "counts: chi = " + std::to_string(chi) +
                                                   " admits no fullerene");
    auto expected = fullerene_counts(hexagons, chi);
    FullereneCounts actual{pentagons, static_cast<long>(vertices), edges};
    if (!(actual == expected))
        throw Error(ErrorCode::InvalidLattice,
                    "counts: (f5, V, E) = (" + std::to_string(pentagons) + ", " +
                        std::to_string(vertices) + ", " + std::to_string(edges) +
                        ") but fullerene_counts gives (" + std::to_string(expected.pentagons) +
                        ", " + std::to_string(expected.vertices) + ", " +
                        std::to_string(expected.edges) + ")");

    Surface surface = chi == 2   ? Surface::Sphere
                      : chi == 1 ? Surface::Projective
                      : faces_orientable(faces) ? Surface::Torus
                                                : Surface::Klein;
    return from_faces(faces, vertices, 3, surface, std::nullopt);
}

} // namespace symca
