#include "symca/lattice.hpp"

#include "symca/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace symca {

namespace {

struct SiteRef {
    int dx;
    int dy;
    unsigned site;
};

/// A doubly periodic tiling given on a unit cell, in axial or square
/// coordinates.
struct PeriodicKind {
    unsigned sites;
    std::vector<std::vector<SiteRef>> neighbors; // per site
    std::vector<std::vector<SiteRef>> faces;     // per unit cell
    /// x-coordinate of the mirror image within the same row, for Klein wrap.
    std::function<long(long x, long y, unsigned site, long width)> mirror;
    std::function<Point2(long x, long y, unsigned site)> position;
};

const double kSqrt3 = std::sqrt(3.0);

PeriodicKind square_kind() {
    return {1,
            {{{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}}},
            {{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}},
            [](long x, long, unsigned, long w) { return w - 1 - x; },
            [](long x, long y, unsigned) { return Point2{double(x), double(y)}; }};
}

PeriodicKind moore_kind() {
    auto k = square_kind();
    k.neighbors = {{{1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {-1, 1, 0},
                    {-1, 0, 0}, {-1, -1, 0}, {0, -1, 0}, {1, -1, 0}}};
    k.faces.clear();
    return k;
}

// Axial coordinates: position = x*(1,0) + y*(1/2, sqrt3/2). A vertical
// mirror maps (x, y) to (-x - y, y).
PeriodicKind triangular_kind() {
    return {1,
            {{{1, 0, 0}, {0, 1, 0}, {-1, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {1, -1, 0}}},
            {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}, {1, 1, 0}, {0, 1, 0}}},
            [](long x, long y, unsigned, long w) { return w - 1 - x - y; },
            [](long x, long y, unsigned) {
                return Point2{double(x) + 0.5 * double(y), 0.5 * kSqrt3 * double(y)};
            }};
}

// Honeycomb on the same axial lattice: site 0 (A) at the lattice point,
// site 1 (B) offset by (a+b)/3. The mirror shifts B sites one column.
PeriodicKind hexagonal_kind() {
    return {2,
            {{{0, 0, 1}, {-1, 0, 1}, {0, -1, 1}}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}},
            {{{0, 0, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {0, 1, 1}, {0, 1, 0}}},
            [](long x, long y, unsigned site, long w) { return w - 1 - x - y - long(site); },
            [](long x, long y, unsigned site) {
                double px = double(x) + 0.5 * double(y), py = 0.5 * kSqrt3 * double(y);
                if (site == 1) {
                    px += 0.5;
                    py += kSqrt3 / 6.0;
                }
                return Point2{px, py};
            }};
}

long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

struct Wrap {
    const PeriodicKind& kind;
    long w;
    long h;
    bool klein;

    std::uint32_t index(long x, long y, unsigned site) const {
        // Reduce y with the glide (x, y) -> (mirror(x, y), y + h).
        while (y >= h) {
            y -= h;
            if (klein)
                x = kind.mirror(x, y, site, w);
        }
        while (y < 0) {
            if (klein)
                x = kind.mirror(x, y, site, w);
            y += h;
        }
        x = floor_mod(x, w);
        return static_cast<std::uint32_t>((y * w + x) * kind.sites + site);
    }
};

void check_surface_and_dims(Surface surface, GridShape dims) {
    if (surface != Surface::Torus && surface != Surface::Klein)
        throw Error(ErrorCode::Domain, "periodic lattices live on the torus or the Klein bottle");
    if (dims.width < 3 || dims.height < 3)
        throw Error(ErrorCode::Domain, "dims must be at least 3x3, got " +
                                           std::to_string(dims.width) + "x" +
                                           std::to_string(dims.height));
}

Lattice build_periodic(const PeriodicKind& kind, unsigned valence, std::optional<Schlafli> schlafli,
                       Surface surface, GridShape dims) {
    check_surface_and_dims(surface, dims);
    Wrap wrap{kind, long(dims.width), long(dims.height), surface == Surface::Klein};
    const std::size_t n = std::size_t{dims.width} * dims.height * kind.sites;

    LatticeParts parts;
    parts.valence = valence;
    parts.surface = surface;
    parts.schlafli = schlafli;
    parts.grid = GridShape{dims.width * kind.sites, dims.height};
    parts.neighbors.resize(n);
    parts.embedding_kind = EmbeddingKind::Euclidean;
    parts.embedding.resize(n);

    for (long y = 0; y < wrap.h; ++y)
        for (long x = 0; x < wrap.w; ++x)
            for (unsigned s = 0; s < kind.sites; ++s) {
                auto cell = wrap.index(x, y, s);
                parts.embedding[cell] = kind.position(x, y, s);
                auto& list = parts.neighbors[cell];
                for (const auto& r : kind.neighbors[s]) {
                    auto v = wrap.index(x + r.dx, y + r.dy, r.site);
                    if (v == cell || std::find(list.begin(), list.end(), v) != list.end())
                        throw Error(ErrorCode::Domain,
                                    "dims " + std::to_string(dims.width) + "x" +
                                        std::to_string(dims.height) +
                                        " are too small: neighbors collapse on the " +
                                        std::string(to_string(surface)));
                    list.push_back(v);
                }
                if (s == 0)
                    for (const auto& face : kind.faces) {
                        Face f;
                        for (const auto& r : face)
                            f.push_back(wrap.index(x + r.dx, y + r.dy, r.site));
                        parts.faces.push_back(std::move(f));
                    }
            }
    return Lattice(std::move(parts));
}

} // namespace

Lattice build_euclidean(Schlafli schlafli, Surface surface, GridShape dims) {
    if (schlafli == Schlafli{4, 4})
        return build_periodic(square_kind(), 4, schlafli, surface, dims);
    if (schlafli == Schlafli{3, 6})
        return build_periodic(triangular_kind(), 6, schlafli, surface, dims);
    if (schlafli == Schlafli{6, 3})
        return build_periodic(hexagonal_kind(), 3, schlafli, surface, dims);
    throw Error(ErrorCode::Domain, "no regular Euclidean lattice " + to_string(schlafli) +
                                       "; admissible symbols are {6,3}, {4,4}, {3,6}");
}

Lattice build_moore(Surface surface, GridShape dims) {
    return build_periodic(moore_kind(), 8, std::nullopt, surface, dims);
}

} // namespace symca
