#include "symca/lattice.hpp"

#include "symca/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <unordered_map>

namespace symca {

std::optional<FaceCounts> solve_regular_counts(unsigned p, unsigned k, long chi) {
    // E (2p + 2k - pk) = chi * pk, V = 2E/k, F = 2E/p.
    long denom = 2L * p + 2L * k - long(p) * long(k);
    if (denom == 0 || chi == 0)
        return std::nullopt;
    long num = chi * long(p) * long(k);
    if (num % denom != 0)
        return std::nullopt;
    long e = num / denom;
    if (e <= 0 || (2 * e) % k != 0 || (2 * e) % p != 0)
        return std::nullopt;
    return FaceCounts{2 * e / long(k), e, 2 * e / long(p)};
}

TilingClass classify_tiling(unsigned p, unsigned k) {
    if (p < 3 || k < 3)
        throw Error(ErrorCode::Domain, "Schlafli symbols need p, k >= 3");
    // sign(1/p + 1/k - 1/2) = sign(2k + 2p - pk)
    long s = 2L * k + 2L * p - long(p) * long(k);
    if (s == 0)
        return {TilingKind::Euclidean};
    if (s < 0)
        return {TilingKind::Hyperbolic};
    auto counts = solve_regular_counts(p, k, 2);
    if (!counts)
        throw Error(ErrorCode::Domain, "spherical symbol without an integral solution");
    return {TilingKind::Spherical, counts->vertices, counts->edges, counts->faces};
}

namespace {

using Complex = std::complex<double>;

/// Isometry of the disk taking `center` to 0, and its inverse.
Complex to_origin(Complex z, Complex center) {
    return (z - center) / (1.0 - std::conj(center) * z);
}
Complex from_origin(Complex z, Complex center) {
    return (z + center) / (1.0 + std::conj(center) * z);
}

/// tanh(d/2) of the hyperbolic distance d between two disk points.
double pseudo_distance(Complex a, Complex b) {
    return std::abs(to_origin(a, b));
}

class PointIndex {
public:
    explicit PointIndex(double match_radius) : match_(match_radius) {}

    std::optional<std::uint32_t> find(Complex z, const std::vector<Complex>& pts) const {
        auto [gx, gy] = cell(z);
        for (long dx = -1; dx <= 1; ++dx)
            for (long dy = -1; dy <= 1; ++dy) {
                auto it = buckets_.find(key(gx + dx, gy + dy));
                if (it == buckets_.end())
                    continue;
                for (auto id : it->second)
                    if (pseudo_distance(z, pts[id]) < match_)
                        return id;
            }
        return std::nullopt;
    }

    void insert(Complex z, std::uint32_t id) {
        auto [gx, gy] = cell(z);
        buckets_[key(gx, gy)].push_back(id);
    }

private:
    static constexpr double kCell = 1e-7;

    static std::pair<long, long> cell(Complex z) {
        return {std::lround(std::floor(z.real() / kCell)), std::lround(std::floor(z.imag() / kCell))};
    }
    static std::uint64_t key(long x, long y) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
               static_cast<std::uint32_t>(y);
    }

    double match_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

} // namespace

Lattice build_hyperbolic_patch(unsigned p, unsigned k, unsigned layers,
                               const HyperbolicOptions& options) {
    if (p < 3 || k < 3)
        throw Error(ErrorCode::Domain, "Schlafli symbols need p, k >= 3");
    if (classify_tiling(p, k).kind != TilingKind::Hyperbolic)
        throw Error(ErrorCode::Domain, to_string(Schlafli{p, k}) +
                                           " is not hyperbolic; use build_platonic or build_euclidean");
    if (layers < 1)
        throw Error(ErrorCode::Domain, "a patch needs at least one layer");

    using std::numbers::pi;
    // Edge length l: cosh(l/2) = cos(pi/p) / sin(pi/k); neighbors of the
    // origin sit at Euclidean radius tanh(l/2).
    const double half_edge = std::acosh(std::cos(pi / p) / std::sin(pi / k));
    const double radius = std::tanh(half_edge);
    const double match = std::tanh(half_edge / 2.0);

    std::vector<Complex> pos{Complex(0, 0)};
    std::vector<std::uint32_t> reference{0}; // a known neighbor, for orientation
    std::vector<unsigned> depth{0};
    std::vector<std::vector<std::uint32_t>> adjacency(1);
    PointIndex index(match);
    index.insert(pos[0], 0);

    auto star = [&](std::uint32_t v) {
        std::vector<Complex> out;
        Complex dir = v == 0 ? Complex(radius, 0) : to_origin(pos[reference[v]], pos[v]);
        dir *= radius / std::abs(dir);
        for (unsigned j = 0; j < k; ++j)
            out.push_back(from_origin(dir * std::polar(1.0, 2.0 * pi * j / k), pos[v]));
        return out;
    };
    auto link = [&](std::uint32_t a, std::uint32_t b) {
        if (std::find(adjacency[a].begin(), adjacency[a].end(), b) == adjacency[a].end()) {
            adjacency[a].push_back(b);
            adjacency[b].push_back(a);
        }
    };

    for (std::uint32_t v = 0; v < pos.size(); ++v) {
        bool grow = depth[v] < layers;
        for (Complex z : star(v)) {
            auto hit = index.find(z, pos);
            if (hit) {
                if (*hit != v)
                    link(v, *hit);
                continue;
            }
            if (!grow)
                continue;
            if (1.0 - std::abs(z) < 1e-9)
                throw Error(ErrorCode::Unsupported, "patch too deep for double precision coordinates");
            if (pos.size() >= options.max_cells)
                throw Error(ErrorCode::CapExceeded, "hyperbolic patch exceeds " +
                                                        std::to_string(options.max_cells) + " cells");
            auto id = static_cast<std::uint32_t>(pos.size());
            pos.push_back(z);
            reference.push_back(v);
            depth.push_back(depth[v] + 1);
            adjacency.emplace_back();
            index.insert(z, id);
            link(v, id);
        }
    }

    LatticeParts parts;
    parts.valence = k;
    parts.surface = Surface::H2Patch;
    parts.schlafli = Schlafli{p, k};
    parts.neighbors = std::move(adjacency);
    parts.embedding_kind = EmbeddingKind::PoincareDisk;
    parts.boundary.resize(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        parts.embedding.push_back({pos[i].real(), pos[i].imag()});
        parts.boundary[i] = depth[i] == layers;
    }
    return Lattice(std::move(parts));
}

} // namespace symca
