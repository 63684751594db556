#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symca {

enum class Surface { E2Patch, Torus, Klein, Sphere, Projective, H2Patch };

std::string_view to_string(Surface surface);
/// Accepts the lowercase tag names produced by to_string ("torus", "klein", ...).
Surface parse_surface(std::string_view text);

struct Schlafli {
    unsigned p = 0; ///< face size
    unsigned k = 0; ///< vertex valence
    friend bool operator==(const Schlafli&, const Schlafli&) = default;
};

std::string to_string(Schlafli s);

struct GridShape {
    unsigned width = 0;
    unsigned height = 0;
    friend bool operator==(const GridShape&, const GridShape&) = default;
};

struct Point2 {
    double x = 0;
    double y = 0;
};

enum class EmbeddingKind { None, Euclidean, PoincareDisk };

using Face = std::vector<std::uint32_t>;

/// Everything needed to assemble a Lattice. Builders fill this in; the
/// Lattice constructor checks the adjacency invariants.
struct LatticeParts {
    unsigned valence = 0;
    std::vector<std::vector<std::uint32_t>> neighbors;
    std::vector<Face> faces;
    Surface surface = Surface::E2Patch;
    std::optional<Schlafli> schlafli;
    std::optional<GridShape> grid;
    EmbeddingKind embedding_kind = EmbeddingKind::None;
    std::vector<Point2> embedding;
    std::vector<bool> boundary; ///< empty means no boundary cells
};

/// Finite cell graph. Cells are vertices of the underlying tiling; every
/// non-boundary cell has exactly `valence` distinct neighbors, adjacency is
/// symmetric and loop-free. Immutable once built.
class Lattice {
public:
    explicit Lattice(LatticeParts parts);

    std::size_t cells() const noexcept { return offsets_.size() - 1; }
    unsigned valence() const noexcept { return parts_.valence; }

    std::span<const std::uint32_t> neighbors(std::size_t cell) const noexcept {
        return {flat_.data() + offsets_[cell], flat_.data() + offsets_[cell + 1]};
    }

    /// Number of undirected edges.
    std::size_t edge_count() const noexcept { return flat_.size() / 2; }

    bool has_faces() const noexcept { return !parts_.faces.empty(); }
    const std::vector<Face>& faces() const noexcept { return parts_.faces; }
    Surface surface() const noexcept { return parts_.surface; }
    const std::optional<Schlafli>& schlafli() const noexcept { return parts_.schlafli; }
    const std::optional<GridShape>& grid() const noexcept { return parts_.grid; }
    EmbeddingKind embedding_kind() const noexcept { return parts_.embedding_kind; }
    std::span<const Point2> embedding() const noexcept { return parts_.embedding; }

    bool is_boundary(std::size_t cell) const noexcept {
        return !parts_.boundary.empty() && parts_.boundary[cell];
    }
    std::size_t boundary_count() const noexcept { return boundary_count_; }

    /// Copy of the construction data, e.g. to derive a modified lattice.
    const LatticeParts& parts() const noexcept { return parts_; }

private:
    LatticeParts parts_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> flat_;
    std::size_t boundary_count_ = 0;
};

// --- builders --------------------------------------------------------------

/// {6,3}, {4,4} or {3,6} on a torus or Klein bottle.
///
/// dims counts unit cells of the periodic tiling. {4,4} and {3,6} have one
/// cell per unit cell (V = w*h); {6,3} has two (V = 2*w*h), since a
/// hexagonal lattice on a torus always has an even number of vertices.
/// Cells are indexed row-major, ((y*w + x) * sites + site).
/// Klein gluing: horizontal wrap is straight; crossing the top or bottom
/// edge mirrors the x coordinate (x -> w-1-x on the square grid).
Lattice build_euclidean(Schlafli schlafli, Surface surface, GridShape dims);

/// Square grid with the 8-cell Moore neighborhood, same gluing as above.
Lattice build_moore(Surface surface, GridShape dims);

/// Vertex graph of the Platonic solid {p,k}, with faces.
Lattice build_platonic(Schlafli schlafli);

enum class TilingKind { Spherical, Euclidean, Hyperbolic };

struct TilingClass {
    TilingKind kind;
    /// (V, E, F) of the closed sphere tiling; zero unless Spherical.
    long vertices = 0;
    long edges = 0;
    long faces = 0;
};

std::string_view to_string(TilingKind kind);

TilingClass classify_tiling(unsigned p, unsigned k);

struct FaceCounts {
    long vertices;
    long edges;
    long faces;
};

/// Solves pF = kV = 2E together with V - E + F = chi. Returns nullopt when
/// the solution is not a positive integer triple.
std::optional<FaceCounts> solve_regular_counts(unsigned p, unsigned k, long chi);

struct HyperbolicOptions {
    std::size_t max_cells = 2'000'000;
};

/// Breadth-first patch of the hyperbolic {p,k} tiling around a vertex:
/// every cell within graph distance `layers` of the center. The outermost
/// ring is marked boundary. Cells carry Poincare-disk coordinates.
Lattice build_hyperbolic_patch(unsigned p, unsigned k, unsigned layers,
                               const HyperbolicOptions& options = {});

/// V - E + F. Requires faces and a closed surface.
long euler_characteristic(const Lattice& lattice);

struct FullereneCounts {
    long pentagons;
    long vertices;
    long edges;
    friend bool operator==(const FullereneCounts&, const FullereneCounts&) = default;
};

/// Pentagon, vertex and edge counts of a fullerene with `hexagons` hexagonal
/// faces on a surface of Euler characteristic chi (0, 1 or 2).
FullereneCounts fullerene_counts(long hexagons, long chi);

/// The truncated icosahedron (buckminsterfullerene).
Lattice build_fullerene_c60();

/// Validates a face list as a fullerene: faces of size 5 or 6, each edge on
/// exactly two faces, 3-regular, counts consistent with fullerene_counts.
Lattice build_fullerene(const std::vector<Face>& faces);

// --- validation and file formats -------------------------------------------

struct ValidationCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool passed() const;
};

ValidationReport validate(const Lattice& lattice);

/// Whether the faces can be oriented consistently.
bool faces_orientable(const std::vector<Face>& faces);

/// One face per line, space-separated 0-based vertex indices. Blank lines
/// and lines starting with '#' are ignored.
std::vector<Face> parse_face_list(std::string_view text);
std::string format_face_list(const std::vector<Face>& faces);

/// "u v" per line with u < v, sorted.
std::string format_edge_list(const Lattice& lattice);
/// "cell,x,y" header followed by one row per cell.
std::string format_embedding_csv(const Lattice& lattice);

} // namespace symca
