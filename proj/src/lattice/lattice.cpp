#include "symca/lattice.hpp"

#include "symca/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace symca {

std::string_view to_string(Surface surface) {
    switch (surface) {
    case Surface::E2Patch: return "e2_patch";
    case Surface::Torus: return "torus";
    case Surface::Klein: return "klein";
    case Surface::Sphere: return "sphere";
    case Surface::Projective: return "projective";
    case Surface::H2Patch: return "h2_patch";
    }
    return "unknown";
}

Surface parse_surface(std::string_view text) {
    for (Surface s : {Surface::E2Patch, Surface::Torus, Surface::Klein, Surface::Sphere,
                      Surface::Projective, Surface::H2Patch})
        if (to_string(s) == text)
            return s;
    throw Error(ErrorCode::Parse, "unknown surface '" + std::string(text) + "'");
}

std::string to_string(Schlafli s) {
    return "{" + std::to_string(s.p) + "," + std::to_string(s.k) + "}";
}

std::string_view to_string(TilingKind kind) {
    switch (kind) {
    case TilingKind::Spherical: return "spherical";
    case TilingKind::Euclidean: return "euclidean";
    case TilingKind::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

Lattice::Lattice(LatticeParts parts) : parts_(std::move(parts)) {
    const std::size_t n = parts_.neighbors.size();
    if (n == 0)
        throw Error(ErrorCode::InvalidLattice, "lattice has no cells");
    if (!parts_.boundary.empty() && parts_.boundary.size() != n)
        throw Error(ErrorCode::InvalidLattice, "boundary mask size does not match cell count");
    if (parts_.embedding_kind != EmbeddingKind::None && parts_.embedding.size() != n)
        throw Error(ErrorCode::InvalidLattice, "embedding size does not match cell count");

    offsets_.reserve(n + 1);
    offsets_.push_back(0);
    for (std::size_t c = 0; c < n; ++c) {
        auto& list = parts_.neighbors[c];
        std::vector<std::uint32_t> sorted = list;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorCode::InvalidLattice,
                        "cell " + std::to_string(c) + " lists a neighbor twice");
        for (auto v : list) {
            if (v >= n)
                throw Error(ErrorCode::InvalidLattice, "neighbor index out of range");
            if (v == c)
                throw Error(ErrorCode::InvalidLattice,
                            "cell " + std::to_string(c) + " is its own neighbor");
        }
        bool frontier = !parts_.boundary.empty() && parts_.boundary[c];
        boundary_count_ += frontier;
        if (!frontier && list.size() != parts_.valence)
            throw Error(ErrorCode::InvalidLattice,
                        "cell " + std::to_string(c) + " has " + std::to_string(list.size()) +
                            " neighbors, expected " + std::to_string(parts_.valence));
        if (frontier && list.size() > parts_.valence)
            throw Error(ErrorCode::InvalidLattice, "boundary cell exceeds valence");
        flat_.insert(flat_.end(), list.begin(), list.end());
        offsets_.push_back(flat_.size());
    }
    for (std::size_t c = 0; c < n; ++c)
        for (auto v : neighbors(c)) {
            auto back = neighbors(v);
            if (std::find(back.begin(), back.end(), c) == back.end())
                throw Error(ErrorCode::InvalidLattice, "adjacency is not symmetric between cells " +
                                                           std::to_string(c) + " and " +
                                                           std::to_string(v));
        }
    for (const auto& p : parts_.embedding)
        if (parts_.embedding_kind == EmbeddingKind::PoincareDisk && std::hypot(p.x, p.y) >= 1.0)
            throw Error(ErrorCode::InvalidLattice, "Poincare-disk coordinate outside the unit disk");
}

namespace {

using EdgeKey = std::pair<std::uint32_t, std::uint32_t>;

EdgeKey edge_key(std::uint32_t a, std::uint32_t b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

/// Number of faces on each face edge.
std::map<EdgeKey, int> face_edge_usage(const std::vector<Face>& faces) {
    std::map<EdgeKey, int> usage;
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i)
            ++usage[edge_key(f[i], f[(i + 1) % f.size()])];
    return usage;
}

bool closed_surface(Surface s) {
    return s == Surface::Torus || s == Surface::Klein || s == Surface::Sphere ||
           s == Surface::Projective;
}

long expected_chi(Surface s) {
    switch (s) {
    case Surface::Sphere: return 2;
    case Surface::Projective: return 1;
    default: return 0;
    }
}

} // namespace

long euler_characteristic(const Lattice& lattice) {
    if (lattice.boundary_count() > 0 || !closed_surface(lattice.surface()))
        throw Error(ErrorCode::InvalidLattice, "not a closed surface: Euler characteristic undefined");
    if (!lattice.has_faces())
        throw Error(ErrorCode::InvalidLattice, "lattice carries no faces");
    auto usage = face_edge_usage(lattice.faces());
    for (const auto& [edge, count] : usage)
        if (count != 2)
            throw Error(ErrorCode::InvalidLattice,
                        "edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                            " borders " + std::to_string(count) + " faces, expected 2");
    return static_cast<long>(lattice.cells()) - static_cast<long>(usage.size()) +
           static_cast<long>(lattice.faces().size());
}

bool faces_orientable(const std::vector<Face>& faces) {
    // Directed edge -> (face, direction as stored). Propagate flips by BFS.
    std::map<EdgeKey, std::vector<std::pair<std::size_t, bool>>> incidence;
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t i = 0; i < faces[f].size(); ++i) {
            auto a = faces[f][i], b = faces[f][(i + 1) % faces[f].size()];
            incidence[edge_key(a, b)].push_back({f, a < b});
        }
    std::vector<int> flip(faces.size(), -1);
    for (std::size_t start = 0; start < faces.size(); ++start) {
        if (flip[start] >= 0)
            continue;
        flip[start] = 0;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            auto f = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < faces[f].size(); ++i) {
                auto a = faces[f][i], b = faces[f][(i + 1) % faces[f].size()];
                bool dir_f = (a < b) != static_cast<bool>(flip[f]);
                for (auto [g, forward] : incidence[edge_key(a, b)]) {
                    if (g == f)
                        continue;
                    // Neighbors must traverse the shared edge the other way.
                    int want = (forward == !dir_f) ? 0 : 1;
                    if (flip[g] < 0) {
                        flip[g] = want;
                        stack.push_back(g);
                    } else if (flip[g] != want) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

ValidationReport validate(const Lattice& lattice) {
    ValidationReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    // Adjacency invariants are enforced on construction; re-derive them here
    // so the report is self-contained.
    std::size_t asym = 0, loops = 0, dups = 0, bad_valence = 0;
    for (std::size_t c = 0; c < lattice.cells(); ++c) {
        auto nb = lattice.neighbors(c);
        std::vector<std::uint32_t> sorted(nb.begin(), nb.end());
        std::sort(sorted.begin(), sorted.end());
        dups += std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
        loops += std::binary_search(sorted.begin(), sorted.end(), static_cast<std::uint32_t>(c));
        for (auto v : nb) {
            auto back = lattice.neighbors(v);
            asym += std::find(back.begin(), back.end(), c) == back.end();
        }
        if (!lattice.is_boundary(c) && nb.size() != lattice.valence())
            ++bad_valence;
    }
    add("symmetric adjacency", asym == 0, std::to_string(asym) + " one-way links");
    add("no self-loops", loops == 0, std::to_string(loops) + " loops");
    add("no duplicate neighbors", dups == 0, std::to_string(dups) + " cells with duplicates");
    add("interior valence", bad_valence == 0,
        std::to_string(lattice.cells() - lattice.boundary_count()) + " interior cells of valence " +
            std::to_string(lattice.valence()) + ", " + std::to_string(bad_valence) + " off");

    if (lattice.has_faces()) {
        auto usage = face_edge_usage(lattice.faces());
        std::size_t unbalanced = 0, foreign = 0;
        for (const auto& [edge, count] : usage) {
            unbalanced += count != 2;
            auto nb = lattice.neighbors(edge.first);
            foreign += std::find(nb.begin(), nb.end(), edge.second) == nb.end();
        }
        add("edge balance", unbalanced == 0, std::to_string(unbalanced) + " edges not on exactly two faces");
        add("face edges are lattice edges", foreign == 0 && usage.size() == lattice.edge_count(),
            std::to_string(usage.size()) + " face edges vs " + std::to_string(lattice.edge_count()) +
                " lattice edges");

        if (lattice.schlafli()) {
            auto [p, k] = *lattice.schlafli();
            long pf = static_cast<long>(p) * static_cast<long>(lattice.faces().size());
            long kv = static_cast<long>(k) * static_cast<long>(lattice.cells());
            long e2 = 2 * static_cast<long>(lattice.edge_count());
            add("pF = kV = 2E", pf == kv && kv == e2,
                "pF=" + std::to_string(pf) + " kV=" + std::to_string(kv) + " 2E=" + std::to_string(e2));
        }
        if (closed_surface(lattice.surface()) && unbalanced == 0) {
            long chi = euler_characteristic(lattice);
            long want = expected_chi(lattice.surface());
            add("Euler characteristic", chi == want,
                "chi=" + std::to_string(chi) + " for " + std::string(to_string(lattice.surface())));
        }
    }

    if (lattice.embedding_kind() == EmbeddingKind::PoincareDisk) {
        double worst = 0;
        for (const auto& p : lattice.embedding())
            worst = std::max(worst, std::hypot(p.x, p.y));
        add("Poincare-disk coordinates inside unit disk", worst < 1.0,
            "max norm " + std::to_string(worst));
    }
    return report;
}

std::vector<Face> parse_face_list(std::string_view text) {
    std::vector<Face> faces;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            Face face;
            std::size_t i = first;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                if (i >= line.size())
                    break;
                std::uint32_t v = 0;
                auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
                if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' &&
                                          *ptr != '\t' && *ptr != '\r'))
                    throw ParseError("face list line " + std::to_string(line_no) +
                                         ": expected a vertex index",
                                     pos + i);
                face.push_back(v);
                i = static_cast<std::size_t>(ptr - line.data());
            }
            if (face.size() < 3)
                throw ParseError("face list line " + std::to_string(line_no) +
                                     ": a face needs at least 3 vertices",
                                 pos + first);
            faces.push_back(std::move(face));
        }
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return faces;
}

std::string format_face_list(const std::vector<Face>& faces) {
    std::string out;
    for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i)
                out.push_back(' ');
            out += std::to_string(f[i]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string format_edge_list(const Lattice& lattice) {
    std::vector<EdgeKey> edges;
    for (std::size_t c = 0; c < lattice.cells(); ++c)
        for (auto v : lattice.neighbors(c))
            if (c < v)
                edges.push_back({static_cast<std::uint32_t>(c), v});
    std::sort(edges.begin(), edges.end());
    std::string out;
    for (auto [u, v] : edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string format_embedding_csv(const Lattice& lattice) {
    if (lattice.embedding_kind() == EmbeddingKind::None)
        throw Error(ErrorCode::Unsupported, "lattice has no embedding coordinates");
    std::ostringstream out;
    out << "cell,x,y\n" << std::setprecision(17);
    auto pts = lattice.embedding();
    for (std::size_t c = 0; c < pts.size(); ++c)
        out << c << ',' << pts[c].x << ',' << pts[c].y << '\n';
    return out.str();
}

} // namespace symca
