#include "doctest.h"

#include "oracles/hyperbolic_growth.hpp"
#include "symca/error.hpp"
#include "symca/lattice.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

using namespace symca;

namespace {

// Independent structural checks, not relying on validate().
void check_graph(const Lattice& l) {
    for (std::size_t c = 0; c < l.cells(); ++c) {
        auto nb = l.neighbors(c);
        std::set<std::uint32_t> seen(nb.begin(), nb.end());
        REQUIRE(seen.size() == nb.size());
        REQUIRE_FALSE(seen.count(static_cast<std::uint32_t>(c)));
        if (!l.is_boundary(c))
            REQUIRE(nb.size() == l.valence());
        for (auto n : nb) {
            auto back = l.neighbors(n);
            REQUIRE(std::find(back.begin(), back.end(), c) != back.end());
        }
    }
}

std::vector<int> distances_from_zero(const Lattice& l) {
    std::vector<int> d(l.cells(), -1);
    std::queue<std::size_t> q;
    d[0] = 0;
    q.push(0);
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto u : l.neighbors(v))
            if (d[u] < 0) {
                d[u] = d[v] + 1;
                q.push(u);
            }
    }
    return d;
}

std::vector<std::size_t> ring_sizes(const std::vector<int>& d, int depth) {
    std::vector<std::size_t> out(depth + 1, 0);
    for (int x : d)
        if (x >= 0 && x <= depth)
            ++out[x];
    return out;
}

} // namespace

TEST_CASE("square torus") {
    auto l = build_euclidean({4, 4}, Surface::Torus, {4, 4});
    CHECK(l.cells() == 16);
    CHECK(l.edge_count() == 32);
    CHECK(l.faces().size() == 16);
    CHECK(euler_characteristic(l) == 0);
    CHECK(euler_characteristic(build_euclidean({4, 4}, Surface::Torus, {5, 5})) == 0);
    check_graph(l);
}

TEST_CASE("hexagonal torus is trivalent") {
    auto l = build_euclidean({6, 3}, Surface::Torus, {4, 4});
    CHECK(l.valence() == 3);
    CHECK(l.cells() == 32);
    for (std::size_t c = 0; c < l.cells(); ++c)
        CHECK(l.neighbors(c).size() == 3);
    check_graph(l);
}

TEST_CASE("euclidean builders across sizes keep pF = kV = 2E and chi = 0") {
    for (auto s : {Schlafli{6, 3}, Schlafli{4, 4}, Schlafli{3, 6}})
        for (auto surface : {Surface::Torus, Surface::Klein})
            for (unsigned w = 3; w <= 6; ++w)
                for (unsigned h = 3; h <= 6; ++h) {
                    CAPTURE(s.p);
                    CAPTURE(w);
                    CAPTURE(h);
                    auto l = build_euclidean(s, surface, {w, h});
                    check_graph(l);
                    CHECK(s.p * l.faces().size() == s.k * l.cells());
                    CHECK(s.k * l.cells() == 2 * l.edge_count());
                    CHECK(euler_characteristic(l) == 0);
                    CHECK(faces_orientable(l.faces()) == (surface == Surface::Torus));
                    CHECK(validate(l).passed());
                }
}

TEST_CASE("euclidean builder rejections") {
    CHECK_THROWS_AS(build_euclidean({5, 4}, Surface::Torus, {4, 4}), Error);
    CHECK_THROWS_AS(build_euclidean({4, 4}, Surface::Torus, {2, 4}), Error);
    CHECK_THROWS_AS(build_euclidean({4, 4}, Surface::Sphere, {4, 4}), Error);
    try {
        build_euclidean({5, 4}, Surface::Torus, {4, 4});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("{4,4}") != std::string::npos);
    }
}

TEST_CASE("Moore lattices") {
    auto t = build_moore(Surface::Torus, {16, 16});
    CHECK(t.cells() == 256);
    CHECK(t.valence() == 8);
    check_graph(t);

    auto small = build_moore(Surface::Torus, {3, 3});
    for (std::size_t c = 0; c < 9; ++c) {
        std::set<std::uint32_t> nb(small.neighbors(c).begin(), small.neighbors(c).end());
        CHECK(nb.size() == 8);
        CHECK_FALSE(nb.count(static_cast<std::uint32_t>(c)));
    }

    // Klein gluing on 4x4: leaving the top row through (x, -1) lands at (3-x, 3).
    auto k = build_moore(Surface::Klein, {4, 4});
    check_graph(k);
    auto nb = k.neighbors(0 * 4 + 1);
    std::set<std::uint32_t> got(nb.begin(), nb.end());
    std::set<std::uint32_t> want;
    for (int dx = -1; dx <= 1; ++dx) {
        // same row and the row below, straight horizontal wrap
        want.insert(static_cast<std::uint32_t>(0 * 4 + (1 + dx + 4) % 4));
        want.insert(static_cast<std::uint32_t>(1 * 4 + (1 + dx + 4) % 4));
        // the row above crosses the mirrored edge
        int x = (1 + dx + 4) % 4;
        want.insert(static_cast<std::uint32_t>(3 * 4 + (3 - x)));
    }
    want.erase(1);
    CHECK(got == want);
    CHECK_THROWS_AS(build_moore(Surface::Torus, {2, 5}), Error);
}

TEST_CASE("Platonic solids") {
    struct Row {
        Schlafli s;
        std::size_t v, e, f;
    };
    for (auto row : {Row{{3, 3}, 4, 6, 4}, Row{{4, 3}, 8, 12, 6}, Row{{3, 4}, 6, 12, 8},
                     Row{{5, 3}, 20, 30, 12}, Row{{3, 5}, 12, 30, 20}}) {
        auto l = build_platonic(row.s);
        check_graph(l);
        CHECK(l.cells() == row.v);
        CHECK(l.edge_count() == row.e);
        CHECK(l.faces().size() == row.f);
        CHECK(euler_characteristic(l) == 2);
        CHECK(l.surface() == Surface::Sphere);
        CHECK(faces_orientable(l.faces()));
        for (const auto& f : l.faces())
            CHECK(f.size() == row.s.p);
    }
    CHECK_THROWS_AS(build_platonic({4, 4}), Error);
}

TEST_CASE("tiling classification") {
    int spherical = 0, euclidean = 0, hyperbolic = 0;
    for (unsigned p = 3; p <= 12; ++p)
        for (unsigned k = 3; k <= 12; ++k) {
            auto c = classify_tiling(p, k);
            long sign = 2L * p + 2L * k - static_cast<long>(p * k); // > 0 spherical
            if (c.kind == TilingKind::Spherical) {
                ++spherical;
                CHECK(sign > 0);
                CHECK(c.vertices - c.edges + c.faces == 2);
                CHECK(static_cast<long>(p) * c.faces == 2 * c.edges);
                CHECK(static_cast<long>(k) * c.vertices == 2 * c.edges);
            } else if (c.kind == TilingKind::Euclidean) {
                ++euclidean;
                CHECK(sign == 0);
            } else {
                ++hyperbolic;
                CHECK(sign < 0);
            }
        }
    CHECK(spherical == 5);
    CHECK(euclidean == 3);
    CHECK(hyperbolic == 100 - 8);
    CHECK(classify_tiling(3, 8).kind == TilingKind::Hyperbolic);
    CHECK(classify_tiling(4, 4).kind == TilingKind::Euclidean);
    auto d = classify_tiling(5, 3);
    CHECK(d.kind == TilingKind::Spherical);
    CHECK(d.vertices == 20);
    CHECK(d.edges == 30);
    CHECK(d.faces == 12);
    CHECK_THROWS_AS(classify_tiling(2, 5), Error);
}

TEST_CASE("regular count solver") {
    auto proj = solve_regular_counts(4, 3, 1);
    REQUIRE(proj);
    CHECK(proj->vertices == 4);
    CHECK(proj->edges == 6);
    CHECK(proj->faces == 3);
    CHECK_FALSE(solve_regular_counts(4, 4, 2));
    CHECK_FALSE(solve_regular_counts(3, 7, 2));
}

TEST_CASE("fullerene counts") {
    CHECK(fullerene_counts(20, 2) == FullereneCounts{12, 60, 90});
    CHECK(fullerene_counts(0, 2) == FullereneCounts{12, 20, 30});
    CHECK(fullerene_counts(7, 0) == FullereneCounts{0, 14, 21});
    CHECK(fullerene_counts(3, 1) == FullereneCounts{6, 16, 24});
    CHECK_THROWS_AS(fullerene_counts(5, -2), Error);
}

TEST_CASE("C60") {
    auto c = build_fullerene_c60();
    check_graph(c);
    CHECK(c.cells() == 60);
    CHECK(c.edge_count() == 90);
    std::map<std::size_t, int> by_size;
    for (const auto& f : c.faces())
        ++by_size[f.size()];
    CHECK(by_size[5] == 12);
    CHECK(by_size[6] == 20);
    CHECK(euler_characteristic(c) == 2);
    // Pentagons are isolated: no two share an edge.
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> pent_edges;
    for (const auto& f : c.faces())
        if (f.size() == 5)
            for (std::size_t i = 0; i < 5; ++i) {
                auto a = f[i], b = f[(i + 1) % 5];
                ++pent_edges[{std::min(a, b), std::max(a, b)}];
            }
    for (auto& [edge, n] : pent_edges)
        CHECK(n == 1);
    CHECK(pent_edges.size() == 60);
}

TEST_CASE("face-list fullerenes") {
    auto dodeca = build_platonic({5, 3});
    auto text = format_face_list(dodeca.faces());
    auto l = build_fullerene(parse_face_list(text));
    CHECK(l.cells() == 20);
    CHECK(fullerene_counts(0, euler_characteristic(l)).vertices == 20);

    auto c60 = build_fullerene_c60();
    auto again = build_fullerene(parse_face_list(format_face_list(c60.faces())));
    CHECK(again.cells() == 60);
    CHECK(format_edge_list(again) == format_edge_list(c60));

    auto cube = build_platonic({4, 3});
    try {
        build_fullerene(cube.faces());
        FAIL("cube accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidLattice);
        CHECK(std::string(e.what()).find("face size") != std::string::npos);
    }
    auto faces = dodeca.faces();
    faces.pop_back();
    CHECK_THROWS_AS(build_fullerene(faces), Error);
    CHECK(parse_face_list("# comment\n0 1 2\n\n2 1 3\n").size() == 2);
    CHECK_THROWS_AS(parse_face_list("0 1 x\n"), Error);
}

TEST_CASE("hyperbolic patch basics") {
    auto one = build_hyperbolic_patch(3, 8, 1);
    CHECK(one.cells() == 9);
    CHECK(one.neighbors(0).size() == 8);
    CHECK_FALSE(one.is_boundary(0));
    for (std::size_t c = 1; c < 9; ++c)
        CHECK(one.is_boundary(c));

    auto hept = build_hyperbolic_patch(7, 3, 2);
    check_graph(hept);
    CHECK(validate(hept).passed());

    CHECK_THROWS_AS(build_hyperbolic_patch(4, 4, 2), Error);
    CHECK_THROWS_AS(build_hyperbolic_patch(5, 3, 2), Error);
    CHECK_THROWS_AS(euler_characteristic(hept), Error);
    CHECK_THROWS_AS(build_hyperbolic_patch(3, 8, 6, {1000}), Error);

    for (auto pt : build_hyperbolic_patch(3, 8, 3).embedding())
        CHECK(pt.x * pt.x + pt.y * pt.y < 1.0);
}

TEST_CASE("hyperbolic patches match combinatorial face-ring growth") {
    struct Case {
        unsigned p, k, layers;
    };
    for (auto cs : {Case{3, 8, 1}, Case{3, 8, 2}, Case{3, 8, 3}, Case{3, 8, 4}, Case{7, 3, 2}, Case{7, 3, 5},
                    Case{4, 5, 3}, Case{5, 4, 3}, Case{3, 7, 4}, Case{6, 4, 3}, Case{8, 3, 4}}) {
        CAPTURE(cs.p);
        CAPTURE(cs.k);
        CAPTURE(cs.layers);
        auto patch = build_hyperbolic_patch(cs.p, cs.k, cs.layers);
        check_graph(patch);

        oracle::FaceRingGrowth growth(cs.p, cs.k);
        for (unsigned i = 0; i <= cs.layers; ++i)
            growth.grow();
        auto od = growth.distances();
        const int depth = static_cast<int>(cs.layers);

        auto pd = distances_from_zero(patch);
        CHECK(*std::max_element(pd.begin(), pd.end()) == depth);
        CHECK(ring_sizes(pd, depth) == ring_sizes(od, depth));
        for (std::size_t c = 0; c < patch.cells(); ++c)
            CHECK(patch.is_boundary(c) == (pd[c] == depth));

        // Induced ball: edge count and degree multiset.
        std::size_t oracle_edges = 0;
        std::multiset<std::size_t> oracle_degrees;
        for (std::size_t v = 0; v < od.size(); ++v) {
            if (od[v] < 0 || od[v] > depth)
                continue;
            std::size_t deg = 0;
            for (auto u : growth.adjacency()[v])
                if (od[u] >= 0 && od[u] <= depth)
                    ++deg;
            oracle_degrees.insert(deg);
            oracle_edges += deg;
        }
        std::multiset<std::size_t> patch_degrees;
        for (std::size_t c = 0; c < patch.cells(); ++c)
            patch_degrees.insert(patch.neighbors(c).size());
        CHECK(patch.edge_count() * 2 == oracle_edges);
        CHECK(patch_degrees == oracle_degrees);
    }
}

TEST_CASE("exports") {
    auto l = build_euclidean({4, 4}, Surface::Torus, {3, 3});
    auto edges = format_edge_list(l);
    CHECK(std::count(edges.begin(), edges.end(), '\n') == 18);
    CHECK(edges.substr(0, 4) == "0 1\n");
    auto csv = format_embedding_csv(build_hyperbolic_patch(3, 8, 1));
    CHECK(csv.rfind("cell,x,y\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}

TEST_CASE("validation flags broken lattices") {
    LatticeParts parts;
    parts.valence = 2;
    parts.neighbors = {{1, 2}, {0, 2}, {0, 1}};
    parts.faces = {{0, 1, 2}};
    Lattice tri(parts);
    auto report = validate(tri);
    CHECK_FALSE(report.passed());

    LatticeParts bad;
    bad.valence = 1;
    bad.neighbors = {{1}, {}};
    CHECK_THROWS_AS(Lattice{bad}, Error);
}
