// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles/naive_step.hpp"
#include "symca/bs_rule.hpp"
#include "symca/counting.hpp"
#include "symca/engine.hpp"
#include "symca/f2poly.hpp"
#include "symca/lattice.hpp"
#include "symca/relations.hpp"
#include "symca/state.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace symca;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note << what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.note << "exception: " << e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (out.ok ? "PASS " : "FAIL ") << id << " " << title << " (" << ms.count() << " ms)";
    if (!out.ok) {
        std::cout << ": " << out.note.str();
        ++failures;
    }
    std::cout << std::endl;
}

SymmetricRule bs(std::string_view text) { return bs_to_rule(parse_bs(text, 8)); }

void counting(Outcome& o) {
    o.expect(count_rules(2, 8, Level::Leaves) == 262144, "count_rules(2,8,LEAVES)");
    o.expect(count_bw_fixed(3, Level::Leaves) == 16, "count_bw_fixed(3,LEAVES)");
    o.expect(count_orbits_closed(3, Level::Leaves) == 136, "count_orbits_closed(3,LEAVES)");
    o.expect(count_bw_fixed(3, Level::Full) == 0, "count_bw_fixed(3,FULL)");
    o.expect(count_orbits_closed(3, Level::Full) == 16, "count_orbits_closed(3,FULL)");
    o.expect(count_bw_fixed(8, Level::Leaves) == 512, "count_bw_fixed(8,LEAVES)");
}

void burnside(Outcome& o) {
    BruteForceOptions opts;
    opts.workers = 4;
    for (unsigned k = 1; k <= 8; ++k)
        o.expect(BigInt(count_orbits_bruteforce(2, k, Level::Leaves, opts)) == count_orbits_closed(k, Level::Leaves),
                 "LEAVES k=" + std::to_string(k));
    for (unsigned k = 1; k <= 12; ++k)
        o.expect(BigInt(count_orbits_bruteforce(2, k, Level::Full, opts)) == count_orbits_closed(k, Level::Full),
                 "FULL k=" + std::to_string(k));
}

void polynomials(Outcome& o) {
    struct Row {
        NamedRule name;
        const char* rule;
        unsigned degree;
        std::size_t terms;
    };
    for (auto row : {Row{NamedRule::ConwaysLife, "B3/S23", 8, 185}, Row{NamedRule::HighLife, "B36/S23", 6, 169},
                     Row{NamedRule::DayAndNight, "B3678/S34678", 8, 256}}) {
        auto start = std::chrono::steady_clock::now();
        auto anf = rule_to_anf(bs(row.rule));
        auto elapsed = std::chrono::steady_clock::now() - start;
        std::string tag(to_string(row.name));
        o.expect(anf == life_polynomial_fixture(row.name), tag + " fixture differs");
        o.expect(anf.degree() == row.degree, tag + " degree " + std::to_string(anf.degree()));
        o.expect(anf.terms() == row.terms, tag + " terms " + std::to_string(anf.terms()));
        o.expect(elapsed < std::chrono::seconds(1), tag + " slower than 1 s");
    }
}

void decompositions(Outcome& o) {
    for (auto name : {NamedRule::ConwaysLife, NamedRule::HighLife, NamedRule::DayAndNight}) {
        auto rule = bs_to_rule(named_rule_bs(name));
        auto templates = decomposition_fixture(name);
        if (name == NamedRule::DayAndNight)
            templates.push_back(day_and_night_combined_relation());
        for (const auto& t : templates) {
            auto r = verify_implied_relation(rule, t);
            o.expect(r.holds && r.assignments_per_tuple == 512 &&
                         r.tuples_checked == t.admissible_tuples().size(),
                     std::string(to_string(name)) + ": " + t.text());
        }
    }
}

void topology(Outcome& o) {
    for (auto s : {Schlafli{6, 3}, Schlafli{4, 4}, Schlafli{3, 6}})
        for (auto surface : {Surface::Torus, Surface::Klein})
            for (unsigned w = 3; w <= 6; ++w)
                for (unsigned h = 3; h <= 6; ++h) {
                    auto l = build_euclidean(s, surface, {w, h});
                    o.expect(euler_characteristic(l) == 0, to_string(s) + " " + std::string(to_string(surface)) +
                                                               " " + std::to_string(w) + "x" + std::to_string(h));
                }
    for (auto s : {Schlafli{3, 3}, Schlafli{4, 3}, Schlafli{3, 4}, Schlafli{5, 3}, Schlafli{3, 5}}) {
        auto l = build_platonic(s);
        long V = static_cast<long>(l.cells()), E = static_cast<long>(l.edge_count()),
             F = static_cast<long>(l.faces().size());
        o.expect(euler_characteristic(l) == 2 && s.p * F == s.k * V && s.k * V == 2 * E, to_string(s));
    }
    auto c = build_fullerene_c60();
    long f5 = 0, f6 = 0;
    for (const auto& f : c.faces())
        (f.size() == 5 ? f5 : f6) += 1;
    auto expect = fullerene_counts(20, 2);
    o.expect(c.cells() == 60 && c.edge_count() == 90 && f5 == 12 && f6 == 20, "C60 counts");
    o.expect(expect == FullereneCounts{f5, static_cast<long>(c.cells()), static_cast<long>(c.edge_count())},
             "fullerene_counts(20,2)");
}

void classification(Outcome& o) {
    std::map<TilingKind, int> tally;
    for (unsigned p = 3; p <= 12; ++p)
        for (unsigned k = 3; k <= 12; ++k)
            ++tally[classify_tiling(p, k).kind];
    o.expect(tally[TilingKind::Spherical] == 5, "spherical count");
    o.expect(tally[TilingKind::Euclidean] == 3, "euclidean count");
    o.expect(tally[TilingKind::Hyperbolic] == 92, "hyperbolic count");
    o.expect(classify_tiling(3, 8).kind == TilingKind::Hyperbolic, "{3,8}");
}

CAState from_grid(const oracle::Grid& g) {
    std::vector<std::uint8_t> v;
    for (const auto& row : g)
        for (int x : row)
            v.push_back(static_cast<std::uint8_t>(x));
    return CAState(2, v);
}

oracle::Grid shifted(const oracle::Grid& g, int dx, int dy) {
    int h = static_cast<int>(g.size()), w = static_cast<int>(g[0].size());
    oracle::Grid out(h, std::vector<int>(w));
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out[(y + dy + h) % h][(x + dx + w) % w] = g[y][x];
    return out;
}

void dynamics(Outcome& o) {
    auto l = build_moore(Surface::Torus, {16, 16});
    auto life = bs("B3/S23");
    const std::vector<int> B{3}, S{2, 3};
    auto track = [&](oracle::Grid g, int steps, const std::string& tag) {
        auto s = from_grid(g);
        for (int i = 0; i < steps; ++i) {
            s = step(l, life, s);
            g = oracle::life_step(g, B, S);
            o.expect(s.same_cells(from_grid(g)), tag + " diverges from oracle at step " + std::to_string(i + 1));
        }
        return g;
    };

    oracle::Grid glider(16, std::vector<int>(16, 0));
    glider[0][1] = glider[1][2] = glider[2][0] = glider[2][1] = glider[2][2] = 1;
    auto g = glider;
    for (int period = 1; period <= 20; ++period) {
        g = track(g, 4, "glider");
        o.expect(g == shifted(glider, period, period), "glider not translated after period " + std::to_string(period));
    }

    oracle::Grid blinker(16, std::vector<int>(16, 0));
    blinker[5][4] = blinker[5][5] = blinker[5][6] = 1;
    auto b1 = track(blinker, 1, "blinker");
    o.expect(b1 != blinker, "blinker static");
    o.expect(track(b1, 1, "blinker") == blinker, "blinker period");
    o.expect(detect_cycle(l, life, from_grid(blinker), 4) == Cycle{0, 2}, "blinker cycle");

    oracle::Grid block(16, std::vector<int>(16, 0));
    block[7][7] = block[7][8] = block[8][7] = block[8][8] = 1;
    o.expect(track(block, 1, "block") == block, "block moved");
    o.expect(detect_cycle(l, life, from_grid(block), 4) == Cycle{0, 1}, "block cycle");
}

void equivariance(Outcome& o) {
    auto l = build_moore(Surface::Torus, {12, 12});
    std::mt19937_64 rng(2024);
    std::size_t symmetric = 0;
    OrbitRepEnumerator reps(8, Level::Leaves);
    while (auto r = reps.next()) {
        if (!is_bw_symmetric(*r))
            continue;
        ++symmetric;
        for (int i = 0; i < 5; ++i) {
            auto s = CAState::random(2, l.cells(), rng());
            auto lhs = complement(step(l, *r, s));
            auto rhs = step(l, *r, complement(s));
            o.expect(lhs.same_cells(rhs), "rule " + format_alpha(*r));
        }
    }
    o.expect(symmetric == 512, "found " + std::to_string(symmetric) + " BW-symmetric rules");
}

void equivalence(Outcome& o) {
    std::vector<std::pair<std::string, Lattice>> lattices;
    lattices.emplace_back("Moore torus", build_moore(Surface::Torus, {32, 24}));
    lattices.emplace_back("{6,3} torus", build_euclidean({6, 3}, Surface::Torus, {12, 10}));
    lattices.emplace_back("C60", build_fullerene_c60());
    lattices.emplace_back("{3,8} patch", build_hyperbolic_patch(3, 8, 4));
    std::mt19937_64 rng(99);
    int pairs = 0;
    for (const auto& [name, l] : lattices)
        for (int i = 0; i < 25; ++i) {
            std::vector<std::uint8_t> t(2 * l.valence() + 2);
            for (auto& v : t)
                v = rng() & 1;
            SymmetricRule rule(2, l.valence(), Level::Leaves, t);
            auto s = CAState::random(2, l.cells(), rng());
            auto packed = step(l, rule, s, {1, StepPath::Packed});
            auto generic = step(l, rule, s, {1, StepPath::Generic});
            bool same = true;
            for (std::size_t c = 0; c < l.cells(); ++c)
                if (!l.is_boundary(c))
                    same = same && packed[c] == generic[c];
            o.expect(same, name + " pair " + std::to_string(i));
            ++pairs;
        }
    o.expect(pairs == 100, "pair count");
}

} // namespace

int main() {
    criterion(1, "rule counts match the reference values", counting);
    criterion(2, "Burnside enumeration equals the closed forms", burnside);
    criterion(3, "rule polynomials match fixtures, degrees and term counts", polynomials);
    criterion(4, "every decomposition relation holds", decompositions);
    criterion(5, "Euler characteristics and face counts", topology);
    criterion(6, "tiling classification over 3..12", classification);
    criterion(7, "glider, blinker and block against the naive stepper", dynamics);
    criterion(8, "BW-symmetric rules commute with complement", equivariance);
    criterion(9, "packed and generic stepping agree", equivalence);
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << 9 - failures << "/9" << std::endl;
    return failures ? 1 : 0;
}
