// Command-line front end. Talks to the library only through the C API.

#include "symca/symca.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct Failure {
    std::string message;
};

void check(symca_status status, const std::string& what) {
    if (status != SYMCA_OK)
        throw Failure{what + ": " + symca_status_name(status) + ": " + symca_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Rule = std::unique_ptr<symca_rule, Deleter<symca_rule, symca_rule_free>>;
using LatticePtr = std::unique_ptr<symca_lattice, Deleter<symca_lattice, symca_lattice_free>>;
using State = std::unique_ptr<symca_state, Deleter<symca_state, symca_state_free>>;
using Run = std::unique_ptr<symca_run, Deleter<symca_run, symca_run_free>>;
using Poly = std::unique_ptr<symca_poly, Deleter<symca_poly, symca_poly_free>>;
using Verification =
    std::unique_ptr<symca_verification, Deleter<symca_verification, symca_verification_free>>;
using OrbitEnum = std::unique_ptr<symca_orbit_enum, Deleter<symca_orbit_enum, symca_orbit_enum_free>>;

std::string take(char* text) {
    std::string out(text ? text : "");
    symca_string_free(text);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{"cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Failure{"cannot write '" + path + "'"};
    out << text;
}

symca_level parse_level(const std::string& s) {
    if (s == "leaves" || s == "LEAVES")
        return SYMCA_LEVEL_LEAVES;
    if (s == "full" || s == "FULL")
        return SYMCA_LEVEL_FULL;
    throw Failure{"unknown level '" + s + "'"};
}

const char* level_name(symca_level level) { return level == SYMCA_LEVEL_LEAVES ? "LEAVES" : "FULL"; }

const char* surface_name(symca_surface s) {
    switch (s) {
    case SYMCA_SURFACE_E2_PATCH: return "E2_PATCH";
    case SYMCA_SURFACE_TORUS: return "TORUS";
    case SYMCA_SURFACE_KLEIN: return "KLEIN";
    case SYMCA_SURFACE_SPHERE: return "SPHERE";
    case SYMCA_SURFACE_PROJECTIVE: return "PROJECTIVE";
    case SYMCA_SURFACE_H2_PATCH: return "H2_PATCH";
    }
    return "?";
}

std::pair<unsigned, unsigned> parse_pair(const std::string& text, char sep, const std::string& what) {
    auto pos = text.find(sep);
    if (pos == std::string::npos)
        throw Failure{"expected " + what + ", got '" + text + "'"};
    try {
        std::size_t used1 = 0, used2 = 0;
        unsigned long a = std::stoul(text.substr(0, pos), &used1);
        unsigned long b = std::stoul(text.substr(pos + 1), &used2);
        if (used1 != pos || used2 != text.size() - pos - 1)
            throw std::invalid_argument("trailing");
        return {static_cast<unsigned>(a), static_cast<unsigned>(b)};
    } catch (const std::logic_error&) {
        throw Failure{"expected " + what + ", got '" + text + "'"};
    }
}

// Lattice syntax: torus:P,K  klein:P,K  moore:torus|klein  platonic:P,K
// hyperbolic:P,K  c60  faces:PATH. Grid sizes come from --dims, patch depth from --layers.
LatticePtr build_lattice(const std::string& text, const std::string& dims, unsigned layers) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    symca_lattice* raw = nullptr;
    auto need_dims = [&] {
        if (dims.empty())
            throw Failure{"lattice '" + text + "' needs --dims WxH"};
        return parse_pair(dims, 'x', "--dims WxH");
    };
    if (kind == "torus" || kind == "klein") {
        auto [p, k] = parse_pair(arg, ',', "P,K after '" + kind + ":'");
        auto [w, h] = need_dims();
        check(symca_lattice_build_euclidean(p, k, kind == "torus" ? SYMCA_SURFACE_TORUS : SYMCA_SURFACE_KLEIN,
                                            w, h, &raw),
              "lattice");
    } else if (kind == "moore") {
        if (arg != "torus" && arg != "klein")
            throw Failure{"moore lattice needs ':torus' or ':klein'"};
        auto [w, h] = need_dims();
        check(symca_lattice_build_moore(arg == "torus" ? SYMCA_SURFACE_TORUS : SYMCA_SURFACE_KLEIN, w, h, &raw),
              "lattice");
    } else if (kind == "platonic") {
        auto [p, k] = parse_pair(arg, ',', "P,K after 'platonic:'");
        check(symca_lattice_build_platonic(p, k, &raw), "lattice");
    } else if (kind == "hyperbolic") {
        auto [p, k] = parse_pair(arg, ',', "P,K after 'hyperbolic:'");
        check(symca_lattice_build_hyperbolic(p, k, layers, &raw), "lattice");
    } else if (kind == "c60") {
        check(symca_lattice_build_c60(&raw), "lattice");
    } else if (kind == "faces") {
        check(symca_lattice_build_fullerene(read_file(arg).c_str(), &raw), "lattice");
    } else {
        throw Failure{"unknown lattice '" + text + "'"};
    }
    return LatticePtr(raw);
}

Rule parse_rule(const std::string& text, unsigned q, unsigned k) {
    symca_rule* raw = nullptr;
    check(symca_rule_parse(text.c_str(), q, k, &raw), "rule");
    return Rule(raw);
}

std::string alpha_of(const symca_rule* rule) {
    char* s = nullptr;
    check(symca_rule_format_alpha(rule, &s), "rule");
    return take(s);
}

std::optional<std::string> bs_of(const symca_rule* rule) {
    char* s = nullptr;
    if (symca_rule_format_bs(rule, &s) != SYMCA_OK)
        return std::nullopt;
    return take(s);
}

symca_lattice_info info_of(const symca_lattice* lattice) {
    symca_lattice_info info{};
    check(symca_lattice_info_get(lattice, &info), "lattice");
    return info;
}

json lattice_json(const symca_lattice* lattice) {
    auto info = info_of(lattice);
    json j{{"cells", info.cells},
           {"valence", info.valence},
           {"surface", surface_name(info.surface)},
           {"edges", info.edges},
           {"faces", info.faces},
           {"boundary_cells", info.boundary_cells}};
    if (info.schlafli_p)
        j["schlafli"] = {info.schlafli_p, info.schlafli_k};
    if (info.grid_width)
        j["grid"] = {info.grid_width, info.grid_height};
    if (info.faces) {
        long chi = 0;
        check(symca_lattice_euler(lattice, &chi), "euler");
        j["euler_characteristic"] = chi;
    }
    return j;
}

// ---- count --------------------------------------------------------------

struct CountArgs {
    unsigned q = 2;
    unsigned k = 8;
    std::string level = "leaves";
    bool bruteforce = false;
    std::uint64_t cap = 0;
    unsigned workers = 1;
    std::string format = "json";
};

int cmd_count(const CountArgs& a) {
    auto level = parse_level(a.level);
    char* s = nullptr;
    check(symca_count_rules(a.q, a.k, level, &s), "count");
    json j{{"q", a.q}, {"k", a.k}, {"level", level_name(level)}, {"total", take(s)}};
    if (a.q == 2) {
        check(symca_count_bw_fixed(a.k, level, &s), "count");
        j["bw_fixed"] = take(s);
        check(symca_count_orbits_closed(a.k, level, &s), "count");
        j["orbits"] = take(s);
    }
    if (a.bruteforce || a.q != 2) {
        std::uint64_t n = 0;
        check(symca_count_orbits_bruteforce(a.q, a.k, level, a.cap, a.workers, &n), "count");
        j["orbits_bruteforce"] = std::to_string(n);
        if (a.q != 2)
            j["orbits"] = std::to_string(n);
    }
    if (a.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& [key, value] : j.items())
            std::cout << key << " " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return kExitOk;
}

// ---- enumerate ----------------------------------------------------------

struct EnumerateArgs {
    unsigned k = 3;
    std::string level = "leaves";
    std::uint64_t cap = 0;
    std::uint64_t limit = 0;
    std::string format = "text";
};

int cmd_enumerate(const EnumerateArgs& a) {
    auto level = parse_level(a.level);
    symca_orbit_enum* raw = nullptr;
    check(symca_orbit_enum_create(a.k, level, a.cap, &raw), "enumerate");
    OrbitEnum e(raw);
    json list = json::array();
    std::uint64_t n = 0;
    for (;;) {
        if (a.limit && n >= a.limit)
            break;
        symca_rule* r = nullptr;
        check(symca_orbit_enum_next(e.get(), &r), "enumerate");
        if (!r)
            break;
        Rule rule(r);
        int fixed = 0;
        check(symca_rule_is_bw_symmetric(rule.get(), &fixed), "enumerate");
        auto alpha = alpha_of(rule.get());
        if (a.format == "json") {
            json item{{"alpha", alpha}, {"bw_symmetric", fixed != 0}};
            if (auto bs = bs_of(rule.get()))
                item["bs"] = *bs;
            list.push_back(item);
        } else {
            std::cout << alpha << "\n";
        }
        ++n;
    }
    if (a.format == "json")
        std::cout << json{{"k", a.k}, {"level", level_name(level)}, {"count", n}, {"rules", list}}.dump(2)
                  << "\n";
    return kExitOk;
}

// ---- lattice ------------------------------------------------------------

struct LatticeArgs {
    std::string lattice;
    std::string dims;
    unsigned layers = 2;
    std::string exp = "report";
    std::string output;
    std::string format = "text";
};

int cmd_lattice(const LatticeArgs& a) {
    auto lattice = build_lattice(a.lattice, a.dims, a.layers);
    int passed = 0;
    char* report = nullptr;
    check(symca_lattice_validate(lattice.get(), &passed, &report), "validate");
    std::string report_text = take(report);
    char* s = nullptr;
    if (a.exp == "edges") {
        check(symca_lattice_export_edges(lattice.get(), &s), "export");
        write_output(a.output, take(s));
    } else if (a.exp == "faces") {
        check(symca_lattice_export_faces(lattice.get(), &s), "export");
        write_output(a.output, take(s));
    } else if (a.exp == "embedding") {
        check(symca_lattice_export_embedding(lattice.get(), &s), "export");
        write_output(a.output, take(s));
    } else if (a.exp == "report") {
        if (a.format == "json") {
            json j = lattice_json(lattice.get());
            j["valid"] = passed != 0;
            json checks = json::array();
            std::istringstream lines(report_text);
            for (std::string line; std::getline(lines, line);)
                checks.push_back(line);
            j["checks"] = checks;
            write_output(a.output, j.dump(2) + "\n");
        } else {
            auto info = info_of(lattice.get());
            std::ostringstream out;
            out << "cells " << info.cells << "\nvalence " << info.valence << "\nsurface "
                << surface_name(info.surface) << "\nedges " << info.edges << "\nfaces " << info.faces
                << "\nboundary_cells " << info.boundary_cells << "\n"
                << report_text;
            write_output(a.output, out.str());
        }
    } else {
        throw Failure{"unknown --export '" + a.exp + "'"};
    }
    return passed ? kExitOk : kExitVerificationFailed;
}

// ---- run ----------------------------------------------------------------

struct RunArgs {
    std::string rule;
    unsigned q = 2;
    std::string lattice;
    std::string dims;
    unsigned layers = 2;
    std::string state_file;
    std::string pattern_file;
    std::string offset = "0,0";
    std::optional<std::uint64_t> seed;
    std::uint64_t steps = 0;
    std::uint64_t max_steps = 0;
    unsigned workers = 1;
    std::string format = "text";
    std::string output;
    std::string census_file;
    bool interior = false;
};

int cmd_run(const RunArgs& a) {
    auto lattice = build_lattice(a.lattice, a.dims, a.layers);
    auto info = info_of(lattice.get());
    auto rule = parse_rule(a.rule, a.q, info.valence);
    unsigned q = 0;
    check(symca_rule_info(rule.get(), &q, nullptr, nullptr), "rule");

    symca_state* raw = nullptr;
    if (!a.state_file.empty()) {
        check(symca_state_load(read_file(a.state_file).c_str(), lattice.get(), &raw), "state");
    } else if (a.seed) {
        check(symca_state_random(q, info.cells, *a.seed, &raw), "state");
    } else {
        check(symca_state_create(q, info.cells, &raw), "state");
    }
    State state(raw);
    if (!a.pattern_file.empty()) {
        auto [dx, dy] = parse_pair(a.offset, ',', "--offset X,Y");
        symca_state* placed = nullptr;
        check(symca_state_place_rle(state.get(), lattice.get(), read_file(a.pattern_file).c_str(), dx, dy,
                                    &placed),
              "pattern");
        state.reset(placed);
    }

    symca_engine_options options{a.workers, SYMCA_PATH_AUTO};
    symca_run* run_raw = nullptr;
    check(symca_run_create(lattice.get(), rule.get(), state.get(), a.steps, &options, a.interior ? 1 : 0,
                           &run_raw),
          "run");
    Run run(run_raw);
    symca_state* fin_raw = nullptr;
    check(symca_run_final_state(run.get(), &fin_raw), "run");
    State final_state(fin_raw);

    std::size_t generations = 0;
    unsigned states = 0;
    const std::uint64_t* census = nullptr;
    check(symca_run_census(run.get(), &generations, &states, &census), "census");

    std::optional<std::pair<std::uint64_t, std::uint64_t>> cycle;
    bool searched = a.max_steps > 0;
    if (searched) {
        int found = 0;
        std::uint64_t transient = 0, period = 0;
        check(symca_detect_cycle(lattice.get(), rule.get(), state.get(), a.max_steps, &options, &found,
                                 &transient, &period),
              "cycle");
        if (found)
            cycle = {transient, period};
    }

    if (!a.census_file.empty() || a.format == "csv") {
        std::ostringstream csv;
        csv << "generation";
        for (unsigned s = 0; s < states; ++s)
            csv << ",state" << s;
        csv << "\n";
        for (std::size_t g = 0; g < generations; ++g) {
            csv << g;
            for (unsigned s = 0; s < states; ++s)
                csv << "," << census[g * states + s];
            csv << "\n";
        }
        if (a.format == "csv")
            write_output(a.output, csv.str());
        if (!a.census_file.empty())
            write_output(a.census_file, csv.str());
    }

    if (a.format == "json") {
        json j;
        j["rule"] = alpha_of(rule.get());
        j["lattice"] = lattice_json(lattice.get());
        j["steps"] = a.steps;
        const std::uint8_t* cells = nullptr;
        std::size_t count = 0;
        check(symca_state_cells(final_state.get(), &cells, &count), "state");
        j["final_state"] = std::vector<int>(cells, cells + count);
        json rows = json::array();
        for (std::size_t g = 0; g < generations; ++g)
            rows.push_back(std::vector<std::uint64_t>(census + g * states, census + (g + 1) * states));
        j["census"] = rows;
        if (searched)
            j["cycle"] = cycle ? json{{"transient", cycle->first}, {"period", cycle->second}} : json(nullptr);
        write_output(a.output, j.dump(2) + "\n");
    } else if (a.format == "text") {
        char* s = nullptr;
        if (a.output.empty() || a.output == "-") {
            check(symca_state_render(final_state.get(), lattice.get(), &s), "render");
            std::cout << take(s);
            std::cout << "census";
            for (unsigned st = 0; st < states; ++st)
                std::cout << " " << census[(generations - 1) * states + st];
            std::cout << "\n";
        } else {
            check(symca_state_save(final_state.get(), lattice.get(), &s), "state");
            write_output(a.output, take(s));
        }
        if (searched) {
            if (cycle)
                std::cout << "cycle transient " << cycle->first << " period " << cycle->second << "\n";
            else
                std::cout << "cycle none within " << a.max_steps << " steps\n";
        }
    }
    return kExitOk;
}

// ---- poly ---------------------------------------------------------------

struct PolyArgs {
    std::string rule;
    unsigned k = 8;
    bool show = false;
    std::string format = "text";
};

int cmd_poly(const PolyArgs& a) {
    auto rule = parse_rule(a.rule, 2, a.k);
    symca_poly* raw = nullptr;
    check(symca_poly_from_rule(rule.get(), &raw), "poly");
    Poly poly(raw);
    unsigned degree = 0;
    std::size_t terms = 0;
    check(symca_poly_info(poly.get(), &degree, &terms, nullptr), "poly");
    char* s = nullptr;
    check(symca_poly_format(poly.get(), &s), "poly");
    std::string text = take(s);
    if (a.format == "json") {
        json j{{"rule", alpha_of(rule.get())}, {"degree", degree}, {"terms", terms}, {"anf", text}};
        if (auto bs = bs_of(rule.get()))
            j["bs"] = *bs;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "degree " << degree << "\nterms " << terms << "\n";
        if (a.show)
            std::cout << text << "\n";
    }
    return kExitOk;
}

// ---- verify-decomposition -----------------------------------------------

struct VerifyArgs {
    std::string rule;
    std::string relation;
    unsigned k = 8;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
    symca_verification* raw = nullptr;
    if (a.relation.empty()) {
        check(symca_verify_decomposition(a.rule.c_str(), &raw), "verify");
    } else {
        auto rule = parse_rule(a.rule, 2, a.k);
        check(symca_verify_relation(rule.get(), a.relation.c_str(), &raw), "verify");
    }
    Verification v(raw);
    std::size_t count = 0;
    check(symca_verification_count(v.get(), &count), "verify");
    bool all = true;
    json list = json::array();
    for (std::size_t i = 0; i < count; ++i) {
        symca_relation_result r{};
        check(symca_verification_get(v.get(), i, &r), "verify");
        all = all && r.holds;
        json item{{"index", i + 1},
                  {"relation", r.relation},
                  {"holds", r.holds != 0},
                  {"tuples_checked", r.tuples_checked},
                  {"assignments_per_tuple", r.assignments_per_tuple}};
        if (!r.holds) {
            item["failing_tuple"] = r.failing_tuple;
            item["failing_assignment"] = r.failing_assignment;
        }
        list.push_back(item);
        if (a.format != "json") {
            std::cout << (r.holds ? "PASS " : "FAIL ") << (i + 1) << " " << r.relation << " (" << r.tuples_checked
                      << " tuples x " << r.assignments_per_tuple << " assignments)\n";
            if (!r.holds)
                std::cout << "  tuple " << r.failing_tuple << "\n  assignment " << r.failing_assignment << "\n";
        }
    }
    if (a.format == "json")
        std::cout << json{{"rule", a.rule}, {"all_hold", all}, {"relations", list}}.dump(2) << "\n";
    return all ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric-rule cellular automata toolkit"};
    app.set_version_flag("--version", std::string(symca_version()));
    app.require_subcommand(1);

    CountArgs count;
    auto* c = app.add_subcommand("count", "Count symmetric rules, BW-fixed rules and BW orbits");
    c->add_option("-q,--states", count.q, "Number of cell states")->check(CLI::Range(2u, 255u));
    c->add_option("-k,--valence", count.k, "Number of neighbours")->check(CLI::Range(0u, 64u));
    c->add_option("--level", count.level, "leaves or full")->check(CLI::IsMember({"leaves", "full"}));
    c->add_flag("--bruteforce", count.bruteforce, "Also count orbits by exhaustive Burnside enumeration");
    c->add_option("--cap", count.cap, "Enumeration cap for brute force (0 = default)");
    c->add_option("--workers", count.workers, "Worker threads for brute force");
    c->add_option("--format", count.format)->check(CLI::IsMember({"json", "text"}));

    EnumerateArgs en;
    auto* e = app.add_subcommand("enumerate", "Stream canonical BW-orbit representatives as alpha strings");
    e->add_option("-k,--valence", en.k)->check(CLI::Range(0u, 64u));
    e->add_option("--level", en.level)->check(CLI::IsMember({"leaves", "full"}));
    e->add_option("--cap", en.cap, "Refuse to enumerate more than this many rules (0 = default)");
    e->add_option("--limit", en.limit, "Stop after this many representatives");
    e->add_option("--format", en.format)->check(CLI::IsMember({"json", "text"}));

    LatticeArgs la;
    auto* l = app.add_subcommand("lattice", "Build a lattice, validate it and export it");
    l->add_option("--lattice", la.lattice,
                  "torus:P,K | klein:P,K | moore:torus|klein | platonic:P,K | hyperbolic:P,K | c60 | faces:PATH")
        ->required();
    l->add_option("--dims", la.dims, "Grid size WxH for periodic lattices");
    l->add_option("--layers", la.layers, "Layers for hyperbolic patches");
    l->add_option("--export", la.exp)->check(CLI::IsMember({"report", "edges", "faces", "embedding"}));
    l->add_option("-o,--output", la.output, "Output file (default stdout)");
    l->add_option("--format", la.format)->check(CLI::IsMember({"json", "text", "csv"}));

    RunArgs ru;
    auto* r = app.add_subcommand("run", "Evolve a state and report the final state and census");
    r->add_option("--rule", ru.rule, "Alpha string or B/S notation")->required();
    r->add_option("-q,--states", ru.q)->check(CLI::Range(2u, 255u));
    r->add_option("--lattice", ru.lattice)->required();
    r->add_option("--dims", ru.dims);
    r->add_option("--layers", ru.layers);
    auto* state_opt = r->add_option("--state", ru.state_file, "Initial state file");
    r->add_option("--pattern", ru.pattern_file, "RLE pattern placed on the initial state");
    r->add_option("--offset", ru.offset, "Pattern offset X,Y");
    auto* seed_opt = r->add_option("--seed", ru.seed, "Seed for a uniformly random initial state");
    seed_opt->excludes(state_opt);
    r->add_option("--steps", ru.steps)->required();
    r->add_option("--max-steps", ru.max_steps, "Search for a cycle within this many steps");
    r->add_option("--workers", ru.workers);
    r->add_flag("--interior", ru.interior, "Census over interior cells only");
    r->add_option("--format", ru.format)->check(CLI::IsMember({"json", "text", "csv"}));
    r->add_option("-o,--output", ru.output, "Output file (default stdout)");
    r->add_option("--census", ru.census_file, "Write the census time series as CSV");

    PolyArgs po;
    auto* p = app.add_subcommand("poly", "Algebraic normal form of a binary rule");
    p->add_option("--rule", po.rule)->required();
    p->add_option("-k,--valence", po.k);
    p->add_flag("--show", po.show, "Print the polynomial");
    p->add_option("--format", po.format)->check(CLI::IsMember({"json", "text"}));

    VerifyArgs ve;
    auto* v = app.add_subcommand("verify-decomposition", "Check the decomposition relations of a named rule");
    v->add_option("--rule", ve.rule, "ConwaysLife | HighLife | DayAndNight, or any rule with --relation")
        ->required();
    v->add_option("--relation", ve.relation, "Check this single relation instead of the stored set");
    v->add_option("-k,--valence", ve.k);
    v->add_option("--format", ve.format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c->parsed())
            return cmd_count(count);
        if (e->parsed())
            return cmd_enumerate(en);
        if (l->parsed())
            return cmd_lattice(la);
        if (r->parsed())
            return cmd_run(ru);
        if (p->parsed())
            return cmd_poly(po);
        if (v->parsed())
            return cmd_verify(ve);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
