#include "symca/symca.h"

#include "symca/bs_rule.hpp"
#include "symca/counting.hpp"
#include "symca/engine.hpp"
#include "symca/error.hpp"
#include "symca/f2poly.hpp"
#include "symca/lattice.hpp"
#include "symca/pattern.hpp"
#include "symca/relations.hpp"
#include "symca/rule.hpp"
#include "symca/state.hpp"

#include <cstring>
#include <memory>
#include <new>
#include <string>

struct symca_rule {
    symca::SymmetricRule value;
};

struct symca_orbit_enum {
    symca::OrbitRepEnumerator value;
};

struct symca_lattice {
    symca::Lattice value;
};

struct symca_state {
    symca::CAState value;
};

struct symca_run {
    symca::RunResult value;
    std::vector<std::uint64_t> flat_census;
};

struct symca_poly {
    symca::F2Poly value;
};

struct symca_verification {
    struct Entry {
        std::string relation;
        symca::RelationCheck check;
        std::string tuple;
        std::string assignment;
    };
    std::vector<Entry> entries;
};

namespace {

thread_local std::string last_error;

symca_status to_status(symca::ErrorCode code) {
    switch (code) {
    case symca::ErrorCode::Domain: return SYMCA_ERR_DOMAIN;
    case symca::ErrorCode::Parse: return SYMCA_ERR_PARSE;
    case symca::ErrorCode::Unsupported: return SYMCA_ERR_UNSUPPORTED;
    case symca::ErrorCode::CapExceeded: return SYMCA_ERR_CAP_EXCEEDED;
    case symca::ErrorCode::InvalidLattice: return SYMCA_ERR_INVALID_LATTICE;
    case symca::ErrorCode::Mismatch: return SYMCA_ERR_MISMATCH;
    case symca::ErrorCode::Io: return SYMCA_ERR_IO;
    }
    return SYMCA_ERR_INTERNAL;
}

symca_status fail(symca_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <class Fn>
symca_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return SYMCA_OK;
    } catch (const symca::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(SYMCA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SYMCA_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SYMCA_ERR_INTERNAL, "unknown error");
    }
}

template <class... Ptrs>
bool any_null(Ptrs... ptrs) {
    return ((ptrs == nullptr) || ...);
}

#define SYMCA_REQUIRE(...)                                                                         \
    do {                                                                                           \
        if (any_null(__VA_ARGS__))                                                                 \
            return fail(SYMCA_ERR_INVALID_ARGUMENT, "null argument");                              \
    } while (0)

char* copy_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

symca::Level to_level(symca_level level) {
    switch (level) {
    case SYMCA_LEVEL_LEAVES: return symca::Level::Leaves;
    case SYMCA_LEVEL_FULL: return symca::Level::Full;
    }
    throw symca::Error(symca::ErrorCode::Domain, "unknown symmetry level");
}

symca_level from_level(symca::Level level) {
    return level == symca::Level::Leaves ? SYMCA_LEVEL_LEAVES : SYMCA_LEVEL_FULL;
}

symca::Surface to_surface(symca_surface s) {
    switch (s) {
    case SYMCA_SURFACE_E2_PATCH: return symca::Surface::E2Patch;
    case SYMCA_SURFACE_TORUS: return symca::Surface::Torus;
    case SYMCA_SURFACE_KLEIN: return symca::Surface::Klein;
    case SYMCA_SURFACE_SPHERE: return symca::Surface::Sphere;
    case SYMCA_SURFACE_PROJECTIVE: return symca::Surface::Projective;
    case SYMCA_SURFACE_H2_PATCH: return symca::Surface::H2Patch;
    }
    throw symca::Error(symca::ErrorCode::Domain, "unknown surface");
}

symca_surface from_surface(symca::Surface s) {
    switch (s) {
    case symca::Surface::E2Patch: return SYMCA_SURFACE_E2_PATCH;
    case symca::Surface::Torus: return SYMCA_SURFACE_TORUS;
    case symca::Surface::Klein: return SYMCA_SURFACE_KLEIN;
    case symca::Surface::Sphere: return SYMCA_SURFACE_SPHERE;
    case symca::Surface::Projective: return SYMCA_SURFACE_PROJECTIVE;
    case symca::Surface::H2Patch: return SYMCA_SURFACE_H2_PATCH;
    }
    return SYMCA_SURFACE_E2_PATCH;
}

symca::EngineOptions to_options(const symca_engine_options* options) {
    symca::EngineOptions out;
    if (!options)
        return out;
    out.workers = options->workers == 0 ? 1 : options->workers;
    switch (options->path) {
    case SYMCA_PATH_AUTO: out.path = symca::StepPath::Auto; break;
    case SYMCA_PATH_GENERIC: out.path = symca::StepPath::Generic; break;
    case SYMCA_PATH_PACKED: out.path = symca::StepPath::Packed; break;
    default: throw symca::Error(symca::ErrorCode::Domain, "unknown step path");
    }
    return out;
}

template <class Handle, class Value>
Handle* wrap(Value&& value) {
    return new Handle{std::forward<Value>(value)};
}

} // namespace

extern "C" {

const char* symca_version(void) { return "1.0.0"; }

const char* symca_last_error(void) { return last_error.c_str(); }

const char* symca_status_name(symca_status status) {
    switch (status) {
    case SYMCA_OK: return "ok";
    case SYMCA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SYMCA_ERR_DOMAIN: return "domain error";
    case SYMCA_ERR_PARSE: return "parse error";
    case SYMCA_ERR_UNSUPPORTED: return "unsupported";
    case SYMCA_ERR_CAP_EXCEEDED: return "cap exceeded";
    case SYMCA_ERR_INVALID_LATTICE: return "invalid lattice";
    case SYMCA_ERR_MISMATCH: return "mismatch";
    case SYMCA_ERR_IO: return "i/o error";
    case SYMCA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void symca_string_free(char* text) { std::free(text); }

/* ---- rules ---- */

symca_status symca_rule_parse(const char* text, unsigned q, unsigned k, symca_rule** out) {
    SYMCA_REQUIRE(text, out);
    return guarded([&] { *out = wrap<symca_rule>(symca::parse_rule(text, k, q)); });
}

symca_status symca_rule_from_table(unsigned q, unsigned k, symca_level level, const uint8_t* table,
                                   size_t length, symca_rule** out) {
    SYMCA_REQUIRE(table, out);
    return guarded([&] {
        *out = wrap<symca_rule>(
            symca::SymmetricRule(q, k, to_level(level), std::vector<std::uint8_t>(table, table + length)));
    });
}

symca_status symca_rule_clone(const symca_rule* rule, symca_rule** out) {
    SYMCA_REQUIRE(rule, out);
    return guarded([&] { *out = wrap<symca_rule>(rule->value); });
}

void symca_rule_free(symca_rule* rule) { delete rule; }

symca_status symca_rule_info(const symca_rule* rule, unsigned* q, unsigned* k, symca_level* level) {
    SYMCA_REQUIRE(rule);
    if (q)
        *q = rule->value.states();
    if (k)
        *k = rule->value.valence();
    if (level)
        *level = from_level(rule->value.level());
    return SYMCA_OK;
}

symca_status symca_rule_table(const symca_rule* rule, const uint8_t** table, size_t* length) {
    SYMCA_REQUIRE(rule, table, length);
    *table = rule->value.table().data();
    *length = rule->value.table().size();
    return SYMCA_OK;
}

symca_status symca_rule_apply(const symca_rule* rule, const unsigned* leaf_counts, size_t count,
                              uint8_t center, uint8_t* out) {
    SYMCA_REQUIRE(rule, leaf_counts, out);
    return guarded([&] { *out = rule->value.apply(std::span<const unsigned>(leaf_counts, count), center); });
}

symca_status symca_rule_format_alpha(const symca_rule* rule, char** out) {
    SYMCA_REQUIRE(rule, out);
    return guarded([&] { *out = copy_string(symca::format_alpha(rule->value)); });
}

symca_status symca_rule_format_bs(const symca_rule* rule, char** out) {
    SYMCA_REQUIRE(rule, out);
    return guarded([&] { *out = copy_string(symca::format_bs(symca::rule_to_bs(rule->value))); });
}

symca_status symca_rule_bw_transform(const symca_rule* rule, symca_rule** out) {
    SYMCA_REQUIRE(rule, out);
    return guarded([&] { *out = wrap<symca_rule>(symca::bw_transform(rule->value)); });
}

symca_status symca_rule_is_bw_symmetric(const symca_rule* rule, int* out) {
    SYMCA_REQUIRE(rule, out);
    return guarded([&] { *out = symca::is_bw_symmetric(rule->value) ? 1 : 0; });
}

symca_status symca_rule_canonical(const symca_rule* rule, symca_rule** out) {
    SYMCA_REQUIRE(rule, out);
    return guarded([&] { *out = wrap<symca_rule>(symca::canonical_rep(rule->value)); });
}

symca_status symca_rule_equal(const symca_rule* a, const symca_rule* b, int* out) {
    SYMCA_REQUIRE(a, b, out);
    *out = a->value == b->value ? 1 : 0;
    return SYMCA_OK;
}

/* ---- counting ---- */

symca_status symca_count_rules(unsigned q, unsigned k, symca_level level, char** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] { *out = copy_string(symca::count_rules(q, k, to_level(level)).str()); });
}

symca_status symca_count_bw_fixed(unsigned k, symca_level level, char** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] { *out = copy_string(symca::count_bw_fixed(k, to_level(level)).str()); });
}

symca_status symca_count_orbits_closed(unsigned k, symca_level level, char** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] { *out = copy_string(symca::count_orbits_closed(k, to_level(level)).str()); });
}

symca_status symca_count_orbits_bruteforce(unsigned q, unsigned k, symca_level level, uint64_t cap,
                                           unsigned workers, uint64_t* out) {
    SYMCA_REQUIRE(out);
    return guarded([&] {
        symca::BruteForceOptions options;
        if (cap)
            options.cap = cap;
        options.workers = workers ? workers : 1;
        *out = symca::count_orbits_bruteforce(q, k, to_level(level), options);
    });
}

symca_status symca_orbit_enum_create(unsigned k, symca_level level, uint64_t cap, symca_orbit_enum** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] {
        *out = wrap<symca_orbit_enum>(
            symca::OrbitRepEnumerator(k, to_level(level), cap ? cap : symca::kDefaultEnumerationCap));
    });
}

symca_status symca_orbit_enum_next(symca_orbit_enum* e, symca_rule** out) {
    SYMCA_REQUIRE(e, out);
    return guarded([&] {
        auto next = e->value.next();
        *out = next ? wrap<symca_rule>(std::move(*next)) : nullptr;
    });
}

void symca_orbit_enum_free(symca_orbit_enum* e) { delete e; }

/* ---- lattices ---- */

symca_status symca_lattice_build_euclidean(unsigned p, unsigned k, symca_surface surface,
                                           unsigned width, unsigned height, symca_lattice** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] {
        *out = wrap<symca_lattice>(
            symca::build_euclidean({p, k}, to_surface(surface), {width, height}));
    });
}

symca_status symca_lattice_build_moore(symca_surface surface, unsigned width, unsigned height,
                                       symca_lattice** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] {
        *out = wrap<symca_lattice>(symca::build_moore(to_surface(surface), {width, height}));
    });
}

symca_status symca_lattice_build_platonic(unsigned p, unsigned k, symca_lattice** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] { *out = wrap<symca_lattice>(symca::build_platonic({p, k})); });
}

symca_status symca_lattice_build_hyperbolic(unsigned p, unsigned k, unsigned layers, symca_lattice** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] { *out = wrap<symca_lattice>(symca::build_hyperbolic_patch(p, k, layers)); });
}

symca_status symca_lattice_build_c60(symca_lattice** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] { *out = wrap<symca_lattice>(symca::build_fullerene_c60()); });
}

symca_status symca_lattice_build_fullerene(const char* face_list, symca_lattice** out) {
    SYMCA_REQUIRE(face_list, out);
    return guarded([&] {
        *out = wrap<symca_lattice>(symca::build_fullerene(symca::parse_face_list(face_list)));
    });
}

void symca_lattice_free(symca_lattice* lattice) { delete lattice; }

symca_status symca_lattice_info_get(const symca_lattice* lattice, symca_lattice_info* out) {
    SYMCA_REQUIRE(lattice, out);
    const auto& l = lattice->value;
    *out = symca_lattice_info{};
    out->cells = l.cells();
    out->valence = l.valence();
    out->surface = from_surface(l.surface());
    out->edges = l.edge_count();
    out->faces = l.faces().size();
    out->boundary_cells = l.boundary_count();
    if (l.schlafli()) {
        out->schlafli_p = l.schlafli()->p;
        out->schlafli_k = l.schlafli()->k;
    }
    if (l.grid()) {
        out->grid_width = l.grid()->width;
        out->grid_height = l.grid()->height;
    }
    out->has_embedding = l.embedding_kind() != symca::EmbeddingKind::None;
    return SYMCA_OK;
}

symca_status symca_lattice_neighbors(const symca_lattice* lattice, size_t cell,
                                     const uint32_t** neighbors, size_t* count) {
    SYMCA_REQUIRE(lattice, neighbors, count);
    if (cell >= lattice->value.cells())
        return fail(SYMCA_ERR_DOMAIN, "cell index out of range");
    auto nb = lattice->value.neighbors(cell);
    *neighbors = nb.data();
    *count = nb.size();
    return SYMCA_OK;
}

symca_status symca_lattice_is_boundary(const symca_lattice* lattice, size_t cell, int* out) {
    SYMCA_REQUIRE(lattice, out);
    if (cell >= lattice->value.cells())
        return fail(SYMCA_ERR_DOMAIN, "cell index out of range");
    *out = lattice->value.is_boundary(cell) ? 1 : 0;
    return SYMCA_OK;
}

symca_status symca_lattice_euler(const symca_lattice* lattice, long* out) {
    SYMCA_REQUIRE(lattice, out);
    return guarded([&] { *out = symca::euler_characteristic(lattice->value); });
}

symca_status symca_lattice_validate(const symca_lattice* lattice, int* passed, char** report) {
    SYMCA_REQUIRE(lattice, passed, report);
    return guarded([&] {
        auto r = symca::validate(lattice->value);
        std::string text;
        for (const auto& c : r.checks)
            text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
        *report = copy_string(text);
        *passed = r.passed() ? 1 : 0;
    });
}

symca_status symca_lattice_export_edges(const symca_lattice* lattice, char** out) {
    SYMCA_REQUIRE(lattice, out);
    return guarded([&] { *out = copy_string(symca::format_edge_list(lattice->value)); });
}

symca_status symca_lattice_export_faces(const symca_lattice* lattice, char** out) {
    SYMCA_REQUIRE(lattice, out);
    return guarded([&] {
        if (!lattice->value.has_faces())
            throw symca::Error(symca::ErrorCode::Unsupported, "lattice carries no faces");
        *out = copy_string(symca::format_face_list(lattice->value.faces()));
    });
}

symca_status symca_lattice_export_embedding(const symca_lattice* lattice, char** out) {
    SYMCA_REQUIRE(lattice, out);
    return guarded([&] { *out = copy_string(symca::format_embedding_csv(lattice->value)); });
}

symca_status symca_classify_tiling(unsigned p, unsigned k, symca_tiling_kind* kind, long* vertices,
                                   long* edges, long* faces) {
    SYMCA_REQUIRE(kind);
    return guarded([&] {
        auto c = symca::classify_tiling(p, k);
        *kind = c.kind == symca::TilingKind::Spherical   ? SYMCA_TILING_SPHERICAL
                : c.kind == symca::TilingKind::Euclidean ? SYMCA_TILING_EUCLIDEAN
                                                         : SYMCA_TILING_HYPERBOLIC;
        if (vertices)
            *vertices = c.vertices;
        if (edges)
            *edges = c.edges;
        if (faces)
            *faces = c.faces;
    });
}

symca_status symca_fullerene_counts(long hexagons, long chi, long* pentagons, long* vertices, long* edges) {
    SYMCA_REQUIRE(pentagons, vertices, edges);
    return guarded([&] {
        auto c = symca::fullerene_counts(hexagons, chi);
        *pentagons = c.pentagons;
        *vertices = c.vertices;
        *edges = c.edges;
    });
}

/* ---- states ---- */

symca_status symca_state_create(unsigned q, size_t cells, symca_state** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] { *out = wrap<symca_state>(symca::CAState::filled(q, cells)); });
}

symca_status symca_state_random(unsigned q, size_t cells, uint64_t seed, symca_state** out) {
    SYMCA_REQUIRE(out);
    return guarded([&] { *out = wrap<symca_state>(symca::CAState::random(q, cells, seed)); });
}

symca_status symca_state_from_cells(unsigned q, const uint8_t* cells, size_t count, uint64_t generation,
                                    symca_state** out) {
    SYMCA_REQUIRE(out);
    if (count > 0 && !cells)
        return fail(SYMCA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = wrap<symca_state>(
            symca::CAState(q, std::vector<std::uint8_t>(cells, cells + count), generation));
    });
}

void symca_state_free(symca_state* state) { delete state; }

symca_status symca_state_info(const symca_state* state, unsigned* q, size_t* cells, uint64_t* generation) {
    SYMCA_REQUIRE(state);
    if (q)
        *q = state->value.states();
    if (cells)
        *cells = state->value.size();
    if (generation)
        *generation = state->value.generation();
    return SYMCA_OK;
}

symca_status symca_state_cells(const symca_state* state, const uint8_t** cells, size_t* count) {
    SYMCA_REQUIRE(state, cells, count);
    *cells = state->value.cells().data();
    *count = state->value.size();
    return SYMCA_OK;
}

symca_status symca_state_load(const char* text, const symca_lattice* lattice, symca_state** out) {
    SYMCA_REQUIRE(text, lattice, out);
    return guarded([&] { *out = wrap<symca_state>(symca::parse_state(text, lattice->value)); });
}

symca_status symca_state_save(const symca_state* state, const symca_lattice* lattice, char** out) {
    SYMCA_REQUIRE(state, lattice, out);
    return guarded([&] { *out = copy_string(symca::format_state(state->value, lattice->value)); });
}

symca_status symca_state_render(const symca_state* state, const symca_lattice* lattice, char** out) {
    SYMCA_REQUIRE(state, lattice, out);
    return guarded([&] { *out = copy_string(symca::render_grid(state->value, lattice->value)); });
}

symca_status symca_state_place_rle(const symca_state* state, const symca_lattice* lattice, const char* rle,
                                   unsigned dx, unsigned dy, symca_state** out) {
    SYMCA_REQUIRE(state, lattice, rle, out);
    return guarded([&] {
        auto pattern = symca::import_rle(rle);
        *out = wrap<symca_state>(symca::place_pattern(state->value, lattice->value, pattern, dx, dy));
    });
}

symca_status symca_rle_info(const char* rle, unsigned* width, unsigned* height, size_t* live_cells) {
    SYMCA_REQUIRE(rle);
    return guarded([&] {
        auto pattern = symca::import_rle(rle);
        if (width)
            *width = pattern.width;
        if (height)
            *height = pattern.height;
        if (live_cells)
            *live_cells = pattern.live.size();
    });
}

symca_status symca_state_complement(const symca_state* state, symca_state** out) {
    SYMCA_REQUIRE(state, out);
    return guarded([&] { *out = wrap<symca_state>(symca::complement(state->value)); });
}

symca_status symca_state_census(const symca_state* state, const symca_lattice* lattice, int interior_only,
                                uint64_t* counts, size_t capacity) {
    SYMCA_REQUIRE(state, lattice, counts);
    if (capacity < state->value.states())
        return fail(SYMCA_ERR_INVALID_ARGUMENT, "census buffer smaller than the state count");
    return guarded([&] {
        auto c = symca::census(state->value, lattice->value, interior_only != 0);
        std::copy(c.begin(), c.end(), counts);
    });
}

/* ---- engine ---- */

symca_status symca_step(const symca_lattice* lattice, const symca_rule* rule, const symca_state* state,
                        const symca_engine_options* options, symca_state** out) {
    SYMCA_REQUIRE(lattice, rule, state, out);
    return guarded([&] {
        *out = wrap<symca_state>(symca::step(lattice->value, rule->value, state->value, to_options(options)));
    });
}

symca_status symca_run_create(const symca_lattice* lattice, const symca_rule* rule, const symca_state* state,
                              uint64_t steps, const symca_engine_options* options, int interior_census,
                              symca_run** out) {
    SYMCA_REQUIRE(lattice, rule, state, out);
    return guarded([&] {
        auto result = symca::run(lattice->value, rule->value, state->value, steps, to_options(options),
                                 interior_census != 0);
        std::vector<std::uint64_t> flat;
        for (const auto& row : result.census)
            flat.insert(flat.end(), row.begin(), row.end());
        *out = new symca_run{std::move(result), std::move(flat)};
    });
}

symca_status symca_run_final_state(const symca_run* run, symca_state** out) {
    SYMCA_REQUIRE(run, out);
    return guarded([&] { *out = wrap<symca_state>(run->value.final_state); });
}

symca_status symca_run_census(const symca_run* run, size_t* generations, unsigned* q, const uint64_t** data) {
    SYMCA_REQUIRE(run, generations, q, data);
    *generations = run->value.census.size();
    *q = run->value.final_state.states();
    *data = run->flat_census.data();
    return SYMCA_OK;
}

void symca_run_free(symca_run* run) { delete run; }

symca_status symca_detect_cycle(const symca_lattice* lattice, const symca_rule* rule, const symca_state* state,
                                uint64_t max_steps, const symca_engine_options* options, int* found,
                                uint64_t* transient, uint64_t* period) {
    SYMCA_REQUIRE(lattice, rule, state, found, transient, period);
    return guarded([&] {
        auto cycle = symca::detect_cycle(lattice->value, rule->value, state->value, max_steps,
                                         to_options(options));
        *found = cycle ? 1 : 0;
        *transient = cycle ? cycle->transient : 0;
        *period = cycle ? cycle->period : 0;
    });
}

/* ---- polynomials ---- */

symca_status symca_poly_from_rule(const symca_rule* rule, symca_poly** out) {
    SYMCA_REQUIRE(rule, out);
    return guarded([&] { *out = wrap<symca_poly>(symca::rule_to_anf(rule->value)); });
}

symca_status symca_poly_fixture(const char* name, symca_poly** out) {
    SYMCA_REQUIRE(name, out);
    return guarded([&] {
        *out = wrap<symca_poly>(symca::life_polynomial_fixture(symca::parse_named_rule(name)));
    });
}

symca_status symca_poly_parse(const char* text, unsigned leaves, symca_poly** out) {
    SYMCA_REQUIRE(text, out);
    return guarded([&] { *out = wrap<symca_poly>(symca::parse_polynomial(text, leaves)); });
}

void symca_poly_free(symca_poly* poly) { delete poly; }

symca_status symca_poly_info(const symca_poly* poly, unsigned* degree, size_t* terms, unsigned* leaves) {
    SYMCA_REQUIRE(poly);
    if (degree)
        *degree = poly->value.degree();
    if (terms)
        *terms = poly->value.terms();
    if (leaves)
        *leaves = poly->value.leaves();
    return SYMCA_OK;
}

symca_status symca_poly_format(const symca_poly* poly, char** out) {
    SYMCA_REQUIRE(poly, out);
    return guarded([&] { *out = copy_string(symca::format_poly(poly->value)); });
}

symca_status symca_poly_equal(const symca_poly* a, const symca_poly* b, int* out) {
    SYMCA_REQUIRE(a, b, out);
    *out = a->value == b->value ? 1 : 0;
    return SYMCA_OK;
}

symca_status symca_poly_eval(const symca_poly* poly, uint32_t values, uint32_t defined, int* out) {
    SYMCA_REQUIRE(poly, out);
    return guarded([&] { *out = poly->value.eval(values, defined) ? 1 : 0; });
}

namespace {

symca_verification::Entry check_entry(const symca::SymmetricRule& rule, const symca::RelationTemplate& t) {
    symca_verification::Entry e{t.text(), symca::verify_implied_relation(rule, t), "", ""};
    if (e.check.counterexample) {
        const auto& cx = *e.check.counterexample;
        std::string tuple;
        for (std::size_t i = 0; i < cx.hole_values.size(); ++i) {
            if (i)
                tuple += ",";
            tuple += std::string(1, t.holes()[i]) + "=" + std::to_string(cx.hole_values[i]);
        }
        e.tuple = tuple.empty() ? "(no holes)" : tuple;
        e.assignment = symca::format_assignment(cx.assignment, t.leaves());
    }
    return e;
}

} // namespace

symca_status symca_verify_decomposition(const char* name, symca_verification** out) {
    SYMCA_REQUIRE(name, out);
    return guarded([&] {
        auto which = symca::parse_named_rule(name);
        auto rule = symca::bs_to_rule(symca::named_rule_bs(which));
        auto v = std::make_unique<symca_verification>();
        for (const auto& t : symca::decomposition_fixture(which))
            v->entries.push_back(check_entry(rule, t));
        if (which == symca::NamedRule::DayAndNight)
            v->entries.push_back(check_entry(rule, symca::day_and_night_combined_relation()));
        *out = v.release();
    });
}

symca_status symca_verify_relation(const symca_rule* rule, const char* relation, symca_verification** out) {
    SYMCA_REQUIRE(rule, relation, out);
    return guarded([&] {
        auto v = std::make_unique<symca_verification>();
        symca::RelationTemplate t(relation, rule->value.valence());
        v->entries.push_back(check_entry(rule->value, t));
        *out = v.release();
    });
}

symca_status symca_verification_count(const symca_verification* v, size_t* count) {
    SYMCA_REQUIRE(v, count);
    *count = v->entries.size();
    return SYMCA_OK;
}

symca_status symca_verification_get(const symca_verification* v, size_t index, symca_relation_result* out) {
    SYMCA_REQUIRE(v, out);
    if (index >= v->entries.size())
        return fail(SYMCA_ERR_DOMAIN, "relation index out of range");
    const auto& e = v->entries[index];
    out->relation = e.relation.c_str();
    out->holds = e.check.holds ? 1 : 0;
    out->tuples_checked = e.check.tuples_checked;
    out->assignments_per_tuple = e.check.assignments_per_tuple;
    out->failing_tuple = e.tuple.c_str();
    out->failing_assignment = e.assignment.c_str();
    return SYMCA_OK;
}

void symca_verification_free(symca_verification* v) { delete v; }

} // extern "C"
