/*
 * C interface to the symca library: symmetric-rule cellular automata,
 * rule counting, regular lattices, GF(2) rule polynomials and simulation.
 *
 * Conventions
 *   - Every fallible call returns a symca_status; SYMCA_OK is zero.
 *   - On failure, symca_last_error() describes the problem. The message is
 *     thread-local and stays valid until the next failing call on the same
 *     thread.
 *   - Objects are opaque handles created by symca_*_create / _build / _parse
 *     functions and released with the matching _free function. Free
 *     functions accept NULL.
 *   - Strings returned through char** are owned by the caller and must be
 *     released with symca_string_free().
 *   - Handles are immutable after creation and may be shared across
 *     threads, except symca_orbit_enum, which is single-consumer.
 */
#ifndef SYMCA_SYMCA_H
#define SYMCA_SYMCA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SYMCA_BUILDING_LIBRARY)
#    define SYMCA_API __declspec(dllexport)
#  else
#    define SYMCA_API __declspec(dllimport)
#  endif
#else
#  define SYMCA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symca_status {
    SYMCA_OK = 0,
    SYMCA_ERR_INVALID_ARGUMENT = 1, /* null handle, bad enum value */
    SYMCA_ERR_DOMAIN = 2,           /* argument outside the operation's domain */
    SYMCA_ERR_PARSE = 3,            /* malformed text input */
    SYMCA_ERR_UNSUPPORTED = 4,      /* valid input the operation does not handle */
    SYMCA_ERR_CAP_EXCEEDED = 5,     /* enumeration or size cap hit */
    SYMCA_ERR_INVALID_LATTICE = 6,  /* lattice or face list fails validation */
    SYMCA_ERR_MISMATCH = 7,         /* incompatible rule / lattice / state */
    SYMCA_ERR_IO = 8,
    SYMCA_ERR_INTERNAL = 9
} symca_status;

typedef enum symca_level {
    SYMCA_LEVEL_LEAVES = 0, /* invariant under permutations of the k leaves */
    SYMCA_LEVEL_FULL = 1    /* invariant under permutations of all k+1 cells */
} symca_level;

typedef enum symca_surface {
    SYMCA_SURFACE_E2_PATCH = 0,
    SYMCA_SURFACE_TORUS = 1,
    SYMCA_SURFACE_KLEIN = 2,
    SYMCA_SURFACE_SPHERE = 3,
    SYMCA_SURFACE_PROJECTIVE = 4,
    SYMCA_SURFACE_H2_PATCH = 5
} symca_surface;

typedef enum symca_tiling_kind {
    SYMCA_TILING_SPHERICAL = 0,
    SYMCA_TILING_EUCLIDEAN = 1,
    SYMCA_TILING_HYPERBOLIC = 2
} symca_tiling_kind;

typedef enum symca_step_path {
    SYMCA_PATH_AUTO = 0,
    SYMCA_PATH_GENERIC = 1,
    SYMCA_PATH_PACKED = 2
} symca_step_path;

typedef struct symca_rule symca_rule;
typedef struct symca_orbit_enum symca_orbit_enum;
typedef struct symca_lattice symca_lattice;
typedef struct symca_state symca_state;
typedef struct symca_run symca_run;
typedef struct symca_poly symca_poly;
typedef struct symca_verification symca_verification;

SYMCA_API const char* symca_version(void);
SYMCA_API const char* symca_last_error(void);
SYMCA_API const char* symca_status_name(symca_status status);
SYMCA_API void symca_string_free(char* text);

/* ---- rules --------------------------------------------------------------- */

/* Alpha digit string (level inferred from its length) or, for q = 2,
 * B/S notation such as "B3/S23". */
SYMCA_API symca_status symca_rule_parse(const char* text, unsigned q, unsigned k, symca_rule** out);
SYMCA_API symca_status symca_rule_from_table(unsigned q, unsigned k, symca_level level,
                                             const uint8_t* table, size_t length, symca_rule** out);
SYMCA_API symca_status symca_rule_clone(const symca_rule* rule, symca_rule** out);
SYMCA_API void symca_rule_free(symca_rule* rule);

SYMCA_API symca_status symca_rule_info(const symca_rule* rule, unsigned* q, unsigned* k,
                                       symca_level* level);
/* The table stays owned by the rule. */
SYMCA_API symca_status symca_rule_table(const symca_rule* rule, const uint8_t** table, size_t* length);
/* leaf_counts[s] = number of leaves in state s; count must equal q. */
SYMCA_API symca_status symca_rule_apply(const symca_rule* rule, const unsigned* leaf_counts,
                                        size_t count, uint8_t center, uint8_t* out);
SYMCA_API symca_status symca_rule_format_alpha(const symca_rule* rule, char** out);
SYMCA_API symca_status symca_rule_format_bs(const symca_rule* rule, char** out);
SYMCA_API symca_status symca_rule_bw_transform(const symca_rule* rule, symca_rule** out);
SYMCA_API symca_status symca_rule_is_bw_symmetric(const symca_rule* rule, int* out);
SYMCA_API symca_status symca_rule_canonical(const symca_rule* rule, symca_rule** out);
SYMCA_API symca_status symca_rule_equal(const symca_rule* a, const symca_rule* b, int* out);

/* ---- counting: exact values as decimal strings ----------------------------- */

SYMCA_API symca_status symca_count_rules(unsigned q, unsigned k, symca_level level, char** out);
SYMCA_API symca_status symca_count_bw_fixed(unsigned k, symca_level level, char** out);
SYMCA_API symca_status symca_count_orbits_closed(unsigned k, symca_level level, char** out);
/* cap = 0 selects the default cap of 2^20 tables. */
SYMCA_API symca_status symca_count_orbits_bruteforce(unsigned q, unsigned k, symca_level level,
                                                     uint64_t cap, unsigned workers, uint64_t* out);

/* Streams canonical binary rules in lexicographic table order. */
SYMCA_API symca_status symca_orbit_enum_create(unsigned k, symca_level level, uint64_t cap,
                                               symca_orbit_enum** out);
/* Sets *out to NULL once the stream is exhausted. */
SYMCA_API symca_status symca_orbit_enum_next(symca_orbit_enum* e, symca_rule** out);
SYMCA_API void symca_orbit_enum_free(symca_orbit_enum* e);

/* ---- lattices ------------------------------------------------------------- */

typedef struct symca_lattice_info {
    size_t cells;
    unsigned valence;
    symca_surface surface;
    size_t edges;
    size_t faces;          /* 0 when the lattice carries no faces */
    size_t boundary_cells;
    unsigned schlafli_p;   /* 0 when not a regular tiling */
    unsigned schlafli_k;
    unsigned grid_width;   /* 0 when not a grid */
    unsigned grid_height;
    int has_embedding;
} symca_lattice_info;

SYMCA_API symca_status symca_lattice_build_euclidean(unsigned p, unsigned k, symca_surface surface,
                                                     unsigned width, unsigned height,
                                                     symca_lattice** out);
SYMCA_API symca_status symca_lattice_build_moore(symca_surface surface, unsigned width,
                                                 unsigned height, symca_lattice** out);
SYMCA_API symca_status symca_lattice_build_platonic(unsigned p, unsigned k, symca_lattice** out);
SYMCA_API symca_status symca_lattice_build_hyperbolic(unsigned p, unsigned k, unsigned layers,
                                                      symca_lattice** out);
SYMCA_API symca_status symca_lattice_build_c60(symca_lattice** out);
/* Face-list text: one face per line, space-separated 0-based indices. */
SYMCA_API symca_status symca_lattice_build_fullerene(const char* face_list, symca_lattice** out);
SYMCA_API void symca_lattice_free(symca_lattice* lattice);

SYMCA_API symca_status symca_lattice_info_get(const symca_lattice* lattice, symca_lattice_info* out);
SYMCA_API symca_status symca_lattice_neighbors(const symca_lattice* lattice, size_t cell,
                                               const uint32_t** neighbors, size_t* count);
SYMCA_API symca_status symca_lattice_is_boundary(const symca_lattice* lattice, size_t cell, int* out);
SYMCA_API symca_status symca_lattice_euler(const symca_lattice* lattice, long* out);
/* *passed is 1 when every check passes; the report has one
 * "PASS|FAIL <check>: <detail>" line per check. */
SYMCA_API symca_status symca_lattice_validate(const symca_lattice* lattice, int* passed, char** report);
SYMCA_API symca_status symca_lattice_export_edges(const symca_lattice* lattice, char** out);
SYMCA_API symca_status symca_lattice_export_faces(const symca_lattice* lattice, char** out);
SYMCA_API symca_status symca_lattice_export_embedding(const symca_lattice* lattice, char** out);

/* vertices/edges/faces are set only for spherical tilings (else 0). */
SYMCA_API symca_status symca_classify_tiling(unsigned p, unsigned k, symca_tiling_kind* kind,
                                             long* vertices, long* edges, long* faces);
SYMCA_API symca_status symca_fullerene_counts(long hexagons, long chi, long* pentagons,
                                              long* vertices, long* edges);

/* ---- states --------------------------------------------------------------- */

SYMCA_API symca_status symca_state_create(unsigned q, size_t cells, symca_state** out);
/* std::mt19937_64 seeded with `seed`; cell i gets the i-th draw modulo q. */
SYMCA_API symca_status symca_state_random(unsigned q, size_t cells, uint64_t seed, symca_state** out);
SYMCA_API symca_status symca_state_from_cells(unsigned q, const uint8_t* cells, size_t count,
                                              uint64_t generation, symca_state** out);
SYMCA_API void symca_state_free(symca_state* state);

SYMCA_API symca_status symca_state_info(const symca_state* state, unsigned* q, size_t* cells,
                                        uint64_t* generation);
SYMCA_API symca_status symca_state_cells(const symca_state* state, const uint8_t** cells, size_t* count);
SYMCA_API symca_status symca_state_load(const char* text, const symca_lattice* lattice, symca_state** out);
SYMCA_API symca_status symca_state_save(const symca_state* state, const symca_lattice* lattice, char** out);
SYMCA_API symca_status symca_state_render(const symca_state* state, const symca_lattice* lattice,
                                          char** out);
/* Places the live cells of a run-length encoded pattern at (dx, dy). */
SYMCA_API symca_status symca_state_place_rle(const symca_state* state, const symca_lattice* lattice,
                                             const char* rle, unsigned dx, unsigned dy,
                                             symca_state** out);
SYMCA_API symca_status symca_rle_info(const char* rle, unsigned* width, unsigned* height,
                                      size_t* live_cells);
SYMCA_API symca_status symca_state_complement(const symca_state* state, symca_state** out);
/* counts must hold q entries. */
SYMCA_API symca_status symca_state_census(const symca_state* state, const symca_lattice* lattice,
                                          int interior_only, uint64_t* counts, size_t capacity);

/* ---- engine --------------------------------------------------------------- */

typedef struct symca_engine_options {
    unsigned workers;     /* 0 or 1: single-threaded */
    symca_step_path path;
} symca_engine_options;

/* options may be NULL. */
SYMCA_API symca_status symca_step(const symca_lattice* lattice, const symca_rule* rule,
                                  const symca_state* state, const symca_engine_options* options,
                                  symca_state** out);
SYMCA_API symca_status symca_run_create(const symca_lattice* lattice, const symca_rule* rule,
                                        const symca_state* state, uint64_t steps,
                                        const symca_engine_options* options, int interior_census,
                                        symca_run** out);
SYMCA_API symca_status symca_run_final_state(const symca_run* run, symca_state** out);
/* Row-major census, generations x q entries, owned by the run. */
SYMCA_API symca_status symca_run_census(const symca_run* run, size_t* generations, unsigned* q,
                                        const uint64_t** data);
SYMCA_API void symca_run_free(symca_run* run);
SYMCA_API symca_status symca_detect_cycle(const symca_lattice* lattice, const symca_rule* rule,
                                          const symca_state* state, uint64_t max_steps,
                                          const symca_engine_options* options, int* found,
                                          uint64_t* transient, uint64_t* period);

/* ---- polynomials ---------------------------------------------------------- */

SYMCA_API symca_status symca_poly_from_rule(const symca_rule* rule, symca_poly** out);
/* name: ConwaysLife, HighLife or DayAndNight. */
SYMCA_API symca_status symca_poly_fixture(const char* name, symca_poly** out);
SYMCA_API symca_status symca_poly_parse(const char* text, unsigned leaves, symca_poly** out);
SYMCA_API void symca_poly_free(symca_poly* poly);
SYMCA_API symca_status symca_poly_info(const symca_poly* poly, unsigned* degree, size_t* terms,
                                       unsigned* leaves);
SYMCA_API symca_status symca_poly_format(const symca_poly* poly, char** out);
SYMCA_API symca_status symca_poly_equal(const symca_poly* a, const symca_poly* b, int* out);
/* Bit v of values/defined is variable v (leaves, center, next center). */
SYMCA_API symca_status symca_poly_eval(const symca_poly* poly, uint32_t values, uint32_t defined,
                                       int* out);

typedef struct symca_relation_result {
    const char* relation;       /* template text */
    int holds;
    size_t tuples_checked;
    size_t assignments_per_tuple;
    const char* failing_tuple;  /* "" when the relation holds */
    const char* failing_assignment;
} symca_relation_result;

/* All stored relations of a named rule; DayAndNight also gets its
 * combined relation. Strings in results are owned by the verification. */
SYMCA_API symca_status symca_verify_decomposition(const char* name, symca_verification** out);
SYMCA_API symca_status symca_verify_relation(const symca_rule* rule, const char* relation,
                                             symca_verification** out);
SYMCA_API symca_status symca_verification_count(const symca_verification* v, size_t* count);
SYMCA_API symca_status symca_verification_get(const symca_verification* v, size_t index,
                                              symca_relation_result* out);
SYMCA_API void symca_verification_free(symca_verification* v);

#ifdef __cplusplus
}
#endif

#endif /* SYMCA_SYMCA_H */
