#ifndef LICOL_H
#define LICOL_H

/*
 * C interface to the licol constrained-coloring engine.
 *
 * All handles are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Fallible calls return a status code
 * (LICOL_OK on success) and leave a human-readable message retrievable with
 * licol_last_error(); the message is thread-local.
 *
 * Vertices are numbered 1..n. Strings returned through char** out-parameters
 * are heap-allocated and must be released with licol_string_free; integer
 * buffers with licol_ints_free.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    LICOL_OK = 0,
    LICOL_ERR_INVALID = 1, /* bad arguments or domain violation */
    LICOL_ERR_PARSE = 2,   /* malformed graph file or assignment document */
    LICOL_ERR_BUDGET = 3,  /* enumeration refused: larger than the budget */
    LICOL_ERR_INTERNAL = 4
};

typedef struct licol_graph licol_graph;
typedef struct licol_assignment licol_assignment;
typedef struct licol_result licol_result;

const char* licol_version(void);
const char* licol_last_error(void);

/* ------------------------------------------------------------------ graphs */

/* edges holds 2*edge_count endpoints: u1,v1,u2,v2,... */
int licol_graph_create(int n, const int* edges, size_t edge_count, licol_graph** out);

/* family: "path" | "cycle" | "complete" | "complete_bipartite" | "star" |
 * "edgeless"; b is used only by complete_bipartite. */
int licol_graph_generate(const char* family, int a, int b, licol_graph** out);

int licol_graph_parse(const char* text, licol_graph** out);
int licol_graph_serialize(const licol_graph* g, char** out_text);
int licol_graph_add_pendant(const licol_graph* g, int v, licol_graph** out, int* new_vertex);
int licol_graph_vertex_count(const licol_graph* g);
int licol_graph_edge_count(const licol_graph* g);
void licol_graph_free(licol_graph* g);

/* ------------------------------------------------------------- assignments */

int licol_assignment_parse(const char* text, licol_assignment** out);
int licol_assignment_serialize(const licol_assignment* a, char** out_text);
/* "list" | "interval" | "mu" | "precoloring" */
const char* licol_assignment_kind(const licol_assignment* a);
void licol_assignment_free(licol_assignment* a);

/* Parses {"kind":"coloring","colors":{...}} into a 0-based array of n colors
 * (entry i is the color of vertex i+1). */
int licol_coloring_parse(const char* text, int** out_colors, size_t* out_count);

/* ----------------------------------------------------------------- solving */

/* model: "list" | "mu" | "gammamu" | "precolor"; the assignment kind must
 * match. solver_mode: "pruned" | "paper-literal". */
int licol_solve(const licol_graph* g, const licol_assignment* a, const char* model,
                const char* solver_mode, licol_result** out);

int licol_solve_k_coloring(const licol_graph* g, int k, const char* solver_mode,
                           licol_result** out);

int licol_chromatic_number(const licol_graph* g, int* out);

/* ------------------------------------------------------------- choosability */

/* universe: "paper-literal" (window starts confined to 1..n-k+1) or
 * "normalized" (canonical representatives of all integer placements).
 * budget caps the enumeration size; force = nonzero runs past it. workers
 * sets the number of parallel scanners; the verdict does not depend on it. */
int licol_choosable_interval(const licol_graph* g, int k, const char* universe,
                             const char* solver_mode, uint64_t budget, int force, int workers,
                             licol_result** out);

/* pool <= 0 selects the default palette of n*k colors. */
int licol_choosable_classical(const licol_graph* g, int k, int pool, const char* solver_mode,
                              uint64_t budget, int force, int workers, licol_result** out);

int licol_choosability_number(const licol_graph* g, const char* universe,
                              const char* solver_mode, uint64_t budget, int force, int workers,
                              int start_at_two, int* out_k);

/* ------------------------------------------------------------- reductions */

/* Converts a list instance into an interval instance by attaching pinned
 * degree-1 blockers for every missing color. aux_json reports c_max, the
 * unsatisfiable marker and the blocker map. */
int licol_reduce_pendant(const licol_graph* g, const licol_assignment* lists,
                         licol_graph** out_graph, licol_assignment** out_interval,
                         char** out_aux_json);

/* Rewrites a proper coloring with colors 1..k into the given uniform
 * length-k windows. colors holds n entries for vertices 1..n; out_colors
 * receives n lifted colors. out_inspected (optional) receives the number of
 * window candidates examined, at most k*n. */
int licol_modular_lift(const licol_graph* g, const licol_assignment* intervals,
                       const int* colors, size_t color_count, int** out_colors,
                       size_t* out_count, uint64_t* out_inspected);

/* -------------------------------------------------------------- counting */

/* Writes the exact decimal value of (n-k+1)^n without enumerating. */
int licol_count_interval_assignments(int n, int k, char** out_decimal);

/* --------------------------------------------------------------- results */

/* 1 = satisfiable/choosable, 0 = not. */
int licol_result_yes(const licol_result* r);
/* Fails with LICOL_ERR_INVALID when there is no witness. */
int licol_result_witness_color(const licol_result* r, int v, int* out_color);
/* Fails when there is no counterexample. */
int licol_result_counterexample(const licol_result* r, licol_assignment** out);
uint64_t licol_result_nodes(const licol_result* r);
uint64_t licol_result_leaves(const licol_result* r);
uint64_t licol_result_assignments_checked(const licol_result* r);
/* Verdict, witness/counterexample and stats as a JSON document. */
int licol_result_to_json(const licol_result* r, char** out_text);
void licol_result_free(licol_result* r);

void licol_string_free(char* s);
void licol_ints_free(int* p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LICOL_H */
