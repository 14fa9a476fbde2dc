/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 *
 * C interface to the oddpair toolkit: exact desk-scale verification of the
 * theory of odd pairs of cliques in Berge and perfect graphs.
 *
 * Conventions:
 *   - Graphs are opaque handles; free them with oddpair_graph_free.
 *   - Every fallible call returns an oddpair_status; ODDPAIR_OK is 0. On
 *     failure, oddpair_last_error() gives a thread-local message.
 *   - Strings returned through char** are heap-allocated; release them with
 *     oddpair_string_free.
 *   - Vertex sets travel as 64-bit masks, vertex i at bit i (graphs are
 *     capped at 62 vertices, the graph6 single-byte tier).
 *   - Reports are JSON documents with a schema_version field.
 */
#ifndef ODDPAIR_H
#define ODDPAIR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ODDPAIR_VERSION_MAJOR 1
#define ODDPAIR_VERSION_MINOR 0
#define ODDPAIR_VERSION_PATCH 0

typedef enum oddpair_status {
    ODDPAIR_OK = 0,
    ODDPAIR_ERR_INVALID_ARGUMENT = 1, /* bad vertex, self-loop, bad name, ... */
    ODDPAIR_ERR_PARSE = 2,            /* malformed graph6 text */
    ODDPAIR_ERR_CAP_EXCEEDED = 3,     /* input above a configured size cap */
    ODDPAIR_ERR_PRECONDITION = 4,     /* documented operation precondition */
    ODDPAIR_ERR_INTERNAL = 5,
    ODDPAIR_ERR_NOMEM = 6
} oddpair_status;

typedef struct oddpair_graph oddpair_graph;
typedef struct oddpair_graph_iter oddpair_graph_iter;

const char* oddpair_version(void);
const char* oddpair_status_name(oddpair_status status);

/* Message from the most recent failing call on this thread ("" if none). */
const char* oddpair_last_error(void);

void oddpair_string_free(char* s);
void oddpair_graph_free(oddpair_graph* g);

/* --- construction and interchange ---------------------------------- */

/* edges: edge_count pairs of ints, flattened (u0, v0, u1, v1, ...). */
oddpair_status oddpair_graph_build(int n, const int* edges, size_t edge_count,
                                   oddpair_graph** out);
oddpair_status oddpair_graph_from_g6(const char* line, oddpair_graph** out);
oddpair_status oddpair_graph_to_g6(const oddpair_graph* g, char** out);

oddpair_status oddpair_graph_complement(const oddpair_graph* g,
                                        oddpair_graph** out);
/* The graph G/xy; x, y must be distinct and non-adjacent. */
oddpair_status oddpair_graph_contract(const oddpair_graph* g, int x, int y,
                                      oddpair_graph** out);
/* Induced subgraph on the mask, vertices relabeled in ascending order. */
oddpair_status oddpair_graph_induced(const oddpair_graph* g, uint64_t members,
                                     oddpair_graph** out);

int oddpair_graph_order(const oddpair_graph* g);
int oddpair_graph_edge_count(const oddpair_graph* g);
/* 1, 0, or -1 on out-of-range input. */
int oddpair_graph_has_edge(const oddpair_graph* g, int u, int v);

/* --- generators ------------------------------------------------------ */

oddpair_status oddpair_gen_hole(int k, oddpair_graph** out);
oddpair_status oddpair_gen_antihole(int k, oddpair_graph** out);
oddpair_status oddpair_gen_prism(int l1, int l2, int l3, oddpair_graph** out);

/*
 * Double split graph on a_1..a_m, b_1..b_m, c_1..c_n, d_1..d_n (vertex
 * layout in that order). straight is a row-major m*n matrix of 0/1 cells
 * selecting the matched edge pair per (i,j); NULL means all 1. k_a / k_b
 * (optional) receive the two maximal cliques {a_1, c_*} and {b_1, d_*}.
 */
oddpair_status oddpair_gen_double_split(int m, int n, const uint8_t* straight,
                                        oddpair_graph** out, uint64_t* k_a,
                                        uint64_t* k_b);

/* Deterministic per seed (SplitMix64 stream over row-major pairs). */
oddpair_status oddpair_gen_random_bipartite(int a, int b, double p,
                                            uint64_t seed, oddpair_graph** out);

/* Pattern library: "claw", "diamond", "double-diamond", "lk33e". */
oddpair_status oddpair_pattern(const char* name, oddpair_graph** out);

/*
 * Graph stream: all labeled graphs on n vertices (canonical = 0, n <= 8) or
 * one representative per isomorphism class (canonical = 1, n <= 11).
 * oddpair_enumerate_next returns 1 and fills *out while graphs remain, 0 at
 * the end, or a negative oddpair_status on error.
 */
oddpair_status oddpair_enumerate_open(int n, int canonical,
                                      oddpair_graph_iter** out);
int oddpair_enumerate_next(oddpair_graph_iter* it, oddpair_graph** out);
void oddpair_enumerate_close(oddpair_graph_iter* it);

/* --- invariants and classification ----------------------------------- */

oddpair_status oddpair_clique_number(const oddpair_graph* g, int* out);
oddpair_status oddpair_independence_number(const oddpair_graph* g, int* out);
oddpair_status oddpair_chromatic_number(const oddpair_graph* g, int cap,
                                        int* out);
/* cap <= 0 selects the documented defaults. */
oddpair_status oddpair_is_perfect(const oddpair_graph* g, int cap, int* out);
oddpair_status oddpair_is_berge(const oddpair_graph* g, int cap, int* out);

/* *found gets 0/1; on 1, *u and *v name the first even pair in scan order. */
oddpair_status oddpair_find_even_pair(const oddpair_graph* g, int allow_vacuous,
                                      int* u, int* v, int* found);

/*
 * Parity classification of the external paths between two cliques (masks).
 * The result is a JSON object: {"verdict": "odd_pair" | "even_pair" |
 * "mixed" | "no_external_path", "odd_witness": ..., "even_witness": ...}.
 */
oddpair_status oddpair_classify_clique_pair(const oddpair_graph* g, uint64_t k1,
                                            uint64_t k2, int cap, char** json_out);

/* --- verification harness --------------------------------------------- */

typedef struct oddpair_options {
    int n_max;         /* 0 = command-specific default */
    int cap;           /* per-graph search cap (default 16) */
    int allow_vacuous; /* literal even-pair reading in scans (default 1) */
    int labeled;       /* labeled corpus where feasible (default 1) */
    uint64_t seed;
    int threads;         /* 0 = hardware concurrency */
    size_t verdict_limit; /* per-graph verdict rows kept in reports */
} oddpair_options;

void oddpair_options_init(oddpair_options* opt);

/* JSON array of the available suite names. */
oddpair_status oddpair_suite_list(char** json_out);

/*
 * Runs a named verification suite / conjecture scan and hands back the JSON
 * report; *passed (optional) gets the report's overall pass flag. A failing
 * assertion is not an error status: the call succeeds and *passed is 0.
 */
oddpair_status oddpair_run_suite(const char* name, const oddpair_options* opt,
                                 char** json_out, int* passed);
oddpair_status oddpair_conjecture_struct_range(const oddpair_options* opt,
                                               char** json_out, int* passed);
/* g6_corpus: newline-separated graph6 lines. */
oddpair_status oddpair_conjecture_struct_corpus(const char* g6_corpus,
                                                const oddpair_options* opt,
                                                char** json_out, int* passed);
oddpair_status oddpair_conjecture_mini(int k_max, const oddpair_options* opt,
                                       char** json_out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* ODDPAIR_H */
