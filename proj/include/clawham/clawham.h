/* C interface to the clawham library.
 *
 * Graphs are opaque handles. Every call returns a clawham_status; on failure
 * clawham_last_error() describes the problem (thread-local, valid until the
 * next call on the same thread). Strings handed out by the library are
 * released with clawham_string_free. JSON outputs carry "schema": "clawham/1".
 */
#ifndef CLAWHAM_H
#define CLAWHAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CLAWHAM_API __declspec(dllexport)
#else
#define CLAWHAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct clawham_graph clawham_graph;

typedef enum clawham_status {
  CLAWHAM_OK = 0,
  CLAWHAM_INVALID_INPUT = 1,
  CLAWHAM_PRECONDITION = 2,
  CLAWHAM_INCONCLUSIVE = 3,     /* a search ran out of budget */
  CLAWHAM_THEOREM_VIOLATION = 4,
  CLAWHAM_INTERNAL = 5,
  CLAWHAM_CLAIM_FAILED = 6      /* verify found a failing instance */
} clawham_status;

typedef enum clawham_format {
  CLAWHAM_FORMAT_AUTO = 0,
  CLAWHAM_FORMAT_GRAPH6 = 1,
  CLAWHAM_FORMAT_EDGELIST = 2
} clawham_format;

typedef struct clawham_options {
  uint64_t budget;    /* search node budget per exact search */
  uint64_t seed;      /* randomized corpora and closure orders */
  size_t limit;       /* corpus truncation, 0 = none */
  int with_trace;     /* closure steps and full root in reports */
  int reduce;         /* dct: contract collapsible certificates first */
  int timings;        /* analyze: per-stage wall clock */
  unsigned threads;   /* verify: worker threads */
  const char* counterexample_path; /* verify: written on failure if set */
} clawham_options;

CLAWHAM_API void clawham_options_default(clawham_options* opts);
CLAWHAM_API const char* clawham_version(void);
CLAWHAM_API const char* clawham_last_error(void);
CLAWHAM_API void clawham_string_free(char* s);

/* multigraph != 0 lets an edge list carry parallel edges. */
CLAWHAM_API clawham_status clawham_graph_parse(const char* text, clawham_format format,
                                               int multigraph, clawham_graph** out);
/* pairs holds 2*m vertex ids. */
CLAWHAM_API clawham_status clawham_graph_from_edges(int n, const int* pairs, size_t m,
                                                    clawham_graph** out);
CLAWHAM_API void clawham_graph_free(clawham_graph* g);
CLAWHAM_API int clawham_graph_vertex_count(const clawham_graph* g);
CLAWHAM_API int clawham_graph_edge_count(const clawham_graph* g);
/* graph6 needs a simple graph. */
CLAWHAM_API clawham_status clawham_graph_serialize(const clawham_graph* g,
                                                   clawham_format format, char** out);

/* family: "sharpness" (size = m), "f" (arg = spec such as "p2,p3,t"),
 * "named" (arg = name, size for cycle/path/complete),
 * "random" (arg = "line" or "thinned", size = n, seed). */
CLAWHAM_API clawham_status clawham_generate(const char* family, const char* arg, int size,
                                            uint64_t seed, clawham_graph** out);

/* Full analysis report. Returns CLAWHAM_THEOREM_VIOLATION or
 * CLAWHAM_INCONCLUSIVE with the report still filled in. */
CLAWHAM_API clawham_status clawham_analyze(const clawham_graph* g, const char* id,
                                           const clawham_options* opts, char** json);

/* Closure summary; *closed (optional) receives cl(g). */
CLAWHAM_API clawham_status clawham_closure(const clawham_graph* g, const clawham_options* opts,
                                           char** json, clawham_graph** closed);

/* Triangle-free root of cl(g); *root (optional) receives it. */
CLAWHAM_API clawham_status clawham_root(const clawham_graph* g, const clawham_options* opts,
                                        char** json, clawham_graph** root);

/* DCT search on a multigraph; CLAWHAM_INCONCLUSIVE on budget exhaustion. */
CLAWHAM_API clawham_status clawham_dct(const clawham_graph* h, const clawham_options* opts,
                                       char** json);

/* Replays a claim over a corpus (graph6 path, "-" or a gen: spec).
 * Returns CLAWHAM_CLAIM_FAILED or CLAWHAM_INCONCLUSIVE with the summary
 * filled in. */
CLAWHAM_API clawham_status clawham_verify(const char* corpus, const char* claim,
                                          const clawham_options* opts, char** json);

#ifdef __cplusplus
}
#endif

#endif
