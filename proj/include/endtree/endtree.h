/* C interface to the endtree library.
 *
 * Every function returns an et_status; ET_OK is zero. On failure the
 * message of the last error on the calling thread is available through
 * et_last_error(). Strings returned through `char** out` are owned by the
 * caller and released with et_string_free(). JSON outputs use sorted keys and
 * are byte-stable for identical inputs.
 *
 * Families are passed as JSON: {"name": "canopy", "parameters": {...}} or
 * {"name": "custom", "graph": {"vertices": [...], "edges": [[u, v], ...],
 * "horizon": [...], "base": [...]}}.
 */
#ifndef ENDTREE_ENDTREE_H
#define ENDTREE_ENDTREE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ET_API __declspec(dllexport)
#else
#define ET_API __attribute__((visibility("default")))
#endif

typedef int et_status;

enum {
  ET_OK = 0,
  ET_INVALID_ARGUMENT = 1,
  ET_UNKNOWN_FAMILY = 2,
  ET_INVALID_PARAMETERS = 3,
  ET_INVALID_GRAPH = 4,
  ET_UNKNOWN_VERTEX = 5,
  ET_HORIZON_SPLIT = 6,
  ET_NOT_COVERING = 7,
  ET_CROSS_EDGE = 8,
  ET_NO_SEPARATOR = 9,
  ET_DEGREE_MISMATCH = 10,
  ET_EXHAUSTED = 11,
  ET_UNSTABLE = 12,
  ET_BUDGET = 13,
  ET_WRONG_ORDER = 14,
  ET_SIDE_DISCONNECTED = 15,
  ET_SEPARATOR_NOT_ATTACHED = 16,
  ET_HORIZON_ON_WRONG_SIDE = 17,
  ET_SMALLER_CUT_EXISTS = 18,
  ET_CYCLE_DETECTED = 19,
  ET_EMPTY_NICE_SET = 20,
  ET_NICE_SET_VIOLATION = 21,
  ET_NOT_ENOUGH_LEVELS = 22,
  ET_NESTEDNESS_VIOLATION = 23,
  ET_OUTDEGREE_VIOLATION = 24,
  ET_DISCONNECTED = 25,
  ET_PRECONDITION = 26,
  ET_IO = 27,
  ET_PARSE = 28,
  ET_INTERNAL = 29
};

typedef struct et_graph et_graph;
typedef struct et_td et_td;

ET_API const char* et_last_error(void);
ET_API const char* et_status_name(et_status status);
ET_API void et_string_free(char* s);

/* Caps for enumeration and search: one integer for every cap, or
 * "enumerate=N,search=N,vertices=N". NULL or "" restores the defaults.
 * The ENDTREE_BUDGET environment variable is read on first use. */
ET_API et_status et_set_budget(const char* spec);

/* Graphs */
ET_API et_status et_graph_generate(const char* family_json, int radius,
                                   et_graph** out);
ET_API et_status et_graph_load(const char* graph_json, et_graph** out);
ET_API void et_graph_free(et_graph* g);
ET_API et_status et_graph_vertex_count(const et_graph* g, int* out);
/* format: "json" or "dot" */
ET_API et_status et_graph_export(const et_graph* g, const char* format,
                                 char** out);

/* Connectivity. `radii` must hold at least three increasing values. */
ET_API et_status et_end_degree(const char* family_json, const int* radii,
                               size_t radius_count, int cap, char** out);
ET_API et_status et_dominators(const char* family_json, const int* radii,
                               size_t radius_count, int cap, char** out);
/* x_json, y_json: arrays of vertex ids; mode 0 = terminals, 1 = disjoint */
ET_API et_status et_max_disjoint_paths(const et_graph* g, const char* x_json,
                                       const char* y_json, int mode,
                                       char** out);
ET_API et_status et_minimal_separators(const et_graph* g, const char* u,
                                       const char* v, int k, char** out);
ET_API et_status et_separator_sequence(const et_graph* g, int m, char** out);

/* Relevant separations; max_side <= 0 means unbounded. The enumeration
 * output is one JSON object per line. */
ET_API et_status et_enumerate_relevant(const et_graph* g, int k, int max_side,
                                       char** out);
ET_API et_status et_alpha(const et_graph* g, int k, int max_side, char** out);

ET_API et_status et_automorphisms(const et_graph* g, int margin, char** out);

/* Decompositions */
ET_API et_status et_build_td(const et_graph* g, int k, int max_side,
                             et_td** out);
ET_API et_status et_td_load(const char* td_json, et_graph** graph_out,
                            et_td** td_out);
ET_API void et_td_free(et_td* td);
/* format: "json" or "dot" */
ET_API et_status et_td_export(const et_graph* g, const et_td* td,
                              const char* format, char** out);
/* Writes the report; *passed is set to 1 when every check passes. */
ET_API et_status et_td_verify(const et_graph* g, const et_td* td, int* passed,
                              char** out);
ET_API et_status et_ray_decomposition(const et_graph* g, int m, char** out);

/* Orchestration */
ET_API et_status et_analyze(const char* family_json, const int* radii,
                            size_t radius_count, int cap, int margin,
                            char** out);
/* Runs the full construction at `radius` after checking the end is thin and
 * undominated over `radii` (ET_PRECONDITION otherwise). k <= 0 uses the
 * measured end degree. Produces the decomposition JSON, its DOT rendering
 * and the verification report. */
ET_API et_status et_pipeline(const char* family_json, int radius,
                             const int* radii, size_t radius_count, int cap,
                             int k, int max_side, int* passed, char** td_json,
                             char** td_dot, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* ENDTREE_ENDTREE_H */
