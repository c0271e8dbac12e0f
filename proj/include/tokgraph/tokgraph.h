/* C interface to the tokgraph library.
 *
 * Graphs are opaque handles released with tg_graph_free. Every function
 * returns a tg_status; on failure tg_last_error() describes the problem for
 * the calling thread. Strings returned through char** are heap-allocated and
 * released with tg_string_free.
 */
#ifndef TOKGRAPH_H
#define TOKGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(TOKGRAPH_BUILDING_LIBRARY)
#define TG_API __attribute__((visibility("default")))
#else
#define TG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tg_status {
  TG_OK = 0,
  TG_ERR_INVALID_SIZE = 1,
  TG_ERR_INVALID_K = 2,
  TG_ERR_INDEX = 3,
  TG_ERR_DOMAIN = 4,
  TG_ERR_PARSE = 5,
  TG_ERR_RESOURCE = 6,
  TG_ERR_STRUCTURAL = 7,
  TG_ERR_ARITY = 8,
  TG_ERR_IO = 9,
  TG_ERR_NULL_ARGUMENT = 10,
  TG_ERR_INTERNAL = 11
} tg_status;

typedef struct tg_graph tg_graph;

typedef enum tg_profile { TG_PROFILE_THEOREMS = 0, TG_PROFILE_CONJECTURE = 1 } tg_profile;

typedef struct tg_suite_config {
  tg_profile profile;
  int n_min;
  int n_max;
  uint64_t seed;
  int corrupt_self_test;
  int record_timing;
} tg_suite_config;

TG_API const char* tg_version(void);
TG_API const char* tg_last_error(void);
TG_API const char* tg_status_name(tg_status status);
TG_API void tg_string_free(char* s);

/* Construction */
TG_API tg_status tg_graph_path(int n, tg_graph** out);
TG_API tg_status tg_graph_cycle(int n, tg_graph** out);
TG_API tg_status tg_graph_complete(int n, tg_graph** out);
TG_API tg_status tg_graph_from_edges(int n, const int* pairs, size_t edge_count, tg_graph** out);
TG_API tg_status tg_graph_from_graph6(const char* text, tg_graph** out);
/* path:<n>, cycle:<n>, complete:<n>, star:<n>, union:<a>+<b>, graph6 text or file */
TG_API tg_status tg_graph_from_spec(const char* spec, tg_graph** out);
TG_API tg_status tg_graph_disjoint_union(const tg_graph* g, const tg_graph* h, tg_graph** out);
TG_API tg_status tg_graph_cartesian_product(const tg_graph* g, const tg_graph* h, tg_graph** out);
TG_API tg_status tg_token_graph(const tg_graph* g, int k, tg_graph** out);
TG_API tg_status tg_staircase_graph(int n, tg_graph** out);
TG_API void tg_graph_free(tg_graph* g);

/* Queries */
TG_API tg_status tg_graph_order(const tg_graph* g, int* out);
TG_API tg_status tg_graph_size(const tg_graph* g, size_t* out);
TG_API tg_status tg_graph_has_edge(const tg_graph* g, int u, int v, int* out);
TG_API tg_status tg_graph_label(const tg_graph* g, int u, char** out);
TG_API tg_status tg_graph_to_graph6(const tg_graph* g, char** out);
TG_API tg_status tg_graph_to_dot(const tg_graph* g, int cluster_components, char** out);

/* Invariants and isomorphism */
TG_API tg_status tg_invariants_json(const tg_graph* g, char** out);
TG_API tg_status tg_are_isomorphic(const tg_graph* g, const tg_graph* h, int* found, char** mapping_json);
TG_API tg_status tg_automorphism_order(const tg_graph* g, uint64_t* order);

/* Verification harness */
TG_API void tg_suite_config_default(tg_suite_config* cfg);
/* exit_code follows the CLI convention: 0 pass, 1 failure, 3 resource only. */
TG_API tg_status tg_run_suite(const tg_suite_config* cfg, char** report_json, int* exit_code);
TG_API tg_status tg_conjecture_report(int n_min, int n_max, char** report_json, char** table_text, int* all_agree);
TG_API tg_status tg_export_figures(const char* outdir, size_t* files_written);

#ifdef __cplusplus
}
#endif

#endif /* TOKGRAPH_H */
