/* C interface to taitkit. Every function returns a tk_status; on failure the
 * message is available from tk_last_error_message() on the same thread.
 * Strings returned through out-parameters are owned by the caller and must
 * be released with tk_string_free. */
#ifndef TAITKIT_H
#define TAITKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(TAITKIT_BUILDING_LIBRARY)
#define TK_API __attribute__((visibility("default")))
#else
#define TK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tk_status {
  TK_OK = 0,
  TK_ERR_SYNTAX = 1,
  TK_ERR_MALFORMED_CODE = 2,
  TK_ERR_DISCONNECTED_AMBIENT = 3,
  TK_ERR_NON_PLANAR = 4,
  TK_ERR_NON_REALIZABLE = 5,
  TK_ERR_NOT_BIPARTITE = 6,
  TK_ERR_IO = 7,
  TK_ERR_SCHEMA = 8,
  TK_ERR_NOT_CONNECTED_DIAGRAM = 9,
  TK_ERR_DISCONNECTED_CHESSBOARD = 10,
  TK_ERR_NOT_ALTERNATING = 11,
  TK_ERR_INDEX_OUT_OF_RANGE = 12,
  TK_ERR_DIMENSION_MISMATCH = 13,
  TK_ERR_PRECONDITION_FAILED = 14,
  TK_ERR_INVALID_SITE = 15,
  TK_ERR_INVALID_ARGUMENT = 16,
  TK_ERR_INTERNAL = 17
} tk_status;

typedef enum tk_relation {
  TK_RELATED = 0,
  TK_NOT_RELATED_WITHIN = 1,
  TK_DISTINGUISHED = 2
} tk_relation;

typedef struct tk_diagram tk_diagram;
typedef struct tk_table tk_table;

typedef struct tk_properties {
  int crossings;
  int components;
  int writhe;
  int alternating;
  int reduced;
  int prime;
} tk_properties;

TK_API const char* tk_last_error_message(void);
TK_API const char* tk_status_name(tk_status status);
TK_API void tk_string_free(char* s);

TK_API tk_status tk_diagram_from_pd(const char* text, tk_diagram** out);
TK_API tk_status tk_diagram_from_gauss(const char* text, tk_diagram** out);
TK_API void tk_diagram_free(tk_diagram* d);
TK_API tk_status tk_diagram_to_pd(const tk_diagram* d, char** out);
TK_API tk_status tk_diagram_canonical_code(const tk_diagram* d, char** out);
TK_API tk_status tk_diagram_properties(const tk_diagram* d, tk_properties* out);

/* JSON validation report: {"name","pass","checks":[...]}. *all_pass may be NULL. */
TK_API tk_status tk_diagram_check_identities(const tk_diagram* d, const char* name, char** json_out, int* all_pass);

/* JSON array of sites {"crossing","cut_edges","tangle"}. */
TK_API tk_status tk_diagram_flype_sites(const tk_diagram* d, char** json_out);
/* Applies the index-th site of tk_diagram_flype_sites. */
TK_API tk_status tk_diagram_apply_flype(const tk_diagram* d, size_t site_index, tk_diagram** out);

TK_API tk_status tk_table_load(const char* path, tk_table** out);
TK_API void tk_table_free(tk_table* t);
TK_API size_t tk_table_size(const tk_table* t);
TK_API const char* tk_table_name(const tk_table* t, size_t index);
/* Index of the entry called name, or (size_t)-1. */
TK_API size_t tk_table_find(const tk_table* t, const char* name);
/* Copy of the entry's diagram; free with tk_diagram_free. */
TK_API tk_status tk_table_diagram(const tk_table* t, size_t index, tk_diagram** out);

/* JSON array with one validation report per table entry. */
TK_API tk_status tk_invariants_report(const tk_table* t, char** json_out, int* all_pass);

/* Flype orbit as JSON and (if dot_out is non-NULL) Graphviz. */
TK_API tk_status tk_flype_orbit(const tk_diagram* d, size_t max_nodes, int max_depth, char** json_out, char** dot_out,
                                int* truncated);

/* description_out (may be NULL) receives a one-line explanation. */
TK_API tk_status tk_flype_related(const tk_diagram* a, const tk_diagram* b, size_t max_nodes, int max_depth,
                                  tk_relation* relation, int* truncated, char** description_out);

#ifdef __cplusplus
}
#endif

#endif
