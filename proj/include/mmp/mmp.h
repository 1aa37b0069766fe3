#ifndef MMP_H
#define MMP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MMP_BUILDING)
#    define MMP_API __declspec(dllexport)
#  else
#    define MMP_API __declspec(dllimport)
#  endif
#else
#  define MMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mmp_status {
    MMP_OK = 0,
    MMP_E_PARSE = 1,
    MMP_E_INVALID = 2,
    MMP_E_BUDGET = 3,
    MMP_E_RANGE = 4,
    MMP_E_INFEASIBLE = 5,
    MMP_E_IO = 6,
    MMP_E_ARGUMENT = 7,
    MMP_E_INTERNAL = 99
} mmp_status;

#define MMP_UNLIMITED UINT64_MAX

typedef struct mmp_hypergraph mmp_hypergraph;
typedef struct mmp_coords mmp_coords;

/* Message for the last failing call on this thread ("" after success). */
MMP_API const char* mmp_last_error(void);
/* Strings returned through char** out-parameters are owned by the caller. */
MMP_API void mmp_free_string(char* s);

/* n = 0 picks max(3, largest hyperedge). */
MMP_API mmp_status mmp_parse(const char* text, int n, mmp_hypergraph** out);
/* Arrays of hypergraphs: free with mmp_hypergraph_array_free. */
MMP_API void mmp_hypergraph_array_free(mmp_hypergraph** hs, size_t count);
/* One hypergraph per string; '#' lines are comments, a string may span lines. */
MMP_API mmp_status mmp_parse_file(const char* text, int n, mmp_hypergraph*** out, size_t* count);
MMP_API void mmp_hypergraph_free(mmp_hypergraph* h);
MMP_API mmp_status mmp_clone(const mmp_hypergraph* h, mmp_hypergraph** out);
MMP_API mmp_status mmp_serialize(const mmp_hypergraph* h, char** out);
MMP_API int mmp_k(const mmp_hypergraph* h);
MMP_API int mmp_l(const mmp_hypergraph* h);
MMP_API int mmp_n(const mmp_hypergraph* h);
/* Fills up to cap entries of m; returns k. */
MMP_API int mmp_multiplicities(const mmp_hypergraph* h, int* m, int cap);

MMP_API mmp_status mmp_validate(const mmp_hypergraph* h, int strict, int* ok, char** report_json);
/* format: "mmp", "json", "dot" or "incidence". */
MMP_API mmp_status mmp_export(const mmp_hypergraph* h, const char* format, char** out);

MMP_API mmp_status mmp_strip(const mmp_hypergraph* h, int fixpoint, mmp_hypergraph** out);
MMP_API mmp_status mmp_remove_edge(const mmp_hypergraph* h, int index, mmp_hypergraph** out);
MMP_API mmp_status mmp_canonical(const mmp_hypergraph* h, uint64_t node_limit, char** out);
MMP_API mmp_status mmp_is_isomorphic(const mmp_hypergraph* a, const mmp_hypergraph* b, uint64_t node_limit, int* out);

MMP_API mmp_status mmp_components(const mmp_hypergraph* h, mmp_hypergraph*** out, size_t* count);

MMP_API mmp_status mmp_is_binary(const mmp_hypergraph* h, uint64_t node_limit, int* out);
MMP_API mmp_status mmp_is_critical(const mmp_hypergraph* h, uint64_t node_limit, int* out);
MMP_API int mmp_has_parity_proof(const mmp_hypergraph* h);

typedef struct mmp_indices {
    int HI_cM, HI_cm, HI_mcM, l_cM, l_cm;
    int exact;
    int runs;
} mmp_indices;

MMP_API mmp_status mmp_indices_exact(const mmp_hypergraph* h, uint64_t node_limit, mmp_indices* out);
MMP_API mmp_status mmp_indices_heuristic(const mmp_hypergraph* h, int runs, uint64_t seed, mmp_indices* out);

typedef struct mmp_critical_opts {
    uint64_t seed;
    int descents;
    double seconds;
    int max_results;
    uint64_t node_limit;
} mmp_critical_opts;

MMP_API mmp_critical_opts mmp_critical_defaults(void);
MMP_API mmp_status mmp_find_criticals(const mmp_hypergraph* h, const mmp_critical_opts* opts, mmp_hypergraph*** out,
                                      size_t* count);

typedef struct mmp_analyze_opts {
    int exact;
    int runs;
    uint64_t seed;
    uint64_t node_limit;
    int critical;
    int indent; /* -1 for compact JSON */
    int text;   /* nonzero: plain-text report */
    const char* name;
} mmp_analyze_opts;

MMP_API mmp_analyze_opts mmp_analyze_defaults(void);
/* *indeterminate is set when a budget ran out and some values are bounds. */
MMP_API mmp_status mmp_analyze(const mmp_hypergraph* h, const mmp_analyze_opts* opts, char** out, int* indeterminate);

/* Exact rationals are returned as "p/q" strings. */
MMP_API mmp_status mmp_quantum_index(const mmp_hypergraph* h, char** out);
MMP_API mmp_status mmp_alpha_raw(const mmp_hypergraph* h, int declared_n, char** out);
/* lo, hi: NULL or k rational strings; x_json receives the optimal point. */
MMP_API mmp_status mmp_lp_alpha_star(const mmp_hypergraph* h, const char* const* lo, const char* const* hi,
                                     char** value, char** x_json);

/* Coordinatizations. */
MMP_API void mmp_coords_free(mmp_coords* c);
MMP_API mmp_status mmp_coords_from_json(const mmp_hypergraph* h, const char* json, mmp_coords** out);
MMP_API mmp_status mmp_coords_to_json(const mmp_hypergraph* h, const mmp_coords* c, int indent, char** out);
MMP_API mmp_status mmp_coords_verify(const mmp_hypergraph* h, const mmp_coords* c, double eps, int* ok,
                                     char** violations_json);
MMP_API mmp_status mmp_operator_failures(const mmp_hypergraph* h, const mmp_coords* c, double tol, int* failures);
MMP_API mmp_status mmp_classical_operator_max(const mmp_hypergraph* h, int* out);
MMP_API mmp_status mmp_count_vectors(const char* components, int n, uint64_t* out);
MMP_API mmp_status mmp_generate_master(const char* components, int n, uint64_t node_limit, mmp_hypergraph** h,
                                       mmp_coords** c);
/* *found = 0 with *complete = 1 means no coordinatization exists over the components. */
MMP_API mmp_status mmp_vecfind(const mmp_hypergraph* h, const char* components, uint64_t node_limit, uint64_t seed,
                               mmp_coords** out, int* found, int* complete);
MMP_API mmp_status mmp_fill(const mmp_hypergraph* h, const mmp_coords* c, mmp_hypergraph** hout, mmp_coords** cout);

/* Built-in fixture catalog. */
MMP_API const char* mmp_catalog_json(void);
MMP_API size_t mmp_catalog_size(void);
MMP_API const char* mmp_catalog_name(size_t i);
/* c may be NULL; *c is NULL when the fixture has no vectors. */
MMP_API mmp_status mmp_catalog_get(const char* name, mmp_hypergraph** h, mmp_coords** c);

#ifdef __cplusplus
}
#endif

#endif
