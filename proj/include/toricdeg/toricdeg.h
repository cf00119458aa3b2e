#ifndef TORICDEG_H
#define TORICDEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TDG_API __declspec(dllexport)
#else
#define TDG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  TDG_OK = 0,
  TDG_ERR_SCHEMA = 2,
  TDG_ERR_PRECONDITION = 3,
  TDG_ERR_INTERNAL = 4,
  TDG_ERR_ARGUMENT = 5
} tdg_status;

typedef struct tdg_result tdg_result;
typedef struct tdg_polytope tdg_polytope;
typedef struct tdg_bott tdg_bott;

TDG_API const char* tdg_version(void);

/* Message of the last failing call on this thread, or "". */
TDG_API const char* tdg_last_error(void);

/* Names of the commands accepted by tdg_run, separated by newlines. */
TDG_API const char* tdg_commands(void);

/* Runs a command on a JSON request. *out is always set (also on failure)
   and must be released with tdg_result_free. */
TDG_API tdg_status tdg_run(const char* command, const char* request_json, tdg_result** out);

TDG_API tdg_status tdg_result_status(const tdg_result* r);
/* Compact JSON response; NULL unless the status is TDG_OK. */
TDG_API const char* tdg_result_json(const tdg_result* r);
/* Error message; NULL when the status is TDG_OK. */
TDG_API const char* tdg_result_error(const tdg_result* r);
/* JSON pointer of the offending field for schema errors, else NULL. */
TDG_API const char* tdg_result_error_pointer(const tdg_result* r);
TDG_API void tdg_result_free(tdg_result* r);

/* Polytope {x : A x <= b} given row-major as dim+1 entries per row. Entries are
   "p/q" or integer strings. */
TDG_API tdg_status tdg_polytope_from_inequalities(size_t dim, size_t rows, const char* const* entries,
                                                  tdg_polytope** out);
TDG_API tdg_status tdg_polytope_from_vertices(size_t dim, size_t count, const int64_t* coords, tdg_polytope** out);
TDG_API size_t tdg_polytope_dim(const tdg_polytope* p);
TDG_API tdg_status tdg_polytope_vertex_count(const tdg_polytope* p, size_t* out);
TDG_API tdg_status tdg_polytope_lattice_point_count(const tdg_polytope* p, int dilation, size_t* out);
TDG_API tdg_status tdg_polytope_is_smooth(const tdg_polytope* p, int* out);
TDG_API tdg_status tdg_polytope_is_normal(const tdg_polytope* p, int max_level, int* out);
TDG_API void tdg_polytope_free(tdg_polytope* p);

/* Bott tower; a is n*n row-major (strictly upper triangular), lambda has n
   positive entries as strings. */
TDG_API tdg_status tdg_bott_new(size_t n, const int64_t* a, const char* const* lambda, tdg_bott** out);
TDG_API size_t tdg_bott_n(const tdg_bott* b);
TDG_API tdg_status tdg_bott_is_q_trivial(const tdg_bott* b, int* out);
/* *out is 1 for a symplectomorphism, 0 otherwise. */
TDG_API tdg_status tdg_bott_equivalent(const tdg_bott* b, const tdg_bott* bt, int* out);
TDG_API tdg_status tdg_bott_polytope(const tdg_bott* b, tdg_polytope** out);
TDG_API void tdg_bott_free(tdg_bott* b);

#ifdef __cplusplus
}
#endif

#endif
