#ifndef MAXCYC_H
#define MAXCYC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MAXCYC_BUILDING)
#    define MAXCYC_API __declspec(dllexport)
#  else
#    define MAXCYC_API __declspec(dllimport)
#  endif
#else
#  define MAXCYC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct maxcyc_group maxcyc_group;

typedef enum maxcyc_status {
  MAXCYC_OK = 0,
  MAXCYC_E_INVALID_ARGUMENT,
  MAXCYC_E_CAP_EXCEEDED,
  MAXCYC_E_NOT_SUBGROUP,
  MAXCYC_E_NOT_NORMAL,
  MAXCYC_E_NOT_PROPER,
  MAXCYC_E_NO_SUCH_NORMAL,
  MAXCYC_E_PARSE,
  MAXCYC_E_ARITY,
  MAXCYC_E_NOT_P_GROUP,
  MAXCYC_E_CYCLIC_GROUP,
  MAXCYC_E_NOT_FROBENIUS,
  MAXCYC_E_NOT_EXPONENT_P,
  MAXCYC_E_HYPOTHESIS_FAILED,
  MAXCYC_E_CLASSIFICATION_FAILED,
  MAXCYC_E_UNKNOWN_SUITE,
  MAXCYC_E_CORPUS,
  MAXCYC_E_IO,
  MAXCYC_E_INTERNAL
} maxcyc_status;

typedef enum maxcyc_format { MAXCYC_FORMAT_TEXT = 0, MAXCYC_FORMAT_JSON = 1 } maxcyc_format;

typedef struct maxcyc_limits {
  size_t order_cap;
  size_t degree_cap;
} maxcyc_limits;

/* Defaults: order 20000, degree 128. */
MAXCYC_API maxcyc_limits maxcyc_default_limits(void);

/* Message of the last failed call on this thread; empty after success. */
MAXCYC_API const char* maxcyc_last_error(void);
MAXCYC_API const char* maxcyc_status_name(maxcyc_status status);

/* limits may be NULL for the defaults. */
MAXCYC_API maxcyc_status maxcyc_group_from_spec(const char* spec, const maxcyc_limits* limits,
                                                maxcyc_group** out);
MAXCYC_API void maxcyc_group_free(maxcyc_group* group);

MAXCYC_API maxcyc_status maxcyc_group_order(const maxcyc_group* group, size_t* out);
MAXCYC_API maxcyc_status maxcyc_group_degree(const maxcyc_group* group, size_t* out);
MAXCYC_API maxcyc_status maxcyc_eta(const maxcyc_group* group, size_t* out);
MAXCYC_API maxcyc_status maxcyc_l(const maxcyc_group* group, size_t* out);
MAXCYC_API maxcyc_status maxcyc_gminus_size(const maxcyc_group* group, size_t* out);
MAXCYC_API maxcyc_status maxcyc_normal_count(const maxcyc_group* group, size_t* out);

/* The index-th normal subgroup of the given order, as a group of its own. */
MAXCYC_API maxcyc_status maxcyc_normal(const maxcyc_group* group, size_t order, size_t index,
                                       maxcyc_group** out);
/* eta of the quotient by the selected normal subgroup. */
MAXCYC_API maxcyc_status maxcyc_quotient_eta(const maxcyc_group* group, size_t order,
                                             size_t index, size_t* out);

/* Rendered reports. *out is owned by the caller; release with maxcyc_string_free. */
MAXCYC_API maxcyc_status maxcyc_render_eta(const maxcyc_group* group, maxcyc_format fmt,
                                           char** out);
MAXCYC_API maxcyc_status maxcyc_render_normals(const maxcyc_group* group, maxcyc_format fmt,
                                               char** out);
MAXCYC_API maxcyc_status maxcyc_render_quot(const maxcyc_group* group, size_t order, size_t index,
                                            maxcyc_format fmt, char** out);
MAXCYC_API maxcyc_status maxcyc_render_xsub(const maxcyc_group* group, maxcyc_format fmt,
                                            char** out);
MAXCYC_API maxcyc_status maxcyc_render_gminus(const maxcyc_group* group, maxcyc_format fmt,
                                              char** out);
MAXCYC_API maxcyc_status maxcyc_render_gkgraph(const maxcyc_group* group, maxcyc_format fmt,
                                               char** out);

/* Runs suites (comma separated names or "all") over a corpus file.
 * *all_passed is set to 1 when every report passed. */
MAXCYC_API maxcyc_status maxcyc_verify(const char* corpus_path, const char* suites,
                                       const maxcyc_limits* limits, size_t jobs,
                                       maxcyc_format fmt, char** out, int* all_passed);

MAXCYC_API void maxcyc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
