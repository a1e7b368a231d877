#ifndef QSW_QSW_H
#define QSW_QSW_H

/* C interface to the qsw library. Strings returned by the library are
 * owned by the caller and released with qsw_string_free. */

#include <stdint.h>

#if defined(_WIN32)
#define QSW_API __declspec(dllexport)
#else
#define QSW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsw_status {
  QSW_OK = 0,
  QSW_INVALID_ARGUMENT = 1,
  QSW_PARSE = 2,
  QSW_DIMENSION = 3,
  QSW_DEGENERATE = 4,
  QSW_CONFIG = 5,
  QSW_INTERNAL = 6
} qsw_status;

typedef struct qsw_element qsw_element;
typedef struct qsw_report qsw_report;

typedef enum qsw_format { QSW_FORMAT_JSON = 0, QSW_FORMAT_TEXT = 1 } qsw_format;

typedef struct qsw_suite_config {
  const char* suite; /* NULL means "all" */
  int n;
  int p_max;
  const char* q0; /* NULL means 16/9; ignored when symbolic */
  int symbolic;
  uint64_t seed;
  int samples;
  int reproducible;
} qsw_suite_config;

QSW_API const char* qsw_version(void);

/* Message for the last failing call on this thread; empty after success. */
QSW_API const char* qsw_last_error(void);

QSW_API void qsw_suite_config_init(qsw_suite_config* cfg);

/* Elements of the extended tensor algebra over gl_n. */
QSW_API qsw_status qsw_element_parse(const char* text, int n, qsw_element** out);
QSW_API qsw_status qsw_element_to_string(const qsw_element* x, char** out);
QSW_API qsw_status qsw_element_product(const qsw_element* a, const qsw_element* b, qsw_element** out);
QSW_API qsw_status qsw_element_equal(const qsw_element* a, const qsw_element* b, int* out);
QSW_API void qsw_element_free(qsw_element* x);

/* Evaluates a scalar, element or operator expression and prints its normal form. */
QSW_API qsw_status qsw_eval(const char* text, int n, char** out);

QSW_API qsw_status qsw_run_suite(const qsw_suite_config* cfg, qsw_report** out);
QSW_API qsw_status qsw_report_render(const qsw_report* r, qsw_format format, char** out);
QSW_API int qsw_report_failed(const qsw_report* r);
QSW_API void qsw_report_free(qsw_report* r);

/* Matrix of a named operator on V^(x)p: e<i>, f<i>, k<i>, k<i>^-1, t<r>, E<i>,<j>, L<i>,<j>. */
QSW_API qsw_status qsw_matrix_json(const char* name, int n, int p, char** out);

QSW_API void qsw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
