#ifndef JETLAW_H
#define JETLAW_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(JETLAW_BUILDING)
#    define JETLAW_API __declspec(dllexport)
#  else
#    define JETLAW_API __declspec(dllimport)
#  endif
#else
#  define JETLAW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jetlaw_status {
  JETLAW_OK = 0,
  JETLAW_DOMAIN_ERROR = 1,
  JETLAW_PARSE_ERROR = 2,
  JETLAW_INVALID_ARGUMENT = 3,
  JETLAW_INTERNAL_ERROR = 4
} jetlaw_status;

typedef enum jetlaw_format { JETLAW_FORMAT_JSON = 0, JETLAW_FORMAT_TEXT = 1 } jetlaw_format;

typedef struct jetlaw_problem jetlaw_problem;

/* Integer fields use -1 for "not set". */
typedef struct jetlaw_options {
  int jet_degree;
  int base_degree;
  int order;
  int unsafe_order;
  int symbolic;
  int force;
  int timing;
  jetlaw_format format;
} jetlaw_options;

JETLAW_API void jetlaw_options_init(jetlaw_options* options);

JETLAW_API jetlaw_status jetlaw_problem_parse(const char* source, jetlaw_problem** out);
JETLAW_API void jetlaw_problem_free(jetlaw_problem* problem);
JETLAW_API int jetlaw_problem_dimension(const jetlaw_problem* problem);
JETLAW_API jetlaw_status jetlaw_problem_print(const jetlaw_problem* problem, char** out);

/*
 * Report producers. On JETLAW_OK, *report holds a string owned by the caller
 * (release with jetlaw_string_free) and *exit_code the command's exit code.
 */
JETLAW_API jetlaw_status jetlaw_classify(const jetlaw_problem* problem, const jetlaw_options* options,
                                         char** report, int* exit_code);
JETLAW_API jetlaw_status jetlaw_claws(const jetlaw_problem* problem, const jetlaw_options* options,
                                      char** report, int* exit_code);
JETLAW_API jetlaw_status jetlaw_verify(const jetlaw_problem* problem, const char* density,
                                       const char* const* fluxes, size_t flux_count,
                                       const jetlaw_options* options, char** report, int* exit_code);
JETLAW_API jetlaw_status jetlaw_dims(int n, int r, const jetlaw_options* options, char** report,
                                     int* exit_code);

JETLAW_API void jetlaw_string_free(char* s);

/* Message of the last failing call on this thread; empty after success. */
JETLAW_API const char* jetlaw_last_error(void);
JETLAW_API const char* jetlaw_version(void);

#ifdef __cplusplus
}
#endif

#endif
