/*
 * C interface to the diameter-constrained reliability engine.
 *
 * Instances are opaque handles. Every fallible call returns a dcr_status;
 * on failure dcr_last_error() describes the problem (per thread, valid until
 * the next call on that thread). Strings handed out by the library are
 * NUL-terminated and must be released with dcr_free().
 */
#ifndef DCR_DCR_H
#define DCR_DCR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DCR_BUILDING_LIBRARY)
#define DCR_API __declspec(dllexport)
#else
#define DCR_API __declspec(dllimport)
#endif
#else
#define DCR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dcr_status {
  DCR_OK = 0,
  DCR_ERROR_INVALID_ARGUMENT = 1,
  DCR_ERROR_PARSE = 2,
  DCR_ERROR_RESOURCE_LIMIT = 3,
  DCR_ERROR_INTERNAL = 4
} dcr_status;

typedef struct dcr_instance dcr_instance;

DCR_API const char* dcr_version(void);
DCR_API const char* dcr_last_error(void);
/* 1-based position of the last DCR_ERROR_PARSE on this thread, 0 otherwise. */
DCR_API size_t dcr_last_error_line(void);
DCR_API size_t dcr_last_error_column(void);

DCR_API void dcr_free(char* text);

DCR_API dcr_status dcr_instance_parse(const char* text, dcr_instance** out);
DCR_API dcr_status dcr_instance_load(const char* path, dcr_instance** out);
DCR_API void dcr_instance_destroy(dcr_instance* inst);
/* Canonical instance text. */
DCR_API dcr_status dcr_instance_text(const dcr_instance* inst, char** out);
DCR_API size_t dcr_instance_node_count(const dcr_instance* inst);
DCR_API size_t dcr_instance_link_count(const dcr_instance* inst);
DCR_API int dcr_instance_diameter(const dcr_instance* inst);

/* NULL string fields take the defaults set by dcr_compute_options_init. */
typedef struct dcr_compute_options {
  const char* method;      /* auto | ip5m | oracle | incl-excl | mc */
  const char* mode;        /* float | rational | poly; NULL = from the file */
  const char* irrelevance; /* c1 | c2 | c3 | off */
  const char* pivot;       /* random | first | maxdeg */
  const char* p_value;     /* value substituted for the symbol p; NULL = none */
  uint64_t seed;
  uint64_t samples;
  uint64_t max_states; /* brute-force state cap; 0 = default (2^24) */
  int trace;
} dcr_compute_options;

DCR_API void dcr_compute_options_init(dcr_compute_options* options);

/* Each writes a JSON result document to *json_out. */
DCR_API dcr_status dcr_compute(const dcr_instance* inst, const dcr_compute_options* options,
                               char** json_out);
DCR_API dcr_status dcr_irrelevant(const dcr_instance* inst, const char* condition,
                                  char** json_out);
DCR_API dcr_status dcr_reduce(const dcr_instance* inst, const char* irrelevance, char** json_out);

typedef struct dcr_generate_options {
  const char* family; /* path|cycle|complete|grid|cancela-petingi|replacement|figred */
  int n;
  int rows;
  int cols;
  int diameter;          /* 0 = family default */
  const char* p;         /* reliability text; NULL = family default */
  const char* bipartite; /* cancela-petingi core, e.g. "cycle:6" */
  const char* outer;     /* replacement outer graph, e.g. "cycle:3" */
  const char* inner;     /* replacement inner graph */
} dcr_generate_options;

DCR_API void dcr_generate_options_init(dcr_generate_options* options);
/* Writes instance text to *text_out. */
DCR_API dcr_status dcr_generate(const dcr_generate_options* options, char** text_out);

#ifdef __cplusplus
}
#endif

#endif /* DCR_DCR_H */
