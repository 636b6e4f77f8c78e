#ifndef NGPD_H
#define NGPD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NGPD_API __declspec(dllexport)
#else
#define NGPD_API __attribute__((visibility("default")))
#endif

/* Status codes double as CLI exit codes. */
typedef enum {
  NGPD_PASS = 0,  /* command ran and the report verdict is PASS */
  NGPD_FAIL = 1,  /* report verdict is FAIL or ERROR */
  NGPD_USAGE = 2  /* parse error, wrong document kind or bad option */
} ngpd_status;

typedef struct ngpd_document ngpd_document;

typedef struct {
  int dim_bound;     /* 0: command default */
  uint64_t seed;     /* corpus and suite seed */
  int format_json;   /* reports as JSON instead of text */
  int witness;       /* print witnesses of passing checks too */
  int level;         /* homotopy level for ngpd-pi, 0 for all */
  int object;        /* object index, -1 for one per component */
  int size_medium;   /* corpus size class: 0 small, 1 medium */
} ngpd_options;

NGPD_API void ngpd_options_init(ngpd_options* options);

/* Message of the last failing call on this thread; never NULL. */
NGPD_API const char* ngpd_last_error(void);
/* Frees strings returned through char** out-parameters. */
NGPD_API void ngpd_string_free(char* s);

NGPD_API int ngpd_document_parse(const char* text, size_t length, ngpd_document** out);
NGPD_API int ngpd_document_serialize(const ngpd_document* doc, char** out);
/* "sset", "multisset", "groupoid", "functor", "ngroupoid" or "nfunctor". */
NGPD_API const char* ngpd_document_kind(const ngpd_document* doc);
NGPD_API const char* ngpd_document_name(const ngpd_document* doc);
NGPD_API void ngpd_document_free(ngpd_document* doc);

/* Report-producing commands. On NGPD_PASS and NGPD_FAIL *report holds the
   rendered report; on NGPD_USAGE it is NULL and ngpd_last_error explains. */
NGPD_API int ngpd_validate(const ngpd_document* doc, const ngpd_options* options, char** report);
NGPD_API int ngpd_pi0(const ngpd_document* doc, const ngpd_options* options, char** report);
NGPD_API int ngpd_pi1(const ngpd_document* doc, const ngpd_options* options, char** report);
NGPD_API int ngpd_segal(const ngpd_document* doc, const ngpd_options* options, char** report);
NGPD_API int ngpd_ngroupoid_validate(const ngpd_document* doc, const ngpd_options* options, char** report);
NGPD_API int ngpd_ngroupoid_pi(const ngpd_document* doc, const ngpd_options* options, char** report);
NGPD_API int ngpd_equiv(const ngpd_document* doc, const ngpd_options* options, char** report);
NGPD_API int ngpd_unit_n1(const ngpd_document* doc, const ngpd_options* options, char** report);
NGPD_API int ngpd_unit_n2(const ngpd_document* doc, const ngpd_options* options, char** report);
NGPD_API int ngpd_f_decompose(const ngpd_document* doc, const ngpd_options* options, char** report);

/* Document-producing commands. */
NGPD_API int ngpd_nerve(const ngpd_document* doc, const ngpd_options* options, ngpd_document** out);
NGPD_API int ngpd_diag(const ngpd_document* doc, const ngpd_options* options, ngpd_document** out);

/* Acceptance suite on the corpus of options->seed. */
NGPD_API int ngpd_suite(const ngpd_options* options, char** report);

/* Corpus of options->seed and size class. Free with ngpd_corpus_free. */
NGPD_API int ngpd_corpus(const ngpd_options* options, ngpd_document*** docs, size_t* count);
NGPD_API void ngpd_corpus_free(ngpd_document** docs, size_t count);

#ifdef __cplusplus
}
#endif

#endif
