#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "ngpd.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static ngpd_document* find(ngpd_document** docs, size_t count, const char* name) {
  for (size_t i = 0; i < count; ++i)
    if (strcmp(ngpd_document_name(docs[i]), name) == 0) return docs[i];
  return NULL;
}

int main(void) {
  ngpd_options o;
  ngpd_options_init(&o);
  EXPECT(o.seed == 0 && o.object == -1 && o.dim_bound == 0);

  ngpd_document** docs = NULL;
  size_t count = 0;
  EXPECT(ngpd_corpus(&o, &docs, &count) == NGPD_PASS);
  EXPECT(count > 100);

  ngpd_document* c2 = find(docs, count, "C2");
  ngpd_document* kill = find(docs, count, "C2->1");
  ngpd_document* horn = find(docs, count, "horn");
  EXPECT(c2 && kill && horn);
  if (!c2 || !kill || !horn) return 1;
  EXPECT(strcmp(ngpd_document_kind(c2), "groupoid") == 0);

  /* serialize, parse, serialize again: same bytes */
  char* text = NULL;
  EXPECT(ngpd_document_serialize(c2, &text) == NGPD_PASS);
  ngpd_document* back = NULL;
  EXPECT(ngpd_document_parse(text, strlen(text), &back) == NGPD_PASS);
  char* again = NULL;
  EXPECT(ngpd_document_serialize(back, &again) == NGPD_PASS);
  EXPECT(strcmp(text, again) == 0);
  ngpd_string_free(text);
  ngpd_string_free(again);

  char* report = NULL;
  EXPECT(ngpd_validate(back, &o, &report) == NGPD_PASS);
  EXPECT(report && strstr(report, "PASS"));
  ngpd_string_free(report);

  ngpd_document* n = NULL;
  EXPECT(ngpd_nerve(back, &o, &n) == NGPD_PASS);
  EXPECT(n && strcmp(ngpd_document_kind(n), "sset") == 0);
  EXPECT(ngpd_validate(n, &o, &report) == NGPD_PASS);
  ngpd_string_free(report);
  EXPECT(ngpd_segal(n, &o, &report) == NGPD_PASS);
  ngpd_string_free(report);

  /* a failing verdict still returns a report */
  EXPECT(ngpd_equiv(kill, &o, &report) == NGPD_FAIL);
  EXPECT(report && strstr(report, "Hom"));
  ngpd_string_free(report);
  EXPECT(ngpd_segal(horn, &o, &report) == NGPD_FAIL);
  ngpd_string_free(report);

  /* JSON rendering */
  o.format_json = 1;
  EXPECT(ngpd_pi0(n, &o, &report) == NGPD_PASS);
  EXPECT(report && report[0] == '{');
  ngpd_string_free(report);
  o.format_json = 0;

  /* wrong kind: usage, no report, message kept */
  report = (char*)1;
  EXPECT(ngpd_unit_n1(n, &o, &report) == NGPD_USAGE);
  EXPECT(report == NULL);
  EXPECT(strlen(ngpd_last_error()) > 0);

  /* parse errors */
  ngpd_document* bad = (ngpd_document*)1;
  EXPECT(ngpd_document_parse("{\"kind\": \"sset\"", 15, &bad) == NGPD_USAGE);
  EXPECT(bad == NULL);
  EXPECT(strncmp(ngpd_last_error(), "parse error", 11) == 0);
  EXPECT(ngpd_document_parse(NULL, 0, &bad) == NGPD_USAGE);

  /* a successful call clears the last error */
  EXPECT(ngpd_validate(c2, &o, &report) == NGPD_PASS);
  EXPECT(ngpd_last_error()[0] == '\0');
  ngpd_string_free(report);

  ngpd_document_free(n);
  ngpd_document_free(back);
  ngpd_document_free(NULL);
  ngpd_corpus_free(docs, count);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("C API: all checks passed\n");
  return failures ? 1 : 0;
}
