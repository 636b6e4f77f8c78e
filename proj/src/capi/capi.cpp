#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "commands.hpp"
#include "ngpd.h"
#include "ngpd/suite.hpp"

struct ngpd_document {
  ngpd::Document doc;
};

namespace {

thread_local std::string last_error;

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ngpd::commands::Options convert(const ngpd_options* o) {
  ngpd::commands::Options out;
  if (!o) return out;
  out.dim_bound = o->dim_bound;
  out.seed = o->seed;
  out.json = o->format_json != 0;
  out.witness = o->witness != 0;
  out.level = o->level;
  out.object = o->object;
  out.size = o->size_medium ? ngpd::SizeClass::medium : ngpd::SizeClass::small;
  return out;
}

/// Runs `body`, mapping exceptions to NGPD_USAGE with the message kept for
/// ngpd_last_error.
template <class F>
int guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ngpd::ParseError& e) {
    last_error = std::string("parse error: ") + e.what();
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return NGPD_USAGE;
}

using ReportCommand = ngpd::Report (*)(const ngpd::Document&, const ngpd::commands::Options&);

int run_report(ReportCommand cmd, const ngpd_document* doc, const ngpd_options* options, char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    if (!doc || !report) throw std::invalid_argument("null argument");
    const auto o = convert(options);
    const ngpd::Report r = cmd(doc->doc, o);
    *report = copy(ngpd::commands::render(r, o));
    return ngpd::commands::status(r);
  });
}

using DocumentCommand = ngpd::Document (*)(const ngpd::Document&, const ngpd::commands::Options&);

int run_document(DocumentCommand cmd, const ngpd_document* doc, const ngpd_options* options, ngpd_document** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    if (!doc || !out) throw std::invalid_argument("null argument");
    *out = new ngpd_document{cmd(doc->doc, convert(options))};
    return static_cast<int>(NGPD_PASS);
  });
}

}  // namespace

extern "C" {

void ngpd_options_init(ngpd_options* o) {
  if (!o) return;
  *o = ngpd_options{};
  o->object = -1;
}

const char* ngpd_last_error(void) { return last_error.c_str(); }

void ngpd_string_free(char* s) { std::free(s); }

int ngpd_document_parse(const char* text, size_t length, ngpd_document** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new ngpd_document{ngpd::parse_document(std::string_view(text, length))};
    return static_cast<int>(NGPD_PASS);
  });
}

int ngpd_document_serialize(const ngpd_document* doc, char** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    if (!doc || !out) throw std::invalid_argument("null argument");
    *out = copy(ngpd::serialize_document(doc->doc));
    return static_cast<int>(NGPD_PASS);
  });
}

const char* ngpd_document_kind(const ngpd_document* doc) { return doc ? ngpd::to_string(doc->doc.kind) : ""; }

const char* ngpd_document_name(const ngpd_document* doc) { return doc ? doc->doc.metadata.name.c_str() : ""; }

void ngpd_document_free(ngpd_document* doc) { delete doc; }

int ngpd_validate(const ngpd_document* d, const ngpd_options* o, char** r) {
  return run_report(ngpd::commands::validate, d, o, r);
}
int ngpd_pi0(const ngpd_document* d, const ngpd_options* o, char** r) { return run_report(ngpd::commands::pi0, d, o, r); }
int ngpd_pi1(const ngpd_document* d, const ngpd_options* o, char** r) { return run_report(ngpd::commands::pi1, d, o, r); }
int ngpd_segal(const ngpd_document* d, const ngpd_options* o, char** r) {
  return run_report(ngpd::commands::segal, d, o, r);
}
int ngpd_ngroupoid_validate(const ngpd_document* d, const ngpd_options* o, char** r) {
  return run_report(ngpd::commands::ngpd_validate, d, o, r);
}
int ngpd_ngroupoid_pi(const ngpd_document* d, const ngpd_options* o, char** r) {
  return run_report(ngpd::commands::ngpd_pi, d, o, r);
}
int ngpd_equiv(const ngpd_document* d, const ngpd_options* o, char** r) {
  return run_report(ngpd::commands::equiv, d, o, r);
}
int ngpd_unit_n1(const ngpd_document* d, const ngpd_options* o, char** r) {
  return run_report(ngpd::commands::unit_n1, d, o, r);
}
int ngpd_unit_n2(const ngpd_document* d, const ngpd_options* o, char** r) {
  return run_report(ngpd::commands::unit_n2, d, o, r);
}
int ngpd_f_decompose(const ngpd_document* d, const ngpd_options* o, char** r) {
  return run_report(ngpd::commands::f_decompose, d, o, r);
}

int ngpd_nerve(const ngpd_document* d, const ngpd_options* o, ngpd_document** out) {
  return run_document(ngpd::commands::nerve, d, o, out);
}
int ngpd_diag(const ngpd_document* d, const ngpd_options* o, ngpd_document** out) {
  return run_document(ngpd::commands::diag, d, o, out);
}

int ngpd_suite(const ngpd_options* options, char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    if (!report) throw std::invalid_argument("null argument");
    const auto o = convert(options);
    const ngpd::SuiteResult s = ngpd::run_acceptance(o.seed, o.size);
    *report = copy(o.json ? s.to_json() : s.to_text());
    return s.passed() ? static_cast<int>(NGPD_PASS) : static_cast<int>(NGPD_FAIL);
  });
}

int ngpd_corpus(const ngpd_options* options, ngpd_document*** docs, size_t* count) {
  if (docs) *docs = nullptr;
  if (count) *count = 0;
  return guarded([&] {
    if (!docs || !count) throw std::invalid_argument("null argument");
    const auto o = convert(options);
    auto all = ngpd::generate_corpus(o.seed, o.size);
    auto** out = new ngpd_document*[all.size()]();
    try {
      for (std::size_t i = 0; i < all.size(); ++i) out[i] = new ngpd_document{std::move(all[i])};
    } catch (...) {
      ngpd_corpus_free(out, all.size());
      throw;
    }
    *docs = out;
    *count = all.size();
    return static_cast<int>(NGPD_PASS);
  });
}

void ngpd_corpus_free(ngpd_document** docs, size_t count) {
  if (!docs) return;
  for (size_t i = 0; i < count; ++i) delete docs[i];
  delete[] docs;
}

}  // extern "C"
