#include <CLI11.hpp>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "ngpd.h"

namespace {

constexpr int kUsage = NGPD_USAGE;

struct DocumentDeleter {
  void operator()(ngpd_document* d) const { ngpd_document_free(d); }
};
using DocumentPtr = std::unique_ptr<ngpd_document, DocumentDeleter>;

struct StringDeleter {
  void operator()(char* s) const { ngpd_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kUsage;
}

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  text.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int load(const std::string& path, DocumentPtr& doc) {
  std::string text;
  if (!read_input(path, text)) return fail_usage("cannot read " + path);
  ngpd_document* raw = nullptr;
  if (ngpd_document_parse(text.data(), text.size(), &raw) != NGPD_PASS)
    return fail_usage(path + ": " + ngpd_last_error());
  doc.reset(raw);
  return NGPD_PASS;
}

using ReportFn = int (*)(const ngpd_document*, const ngpd_options*, char**);
using DocumentFn = int (*)(const ngpd_document*, const ngpd_options*, ngpd_document**);

int run_report(ReportFn fn, const std::string& input, const ngpd_options& o) {
  DocumentPtr doc;
  if (int rc = load(input, doc); rc != NGPD_PASS) return rc;
  char* raw = nullptr;
  const int rc = fn(doc.get(), &o, &raw);
  StringPtr report(raw);
  if (rc == NGPD_USAGE) return fail_usage(ngpd_last_error());
  std::cout << report.get();
  return rc;
}

int run_document(DocumentFn fn, const std::string& input, const std::string& out, const ngpd_options& o) {
  DocumentPtr doc;
  if (int rc = load(input, doc); rc != NGPD_PASS) return rc;
  ngpd_document* raw = nullptr;
  if (fn(doc.get(), &o, &raw) != NGPD_PASS) return fail_usage(ngpd_last_error());
  DocumentPtr result(raw);
  char* text = nullptr;
  if (ngpd_document_serialize(result.get(), &text) != NGPD_PASS) return fail_usage(ngpd_last_error());
  StringPtr owned(text);
  if (!write_output(out, owned.get())) return fail_usage("cannot write " + out);
  return NGPD_PASS;
}

std::string file_stem(const std::string& name) {
  std::string out;
  for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
  return out;
}

int run_corpus(const std::string& out_dir, const ngpd_options& o) {
  ngpd_document** docs = nullptr;
  size_t count = 0;
  if (ngpd_corpus(&o, &docs, &count) != NGPD_PASS) return fail_usage(ngpd_last_error());
  int rc = NGPD_PASS;
  std::ostringstream listing;
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) rc = fail_usage("cannot create " + out_dir + ": " + ec.message());
  }
  for (size_t i = 0; i < count && rc == NGPD_PASS; ++i) {
    char index[16];
    std::snprintf(index, sizeof index, "%03zu", i);
    const std::string kind = ngpd_document_kind(docs[i]), name = ngpd_document_name(docs[i]);
    listing << index << ' ' << kind << ' ' << name << '\n';
    if (out_dir.empty()) continue;
    char* text = nullptr;
    if (ngpd_document_serialize(docs[i], &text) != NGPD_PASS) {
      rc = fail_usage(ngpd_last_error());
      break;
    }
    StringPtr owned(text);
    const auto path = std::filesystem::path(out_dir) / (std::string(index) + "-" + kind + "-" + file_stem(name) + ".json");
    if (!write_output(path.string(), owned.get())) rc = fail_usage("cannot write " + path.string());
  }
  ngpd_corpus_free(docs, count);
  if (rc == NGPD_PASS) std::cout << listing.str();
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite simplicial sets, groupoids and n-groupoids: validation and invariants"};
  app.name("ngpd");
  app.require_subcommand(1);
  app.fallthrough();

  ngpd_options o;
  ngpd_options_init(&o);
  std::string format = "text", size = "small", input, out;
  bool witness = false;

  app.add_option("--dim-bound", o.dim_bound, "Dimension bound for generated nerves and Segal checks")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Seed for the corpus and the suite")->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--witness", witness, "Print witnesses of passing checks too");
  app.add_option("--level", o.level, "Homotopy level i for ngpd-pi (default: all)")->check(CLI::PositiveNumber);
  app.add_option("--object", o.object, "Object index (default: one per component)")->check(CLI::NonNegativeNumber);
  app.add_option("--size", size, "Corpus size class")->check(CLI::IsMember({"small", "medium"}))->capture_default_str();
  app.add_option("--out", out, "Output file (documents) or directory (corpus)");

  const std::map<std::string, std::pair<std::string, ReportFn>> report_verbs = {
      {"validate", {"Check the structural axioms of any document", ngpd_validate}},
      {"pi0", {"Connected components / isomorphism classes", ngpd_pi0}},
      {"pi1", {"Edge-path vertex groups or automorphism groups", ngpd_pi1}},
      {"segal", {"Segal maps of a simplicial set; pi_0 law or P-object checks of 2-fold objects", ngpd_segal}},
      {"ngpd-validate", {"Check the n-groupoid axioms G0-G3", ngpd_ngroupoid_validate}},
      {"ngpd-pi", {"pi_0 and pi_i of an n-groupoid", ngpd_ngroupoid_pi}},
      {"equiv", {"Is a functor or n-functor an equivalence", ngpd_equiv}},
      {"unit-n1", {"Unit G -> Pi_1(N G) of a groupoid", ngpd_unit_n1}},
      {"unit-n2", {"pi_0/pi_1 of a 2-groupoid against its diagonal", ngpd_unit_n2}},
      {"f-decompose", {"Component decomposition of a simplicial set", ngpd_f_decompose}},
  };
  const std::map<std::string, std::pair<std::string, DocumentFn>> document_verbs = {
      {"nerve", {"Nerve of a groupoid or functor", ngpd_nerve}},
      {"diag", {"Total diagonal of a multisimplicial set or map", ngpd_diag}},
  };

  for (const auto& [verb, entry] : report_verbs)
    app.add_subcommand(verb, entry.first)->add_option("input", input, "Document file, - for stdin")->required();
  for (const auto& [verb, entry] : document_verbs)
    app.add_subcommand(verb, entry.first)->add_option("input", input, "Document file, - for stdin")->required();
  app.add_subcommand("suite", "Run the acceptance suite on the seeded corpus");
  app.add_subcommand("corpus", "List the seeded corpus, or write it to --out DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  o.format_json = format == "json";
  o.witness = witness ? 1 : 0;
  o.size_medium = size == "medium";

  const std::string verb = app.get_subcommands().front()->get_name();
  if (auto it = report_verbs.find(verb); it != report_verbs.end()) return run_report(it->second.second, input, o);
  if (auto it = document_verbs.find(verb); it != document_verbs.end())
    return run_document(it->second.second, input, out, o);
  if (verb == "corpus") return run_corpus(out, o);

  char* raw = nullptr;
  const int rc = ngpd_suite(&o, &raw);
  StringPtr report(raw);
  if (rc == NGPD_USAGE) return fail_usage(ngpd_last_error());
  if (!write_output(out, report.get())) return fail_usage("cannot write " + out);
  return rc;
}
