#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "ngpd/groupoid.hpp"
#include "ngpd/multi_sset.hpp"
#include "ngpd/report.hpp"
#include "ngpd/simplicial_set.hpp"

namespace ngpd {

enum class DocumentKind { sset, multisset, groupoid, functor, ngroupoid, nfunctor };
const char* to_string(DocumentKind k);
std::optional<DocumentKind> parse_kind(std::string_view s);

struct DocumentMetadata {
  std::string name;
  std::uint64_t seed = 0;
  std::string provenance;
  bool operator==(const DocumentMetadata&) const = default;
};

/// sset, multisset and ngroupoid carry a MultiSSet (arity 1 for sset);
/// groupoid a FinGroupoid; functor a GroupoidFunctor; nfunctor a MultiSSetMap.
using Payload = std::variant<MultiSSet, FinGroupoid, GroupoidFunctor, MultiSSetMap>;

struct Document {
  DocumentKind kind = DocumentKind::sset;
  DocumentMetadata metadata;
  Payload payload;

  /// Throws std::invalid_argument when the payload does not fit the kind.
  Document(DocumentKind kind, Payload payload, DocumentMetadata metadata = {});

  const MultiSSet& carrier() const;  // sset, multisset, ngroupoid
  SimplicialSet sset() const;        // sset only
  const FinGroupoid& groupoid() const;
  const GroupoidFunctor& functor() const;
  const MultiSSetMap& map() const;

  bool operator==(const Document&) const = default;
};

/// Parse failure. JSON syntax errors carry the 1-based line and column;
/// structural errors name the offending JSON path.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column, std::string path)
      : std::runtime_error(what), line_(line), column_(column), path_(std::move(path)) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  int line_;
  int column_;
  std::string path_;
};

/// Throws ParseError.
Document parse_document(std::string_view text);
/// Canonical JSON text (two-space indent, trailing newline).
std::string serialize_document(const Document& d);

std::string report_to_json(const Report& r, bool witnesses = false);

}  // namespace ngpd
