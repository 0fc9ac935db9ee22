// Reader and writer for a line-oriented subset of OWL 2 functional syntax.
//
// Accepted top level:
//   Prefix(p:=<iri>)*
//   either bare axioms, or one Ontology([<iri>] axiom*) block
//
// '#' starts a comment that runs to the end of the line (outside IRIs and
// string literals). Unknown keywords are rejected with a ParseError.

#ifndef ORDO_OFS_HPP
#define ORDO_OFS_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordo/knowledge_base.hpp"

namespace ordo {

struct PrefixDeclaration {
  std::string prefix;  // including the trailing ':'
  std::string iri;     // including the angle brackets
  bool operator==(const PrefixDeclaration&) const = default;
};

struct SourceDocument {
  std::vector<PrefixDeclaration> prefixes;
  bool has_ontology_block = false;
  std::string ontology_iri;  // empty if the block has no IRI
  std::vector<Axiom> axioms;  // surface order

  KnowledgeBase knowledge_base() const { return KnowledgeBase::from_axioms(axioms); }
  bool operator==(const SourceDocument&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message, std::string token);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string token_;
};

SourceDocument parse_document(std::string_view text);
SourceDocument load_document(const std::filesystem::path& path);

/// Parses a single class expression, e.g. "ObjectSomeValuesFrom(R A)".
Concept parse_concept(std::string_view text);

/// Canonical form: one prefix or axiom per line, each ending in '\n'.
std::string serialize_document(const SourceDocument& doc);
std::string serialize_axiom(const Axiom& axiom);
std::string serialize_concept(const Concept& c);

}  // namespace ordo

#endif  // ORDO_OFS_HPP
