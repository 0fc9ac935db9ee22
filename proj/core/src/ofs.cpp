#include "ordo/ofs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ordo {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message,
                       std::string token)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                         (token.empty() ? std::string() : " (near '" + token + "')")),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(token)) {}

namespace {

constexpr std::size_t kMaxNesting = 256;
constexpr std::string_view kOwlThing = "owl:Thing";
constexpr std::string_view kOwlNothing = "owl:Nothing";
constexpr std::string_view kOwlThingIri = "<http://www.w3.org/2002/07/owl#Thing>";
constexpr std::string_view kOwlNothingIri = "<http://www.w3.org/2002/07/owl#Nothing>";

enum class TokenType { LParen, RParen, Equals, Iri, Name, String, End };

struct Token {
  TokenType type = TokenType::End;
  std::string text;  // name / iri / unescaped string body
  Literal literal;   // String only
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) return tok;
    const char c = text_[pos_];
    if (c == '(') {
      advance();
      tok.type = TokenType::LParen;
      tok.text = "(";
    } else if (c == ')') {
      advance();
      tok.type = TokenType::RParen;
      tok.text = ")";
    } else if (c == '=') {
      advance();
      tok.type = TokenType::Equals;
      tok.text = "=";
    } else if (c == '<') {
      tok.type = TokenType::Iri;
      tok.text = read_iri(tok);
    } else if (c == '"') {
      tok.type = TokenType::String;
      read_string(tok);
    } else {
      tok.type = TokenType::Name;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
      tok.text = std::string(text_.substr(tok_start(tok), pos_ - tok_start(tok)));
    }
    return tok;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static bool is_name_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return !std::isspace(u) && c != '(' && c != ')' && c != '=' && c != '<' && c != '"' &&
           c != '#';
  }

  std::size_t tok_start(const Token& tok) const {
    // tokens never span lines except strings; recompute from column
    return line_start_ + (tok.column - 1);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
      line_start_ = pos_ + 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string read_iri(const Token& tok) {
    const std::size_t start = pos_;
    advance();
    while (pos_ < text_.size() && text_[pos_] != '>') {
      if (text_[pos_] == '\n' || text_[pos_] == ' ') {
        throw ParseError(line_, column_, "unterminated IRI", std::string(text_.substr(start, pos_ - start)));
      }
      advance();
    }
    if (pos_ >= text_.size()) {
      throw ParseError(tok.line, tok.column, "unterminated IRI",
                       std::string(text_.substr(start)));
    }
    advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  void read_string(Token& tok) {
    advance();
    std::string body;
    bool closed = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size()) break;
        const char e = text_[pos_];
        if (e != '\\' && e != '"') {
          throw ParseError(line_, column_, "invalid escape in string literal", std::string(1, e));
        }
        body.push_back(e);
        advance();
      } else if (c == '"') {
        advance();
        closed = true;
        break;
      } else {
        body.push_back(c);
        advance();
      }
    }
    if (!closed) throw ParseError(tok.line, tok.column, "unterminated string literal", "\"");
    tok.text = body;
    tok.literal.lexical = std::move(body);
    if (text_.substr(pos_, 2) == "^^") {
      advance();
      advance();
      if (pos_ < text_.size() && text_[pos_] == '<') {
        tok.literal.datatype = read_iri(tok);
      } else {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
        if (start == pos_) throw ParseError(line_, column_, "missing datatype after ^^", "^^");
        tok.literal.datatype = std::string(text_.substr(start, pos_ - start));
      }
    } else if (pos_ < text_.size() && text_[pos_] == '@') {
      advance();
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
        advance();
      }
      if (start == pos_) throw ParseError(line_, column_, "missing language tag after @", "@");
      tok.literal.language = std::string(text_.substr(start, pos_ - start));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::size_t line_start_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {
    current_ = lexer_.next();
    lookahead_ = lexer_.next();
  }

  SourceDocument document() {
    SourceDocument doc;
    bool block_done = false;
    while (current_.type != TokenType::End) {
      if (is_keyword("Prefix")) {
        if (!doc.axioms.empty() || doc.has_ontology_block) fail("Prefix after axioms");
        doc.prefixes.push_back(prefix());
      } else if (is_keyword("Ontology")) {
        if (doc.has_ontology_block || !doc.axioms.empty()) fail("unexpected Ontology block");
        doc.has_ontology_block = true;
        shift();
        expect(TokenType::LParen, "'('");
        if (current_.type == TokenType::Iri) {
          doc.ontology_iri = current_.text;
          shift();
        }
        while (current_.type != TokenType::RParen) {
          if (current_.type == TokenType::End) fail("unexpected end of input");
          doc.axioms.push_back(axiom());
        }
        shift();
        block_done = true;
      } else {
        if (block_done) fail("axiom after Ontology block");
        doc.axioms.push_back(axiom());
      }
    }
    return doc;
  }

  Concept lone_concept() {
    Concept c = class_expression();
    if (current_.type != TokenType::End) fail("trailing input after class expression");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    if (current_.type == TokenType::End) {
      throw ParseError(current_.line, current_.column, message, "");
    }
    throw ParseError(current_.line, current_.column, message, current_.text);
  }

  void shift() {
    current_ = std::move(lookahead_);
    lookahead_ = lexer_.next();
  }

  bool is_keyword(std::string_view word) const {
    return current_.type == TokenType::Name && current_.text == word &&
           lookahead_.type == TokenType::LParen;
  }

  bool at_constructor() const {
    return current_.type == TokenType::Name && lookahead_.type == TokenType::LParen;
  }

  void expect(TokenType type, std::string_view what) {
    if (current_.type != type) {
      fail(current_.type == TokenType::End ? "unexpected end of input, expected " + std::string(what)
                                           : "expected " + std::string(what));
    }
    shift();
  }

  PrefixDeclaration prefix() {
    shift();
    expect(TokenType::LParen, "'('");
    if (current_.type != TokenType::Name || current_.text.back() != ':') {
      fail("expected prefix name ending in ':'");
    }
    PrefixDeclaration decl{current_.text, {}};
    shift();
    expect(TokenType::Equals, "'='");
    if (current_.type != TokenType::Iri) fail("expected IRI");
    decl.iri = current_.text;
    shift();
    expect(TokenType::RParen, "')'");
    return decl;
  }

  std::string entity_name(std::string_view what) {
    if ((current_.type == TokenType::Name && lookahead_.type != TokenType::LParen) ||
        current_.type == TokenType::Iri) {
      std::string name = current_.text;
      shift();
      return name;
    }
    fail(current_.type == TokenType::End ? "unexpected end of input, expected " + std::string(what)
                                         : "expected " + std::string(what));
  }

  std::uint32_t cardinality() {
    if (current_.type != TokenType::Name || current_.text.empty() ||
        !std::ranges::all_of(current_.text, [](char c) { return c >= '0' && c <= '9'; })) {
      fail("expected non-negative integer cardinality");
    }
    std::uint32_t value = 0;
    const auto* first = current_.text.data();
    const auto* last = first + current_.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail("cardinality out of range");
    shift();
    return value;
  }

  Axiom axiom() {
    if (!at_constructor()) fail("expected axiom");
    const std::string keyword = current_.text;
    const std::size_t kw_line = current_.line;
    const std::size_t kw_column = current_.column;
    shift();
    shift();  // '('
    Axiom result;
    if (keyword == "Declaration") {
      if (!at_constructor()) fail("expected entity type");
      const std::string type = current_.text;
      EntityType entity;
      if (type == "Class") {
        entity = EntityType::Class;
      } else if (type == "ObjectProperty") {
        entity = EntityType::ObjectProperty;
      } else if (type == "DataProperty") {
        entity = EntityType::DataProperty;
      } else if (type == "NamedIndividual") {
        entity = EntityType::NamedIndividual;
      } else {
        fail("unsupported entity type");
      }
      shift();
      shift();
      result = Axiom::declaration(entity, entity_name("entity name"));
      expect(TokenType::RParen, "')'");
    } else if (keyword == "SubClassOf") {
      Concept sub = class_expression();
      Concept super = class_expression();
      result = Axiom::sub_class_of(std::move(sub), std::move(super));
    } else if (keyword == "EquivalentClasses" || keyword == "DisjointClasses") {
      std::vector<Concept> classes = class_list(2);
      result = keyword == "EquivalentClasses" ? Axiom::equivalent_classes(std::move(classes))
                                              : Axiom::disjoint_classes(std::move(classes));
    } else if (keyword == "SubObjectPropertyOf" || keyword == "InverseObjectProperties") {
      std::string first = entity_name("object property");
      std::string second = entity_name("object property");
      result = keyword == "SubObjectPropertyOf"
                   ? Axiom::sub_object_property_of(std::move(first), std::move(second))
                   : Axiom::inverse_object_properties(std::move(first), std::move(second));
    } else if (keyword == "ObjectPropertyDomain" || keyword == "ObjectPropertyRange") {
      std::string role = entity_name("object property");
      Concept c = class_expression();
      result = keyword == "ObjectPropertyDomain" ? Axiom::domain(std::move(role), std::move(c))
                                                 : Axiom::range(std::move(role), std::move(c));
    } else if (keyword == "FunctionalObjectProperty") {
      result = Axiom::property_characteristic(AxiomKind::FunctionalObjectProperty,
                                              entity_name("object property"));
    } else if (keyword == "TransitiveObjectProperty") {
      result = Axiom::property_characteristic(AxiomKind::TransitiveObjectProperty,
                                              entity_name("object property"));
    } else if (keyword == "SymmetricObjectProperty") {
      result = Axiom::property_characteristic(AxiomKind::SymmetricObjectProperty,
                                              entity_name("object property"));
    } else if (keyword == "InverseFunctionalObjectProperty") {
      result = Axiom::property_characteristic(AxiomKind::InverseFunctionalObjectProperty,
                                              entity_name("object property"));
    } else if (keyword == "ClassAssertion") {
      Concept c = class_expression();
      result = Axiom::class_assertion(std::move(c), entity_name("individual"));
    } else if (keyword == "ObjectPropertyAssertion") {
      std::string role = entity_name("object property");
      std::string subject = entity_name("individual");
      std::string object = entity_name("individual");
      result = Axiom::object_property_assertion(std::move(role), std::move(subject),
                                                std::move(object));
    } else if (keyword == "DataPropertyAssertion") {
      std::string property = entity_name("data property");
      std::string subject = entity_name("individual");
      if (current_.type != TokenType::String) fail("expected literal");
      Literal value = current_.literal;
      shift();
      result = Axiom::data_property_assertion(std::move(property), std::move(subject),
                                              std::move(value));
    } else {
      throw ParseError(kw_line, kw_column, "unknown axiom type", keyword);
    }
    expect(TokenType::RParen, "')'");
    return result;
  }

  std::vector<Concept> class_list(std::size_t minimum) {
    std::vector<Concept> classes;
    while (current_.type != TokenType::RParen) classes.push_back(class_expression());
    if (classes.size() < minimum) fail("expected at least " + std::to_string(minimum) + " operands");
    return classes;
  }

  Concept class_expression() {
    if (!at_constructor()) {
      std::string name = entity_name("class expression");
      if (name == kOwlThing || name == kOwlThingIri) return Concept::top();
      if (name == kOwlNothing || name == kOwlNothingIri) return Concept::bottom();
      return Concept::atomic(std::move(name));
    }
    if (++depth_ > kMaxNesting) fail("class expression nested too deeply");
    const std::string keyword = current_.text;
    const std::size_t kw_line = current_.line;
    const std::size_t kw_column = current_.column;
    shift();
    shift();  // '('
    Concept result;
    if (keyword == "ObjectIntersectionOf") {
      result = Concept::conjunction(class_list(2));
    } else if (keyword == "ObjectUnionOf") {
      result = Concept::disjunction(class_list(2));
    } else if (keyword == "ObjectComplementOf") {
      result = Concept::negation(class_expression());
    } else if (keyword == "ObjectSomeValuesFrom" || keyword == "ObjectAllValuesFrom") {
      std::string role = entity_name("object property");
      Concept filler = class_expression();
      result = keyword == "ObjectSomeValuesFrom" ? Concept::exists(std::move(role), std::move(filler))
                                                 : Concept::forall(std::move(role), std::move(filler));
    } else if (keyword == "ObjectMinCardinality" || keyword == "ObjectMaxCardinality") {
      const std::uint32_t n = cardinality();
      std::string role = entity_name("object property");
      Concept filler = current_.type == TokenType::RParen ? Concept::top() : class_expression();
      result = keyword == "ObjectMinCardinality"
                   ? Concept::at_least(n, std::move(role), std::move(filler))
                   : Concept::at_most(n, std::move(role), std::move(filler));
    } else if (keyword == "ObjectOneOf") {
      std::vector<Concept> members;
      while (current_.type != TokenType::RParen) {
        members.push_back(Concept::nominal(entity_name("individual")));
      }
      if (members.empty()) fail("ObjectOneOf needs at least one individual");
      result = members.size() == 1 ? members.front() : Concept::disjunction(std::move(members));
    } else {
      throw ParseError(kw_line, kw_column, "unknown class expression constructor", keyword);
    }
    expect(TokenType::RParen, "')'");
    --depth_;
    return result;
  }

  Lexer lexer_;
  Token current_;
  Token lookahead_;
  std::size_t depth_ = 0;
};

std::string escape_literal(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void write_concept(const Concept& c, std::string& out) {
  switch (c.kind()) {
    case ConceptKind::Top:
      out += kOwlThing;
      return;
    case ConceptKind::Bottom:
      out += kOwlNothing;
      return;
    case ConceptKind::Atomic:
      out += c.name();
      return;
    case ConceptKind::Nominal:
      out += "ObjectOneOf(" + c.name() + ")";
      return;
    case ConceptKind::Not:
      out += "ObjectComplementOf(";
      write_concept(c.operand(), out);
      break;
    case ConceptKind::And:
    case ConceptKind::Or: {
      if (c.is_enumeration()) {
        out += "ObjectOneOf(";
        bool first = true;
        for (const auto& op : c.operands()) {
          if (!first) out += ' ';
          out += op.name();
          first = false;
        }
        break;
      }
      out += c.kind() == ConceptKind::And ? "ObjectIntersectionOf(" : "ObjectUnionOf(";
      bool first = true;
      for (const auto& op : c.operands()) {
        if (!first) out += ' ';
        write_concept(op, out);
        first = false;
      }
      break;
    }
    case ConceptKind::Exists:
    case ConceptKind::ForAll:
      out += c.kind() == ConceptKind::Exists ? "ObjectSomeValuesFrom(" : "ObjectAllValuesFrom(";
      out += c.role();
      out += ' ';
      write_concept(c.filler(), out);
      break;
    case ConceptKind::AtLeast:
    case ConceptKind::AtMost:
      out += c.kind() == ConceptKind::AtLeast ? "ObjectMinCardinality(" : "ObjectMaxCardinality(";
      out += std::to_string(c.cardinality());
      out += ' ';
      out += c.role();
      if (c.filler().kind() != ConceptKind::Top) {
        out += ' ';
        write_concept(c.filler(), out);
      }
      break;
  }
  out += ')';
}

std::string_view entity_keyword(EntityType type) {
  switch (type) {
    case EntityType::Class: return "Class";
    case EntityType::ObjectProperty: return "ObjectProperty";
    case EntityType::DataProperty: return "DataProperty";
    case EntityType::NamedIndividual: return "NamedIndividual";
  }
  return "?";
}

}  // namespace

SourceDocument parse_document(std::string_view text) { return Parser(text).document(); }

Concept parse_concept(std::string_view text) { return Parser(text).lone_concept(); }

SourceDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string serialize_concept(const Concept& c) {
  std::string out;
  write_concept(c, out);
  return out;
}

std::string serialize_axiom(const Axiom& axiom) {
  std::string out(axiom_keyword(axiom.kind));
  out += '(';
  switch (axiom.kind) {
    case AxiomKind::Declaration:
      out += entity_keyword(axiom.entity);
      out += '(' + axiom.entity_name + ')';
      break;
    case AxiomKind::ClassAssertion:
      write_concept(axiom.classes[0], out);
      out += ' ' + axiom.individuals[0];
      break;
    case AxiomKind::DataPropertyAssertion:
      out += axiom.properties[0] + ' ' + axiom.individuals[0] + " \"" +
             escape_literal(axiom.literal.lexical) + '"';
      if (!axiom.literal.datatype.empty()) {
        out += "^^" + axiom.literal.datatype;
      } else if (!axiom.literal.language.empty()) {
        out += "@" + axiom.literal.language;
      }
      break;
    default: {
      bool first = true;
      auto sep = [&] {
        if (!first) out += ' ';
        first = false;
      };
      for (const auto& p : axiom.properties) {
        sep();
        out += p;
      }
      for (const auto& i : axiom.individuals) {
        sep();
        out += i;
      }
      for (const auto& c : axiom.classes) {
        sep();
        write_concept(c, out);
      }
      break;
    }
  }
  out += ')';
  return out;
}

std::string serialize_document(const SourceDocument& doc) {
  std::string out;
  for (const auto& p : doc.prefixes) out += "Prefix(" + p.prefix + "=" + p.iri + ")\n";
  if (doc.has_ontology_block) {
    out += "Ontology(";
    out += doc.ontology_iri;
    out += '\n';
  }
  for (const auto& axiom : doc.axioms) {
    out += serialize_axiom(axiom);
    out += '\n';
  }
  if (doc.has_ontology_block) out += ")\n";
  return out;
}

}  // namespace ordo
