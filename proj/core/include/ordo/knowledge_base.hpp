#ifndef ORDO_KNOWLEDGE_BASE_HPP
#define ORDO_KNOWLEDGE_BASE_HPP

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordo/concept.hpp"

namespace ordo {

enum class AxiomKind : std::uint8_t {
  Declaration,
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  SubObjectPropertyOf,
  InverseObjectProperties,
  ObjectPropertyDomain,
  ObjectPropertyRange,
  FunctionalObjectProperty,
  TransitiveObjectProperty,
  SymmetricObjectProperty,
  InverseFunctionalObjectProperty,
  ClassAssertion,
  ObjectPropertyAssertion,
  DataPropertyAssertion,
};

enum class EntityType : std::uint8_t { Class, ObjectProperty, DataProperty, NamedIndividual };

struct Literal {
  std::string lexical;
  std::string datatype;  // empty when untyped
  std::string language;  // empty when no language tag

  bool operator==(const Literal&) const = default;
};

/// One logical or declaration axiom. Which fields are meaningful depends on
/// the kind; the named constructors below fill them consistently.
struct Axiom {
  AxiomKind kind = AxiomKind::Declaration;
  std::vector<Concept> classes;
  std::vector<std::string> properties;
  std::vector<std::string> individuals;
  EntityType entity = EntityType::Class;  // Declaration only
  std::string entity_name;                // Declaration only
  Literal literal;                        // DataPropertyAssertion only

  static Axiom declaration(EntityType type, std::string name);
  static Axiom sub_class_of(Concept sub, Concept super);
  static Axiom equivalent_classes(std::vector<Concept> classes);
  static Axiom disjoint_classes(std::vector<Concept> classes);
  static Axiom sub_object_property_of(std::string sub, std::string super);
  static Axiom inverse_object_properties(std::string first, std::string second);
  static Axiom domain(std::string role, Concept c);
  static Axiom range(std::string role, Concept c);
  static Axiom property_characteristic(AxiomKind kind, std::string role);
  static Axiom class_assertion(Concept c, std::string individual);
  static Axiom object_property_assertion(std::string role, std::string subject,
                                         std::string object);
  static Axiom data_property_assertion(std::string property, std::string subject,
                                       Literal value);

  bool is_class_axiom() const;
  bool is_property_axiom() const;
  bool is_assertion() const;

  bool operator==(const Axiom&) const = default;
};

std::string_view axiom_keyword(AxiomKind kind);

class UnsupportedAxiom : public std::invalid_argument {
 public:
  explicit UnsupportedAxiom(const Axiom& axiom);
};

struct KnowledgeBase {
  std::vector<Axiom> tbox;  // SubClassOf, EquivalentClasses, DisjointClasses, Domain, Range
  std::vector<Axiom> rbox;  // property axioms
  std::vector<Axiom> abox;  // assertions
  std::set<std::string> classes;
  std::set<std::string> roles;
  std::set<std::string> individuals;
  std::set<std::string> data_properties;

  /// Partitions the axioms and collects the signature (declared and used names).
  static KnowledgeBase from_axioms(std::span<const Axiom> axioms);

  std::size_t logical_axiom_count() const { return tbox.size() + rbox.size() + abox.size(); }
};

/// Folds every GCI of the TBox into one NNF meta-constraint. Functional
/// properties from the RBox contribute ⊤ ⊑ ≤1 R.⊤; other property axioms are
/// not reasoned with. An empty TBox yields Top.
Concept internalize_tbox(const KnowledgeBase& kb);

}  // namespace ordo

#endif  // ORDO_KNOWLEDGE_BASE_HPP
