#include "ordo/knowledge_base.hpp"

#include <utility>

namespace ordo {

Axiom Axiom::declaration(EntityType type, std::string name) {
  Axiom a;
  a.kind = AxiomKind::Declaration;
  a.entity = type;
  a.entity_name = std::move(name);
  return a;
}

Axiom Axiom::sub_class_of(Concept sub, Concept super) {
  Axiom a;
  a.kind = AxiomKind::SubClassOf;
  a.classes = {std::move(sub), std::move(super)};
  return a;
}

Axiom Axiom::equivalent_classes(std::vector<Concept> classes) {
  if (classes.size() < 2) throw std::invalid_argument("EquivalentClasses needs two classes");
  Axiom a;
  a.kind = AxiomKind::EquivalentClasses;
  a.classes = std::move(classes);
  return a;
}

Axiom Axiom::disjoint_classes(std::vector<Concept> classes) {
  if (classes.size() < 2) throw std::invalid_argument("DisjointClasses needs two classes");
  Axiom a;
  a.kind = AxiomKind::DisjointClasses;
  a.classes = std::move(classes);
  return a;
}

Axiom Axiom::sub_object_property_of(std::string sub, std::string super) {
  Axiom a;
  a.kind = AxiomKind::SubObjectPropertyOf;
  a.properties = {std::move(sub), std::move(super)};
  return a;
}

Axiom Axiom::inverse_object_properties(std::string first, std::string second) {
  Axiom a;
  a.kind = AxiomKind::InverseObjectProperties;
  a.properties = {std::move(first), std::move(second)};
  return a;
}

Axiom Axiom::domain(std::string role, Concept c) {
  Axiom a;
  a.kind = AxiomKind::ObjectPropertyDomain;
  a.properties = {std::move(role)};
  a.classes = {std::move(c)};
  return a;
}

Axiom Axiom::range(std::string role, Concept c) {
  Axiom a;
  a.kind = AxiomKind::ObjectPropertyRange;
  a.properties = {std::move(role)};
  a.classes = {std::move(c)};
  return a;
}

Axiom Axiom::property_characteristic(AxiomKind kind, std::string role) {
  switch (kind) {
    case AxiomKind::FunctionalObjectProperty:
    case AxiomKind::TransitiveObjectProperty:
    case AxiomKind::SymmetricObjectProperty:
    case AxiomKind::InverseFunctionalObjectProperty:
      break;
    default:
      throw std::invalid_argument("not a property characteristic");
  }
  Axiom a;
  a.kind = kind;
  a.properties = {std::move(role)};
  return a;
}

Axiom Axiom::class_assertion(Concept c, std::string individual) {
  Axiom a;
  a.kind = AxiomKind::ClassAssertion;
  a.classes = {std::move(c)};
  a.individuals = {std::move(individual)};
  return a;
}

Axiom Axiom::object_property_assertion(std::string role, std::string subject,
                                       std::string object) {
  Axiom a;
  a.kind = AxiomKind::ObjectPropertyAssertion;
  a.properties = {std::move(role)};
  a.individuals = {std::move(subject), std::move(object)};
  return a;
}

Axiom Axiom::data_property_assertion(std::string property, std::string subject,
                                     Literal value) {
  Axiom a;
  a.kind = AxiomKind::DataPropertyAssertion;
  a.properties = {std::move(property)};
  a.individuals = {std::move(subject)};
  a.literal = std::move(value);
  return a;
}

bool Axiom::is_class_axiom() const {
  switch (kind) {
    case AxiomKind::SubClassOf:
    case AxiomKind::EquivalentClasses:
    case AxiomKind::DisjointClasses:
    case AxiomKind::ObjectPropertyDomain:
    case AxiomKind::ObjectPropertyRange:
      return true;
    default:
      return false;
  }
}

bool Axiom::is_property_axiom() const {
  switch (kind) {
    case AxiomKind::SubObjectPropertyOf:
    case AxiomKind::InverseObjectProperties:
    case AxiomKind::FunctionalObjectProperty:
    case AxiomKind::TransitiveObjectProperty:
    case AxiomKind::SymmetricObjectProperty:
    case AxiomKind::InverseFunctionalObjectProperty:
      return true;
    default:
      return false;
  }
}

bool Axiom::is_assertion() const {
  return kind == AxiomKind::ClassAssertion || kind == AxiomKind::ObjectPropertyAssertion ||
         kind == AxiomKind::DataPropertyAssertion;
}

std::string_view axiom_keyword(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::Declaration: return "Declaration";
    case AxiomKind::SubClassOf: return "SubClassOf";
    case AxiomKind::EquivalentClasses: return "EquivalentClasses";
    case AxiomKind::DisjointClasses: return "DisjointClasses";
    case AxiomKind::SubObjectPropertyOf: return "SubObjectPropertyOf";
    case AxiomKind::InverseObjectProperties: return "InverseObjectProperties";
    case AxiomKind::ObjectPropertyDomain: return "ObjectPropertyDomain";
    case AxiomKind::ObjectPropertyRange: return "ObjectPropertyRange";
    case AxiomKind::FunctionalObjectProperty: return "FunctionalObjectProperty";
    case AxiomKind::TransitiveObjectProperty: return "TransitiveObjectProperty";
    case AxiomKind::SymmetricObjectProperty: return "SymmetricObjectProperty";
    case AxiomKind::InverseFunctionalObjectProperty: return "InverseFunctionalObjectProperty";
    case AxiomKind::ClassAssertion: return "ClassAssertion";
    case AxiomKind::ObjectPropertyAssertion: return "ObjectPropertyAssertion";
    case AxiomKind::DataPropertyAssertion: return "DataPropertyAssertion";
  }
  return "?";
}

UnsupportedAxiom::UnsupportedAxiom(const Axiom& axiom)
    : std::invalid_argument("unsupported axiom in TBox: " + std::string(axiom_keyword(axiom.kind))) {}

KnowledgeBase KnowledgeBase::from_axioms(std::span<const Axiom> axioms) {
  KnowledgeBase kb;
  Signature sig;
  for (const auto& axiom : axioms) {
    for (const auto& c : axiom.classes) collect_signature(c, sig);
    if (axiom.kind == AxiomKind::Declaration) {
      switch (axiom.entity) {
        case EntityType::Class: kb.classes.insert(axiom.entity_name); break;
        case EntityType::ObjectProperty: kb.roles.insert(axiom.entity_name); break;
        case EntityType::DataProperty: kb.data_properties.insert(axiom.entity_name); break;
        case EntityType::NamedIndividual: kb.individuals.insert(axiom.entity_name); break;
      }
      continue;
    }
    if (axiom.kind == AxiomKind::DataPropertyAssertion) {
      kb.data_properties.insert(axiom.properties.begin(), axiom.properties.end());
    } else {
      kb.roles.insert(axiom.properties.begin(), axiom.properties.end());
    }
    kb.individuals.insert(axiom.individuals.begin(), axiom.individuals.end());
    if (axiom.is_class_axiom()) {
      kb.tbox.push_back(axiom);
    } else if (axiom.is_property_axiom()) {
      kb.rbox.push_back(axiom);
    } else {
      kb.abox.push_back(axiom);
    }
  }
  kb.classes.insert(sig.concepts.begin(), sig.concepts.end());
  kb.roles.insert(sig.roles.begin(), sig.roles.end());
  kb.individuals.insert(sig.individuals.begin(), sig.individuals.end());
  return kb;
}

namespace {

Concept gci(const Concept& sub, const Concept& super) {
  if (sub.kind() == ConceptKind::Top) return nnf(super);
  return nnf(Concept::disjunction({Concept::negation(sub), super}));
}

}  // namespace

Concept internalize_tbox(const KnowledgeBase& kb) {
  std::vector<Concept> parts;
  for (const auto& axiom : kb.tbox) {
    switch (axiom.kind) {
      case AxiomKind::SubClassOf:
        parts.push_back(gci(axiom.classes[0], axiom.classes[1]));
        break;
      case AxiomKind::EquivalentClasses:
        for (std::size_t i = 0; i < axiom.classes.size(); ++i) {
          for (std::size_t j = i + 1; j < axiom.classes.size(); ++j) {
            parts.push_back(gci(axiom.classes[i], axiom.classes[j]));
            parts.push_back(gci(axiom.classes[j], axiom.classes[i]));
          }
        }
        break;
      case AxiomKind::DisjointClasses:
        for (std::size_t i = 0; i < axiom.classes.size(); ++i) {
          for (std::size_t j = i + 1; j < axiom.classes.size(); ++j) {
            parts.push_back(gci(axiom.classes[i], Concept::negation(axiom.classes[j])));
          }
        }
        break;
      case AxiomKind::ObjectPropertyDomain:
        parts.push_back(
            gci(Concept::exists(axiom.properties[0], Concept::top()), axiom.classes[0]));
        break;
      case AxiomKind::ObjectPropertyRange:
        parts.push_back(nnf(Concept::forall(axiom.properties[0], axiom.classes[0])));
        break;
      default:
        throw UnsupportedAxiom(axiom);
    }
  }
  for (const auto& axiom : kb.rbox) {
    if (axiom.kind == AxiomKind::FunctionalObjectProperty) {
      parts.push_back(Concept::at_most(1, axiom.properties[0], Concept::top()));
    }
  }
  return conjoin(std::move(parts));
}

}  // namespace ordo
