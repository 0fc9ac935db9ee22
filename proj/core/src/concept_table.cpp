#include "ordo/concept_table.hpp"

#include <stdexcept>

namespace ordo {

Rule rule_for(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::And: return Rule::And;
    case ConceptKind::Or: return Rule::Or;
    case ConceptKind::Exists: return Rule::Exists;
    case ConceptKind::ForAll: return Rule::ForAll;
    case ConceptKind::AtMost: return Rule::AtMost;
    case ConceptKind::AtLeast: return Rule::AtLeast;
    default: return Rule::Id;
  }
}

ConceptTable::ConceptTable() {
  intern(Concept::top());
  intern(Concept::bottom());
}

std::optional<ConceptId> ConceptTable::find(const Concept& c) const {
  if (auto it = ids_.find(c); it != ids_.end()) return it->second;
  return std::nullopt;
}

RoleId ConceptTable::role(std::string_view name) {
  auto it = role_ids_.find(std::string(name));
  if (it != role_ids_.end()) return it->second;
  const auto id = static_cast<RoleId>(roles_.size());
  roles_.emplace_back(name);
  role_ids_.emplace(roles_.back(), id);
  return id;
}

ConceptId ConceptTable::intern(const Concept& c) {
  if (auto it = ids_.find(c); it != ids_.end()) return it->second;
  if (!c.is_nnf()) throw std::invalid_argument("ConceptTable::intern requires NNF: " + to_string(c));

  ConceptInfo info;
  info.kind = c.kind();
  info.rule = rule_for(c.kind());
  switch (c.kind()) {
    case ConceptKind::Not:
    case ConceptKind::And:
    case ConceptKind::Or:
      for (const auto& op : c.operands()) info.operands.push_back(intern(op));
      break;
    case ConceptKind::Exists:
    case ConceptKind::ForAll:
      info.role = role(c.role());
      info.operands.push_back(intern(c.filler()));
      break;
    case ConceptKind::AtLeast:
    case ConceptKind::AtMost:
      info.role = role(c.role());
      info.cardinality = c.cardinality();
      info.operands.push_back(intern(c.filler()));
      info.negated_filler = intern(nnf(negate(c.filler())));
      has_number_restrictions_ = true;
      break;
    default:
      break;
  }

  const auto id = static_cast<ConceptId>(infos_.size());
  if (c.kind() == ConceptKind::Not) {
    const ConceptId positive = info.operands.front();
    info.complement = positive;
    infos_[positive].complement = id;
  }
  if (c.kind() == ConceptKind::AtMost) infos_[info.operands.front()].at_most_filler = true;
  infos_.push_back(std::move(info));
  concepts_.push_back(c);
  ids_.emplace(c, id);
  return id;
}

}  // namespace ordo
