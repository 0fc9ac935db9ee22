#ifndef ORDO_CONCEPT_TABLE_HPP
#define ORDO_CONCEPT_TABLE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ordo/concept.hpp"
#include "ordo/order_config.hpp"

namespace ordo {

using ConceptId = std::uint32_t;
using RoleId = std::uint32_t;
inline constexpr ConceptId kNoConcept = std::numeric_limits<ConceptId>::max();

/// Which ToDo queue a concept's entries go to.
Rule rule_for(ConceptKind kind);

struct ConceptInfo {
  ConceptKind kind = ConceptKind::Top;
  Rule rule = Rule::Id;
  RoleId role = 0;
  std::uint32_t cardinality = 0;
  std::vector<ConceptId> operands;        // And/Or operands, Not operand, or filler
  ConceptId complement = kNoConcept;      // opposite literal, once both are interned
  ConceptId negated_filler = kNoConcept;  // nnf(¬filler) for number restrictions
  bool at_most_filler = false;            // is the filler of some interned ≤ restriction
};

/// Interns NNF concepts into dense ids. Interning a concept interns its whole
/// closure (every subconcept, plus nnf(¬C) for number-restriction fillers C),
/// so expansion never meets an unknown concept.
class ConceptTable {
 public:
  static constexpr ConceptId kTop = 0;
  static constexpr ConceptId kBottom = 1;

  ConceptTable();

  /// Requires c.is_nnf().
  ConceptId intern(const Concept& c);
  std::optional<ConceptId> find(const Concept& c) const;

  const ConceptInfo& info(ConceptId id) const { return infos_[id]; }
  const Concept& concept_of(ConceptId id) const { return concepts_[id]; }
  std::size_t size() const noexcept { return infos_.size(); }

  RoleId role(std::string_view name);
  const std::string& role_name(RoleId id) const { return roles_[id]; }
  std::size_t role_count() const noexcept { return roles_.size(); }

  bool has_number_restrictions() const noexcept { return has_number_restrictions_; }

 private:
  std::vector<ConceptInfo> infos_;
  std::vector<Concept> concepts_;
  std::unordered_map<Concept, ConceptId, ConceptHash> ids_;
  std::vector<std::string> roles_;
  std::unordered_map<std::string, RoleId> role_ids_;
  bool has_number_restrictions_ = false;
};

}  // namespace ordo

#endif  // ORDO_CONCEPT_TABLE_HPP
