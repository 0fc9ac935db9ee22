#ifndef ORDO_TESTS_MODEL_ORACLE_HPP
#define ORDO_TESTS_MODEL_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ordo/concept.hpp"
#include "ordo/knowledge_base.hpp"

namespace ordo::oracle {

/// A finite interpretation over {0..size-1}; sets are bitmasks.
struct Interpretation {
  std::size_t size = 0;
  std::map<std::string, std::uint32_t> concepts;
  std::map<std::string, std::vector<std::uint32_t>> roles;  // successors per element
  std::map<std::string, std::size_t> individuals;

  std::uint32_t full() const { return (std::uint32_t{1} << size) - 1; }
  std::uint32_t extension(const Concept& c) const;
  /// Checks TBox axioms and functional roles directly, without internalizing.
  bool satisfies_tbox(const KnowledgeBase& kb) const;
};

/// Searches every interpretation with 1..max_domain elements for one that
/// satisfies the TBox and gives c a non-empty extension.
bool satisfiable(const KnowledgeBase& kb, const Concept& c, std::size_t max_domain = 3);
bool satisfiable(const Concept& c, std::size_t max_domain = 3);

}  // namespace ordo::oracle

#endif  // ORDO_TESTS_MODEL_ORACLE_HPP
