#ifndef ORDO_REASONER_HPP
#define ORDO_REASONER_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordo/concept.hpp"
#include "ordo/knowledge_base.hpp"
#include "ordo/order_config.hpp"
#include "ordo/tableau.hpp"

namespace ordo {

enum class Entailment : std::uint8_t { True, False, Timeout };
std::string_view to_string(Entailment e);

inline constexpr std::string_view kThingName = "owl:Thing";
inline constexpr std::string_view kNothingName = "owl:Nothing";

Verdict is_satisfiable(const KnowledgeBase& kb, const Concept& c, const OrderConfig& cfg,
                       std::chrono::milliseconds timeout = kDefaultTimeout);
/// kb ⊨ c ⊑ d
Entailment subsumes(const KnowledgeBase& kb, const Concept& d, const Concept& c, const OrderConfig& cfg,
                    std::chrono::milliseconds timeout = kDefaultTimeout);
Entailment equivalent(const KnowledgeBase& kb, const Concept& c, const Concept& d, const OrderConfig& cfg,
                      std::chrono::milliseconds timeout = kDefaultTimeout);
Entailment disjoint(const KnowledgeBase& kb, const Concept& c, const Concept& d, const OrderConfig& cfg,
                    std::chrono::milliseconds timeout = kDefaultTimeout);
/// Satisfiability of ⊤ under the TBox alone; ABox assertions are not checked.
Verdict tbox_consistent(const KnowledgeBase& kb, const OrderConfig& cfg,
                        std::chrono::milliseconds timeout = kDefaultTimeout);

/// Named-class partial order. Bucket 0 holds owl:Thing and the classes
/// equivalent to it, bucket 1 holds owl:Nothing and the unsatisfiable classes.
/// The rest are sorted by their first member.
struct Hierarchy {
  static constexpr std::size_t kTopBucket = 0;
  static constexpr std::size_t kBottomBucket = 1;

  std::vector<std::vector<std::string>> buckets;
  std::vector<std::vector<std::size_t>> parents;  // direct super-buckets, ascending

  std::optional<std::size_t> bucket_of(std::string_view name) const;
  /// Sorted `sub Sub Super` and `eq N1 N2` lines.
  std::vector<std::string> export_lines() const;
  std::string to_text() const;

  bool operator==(const Hierarchy&) const = default;
};

struct ClassificationResult {
  Verdict status = Verdict::Sat;  // Timeout if the budget ran out, Sat otherwise
  Hierarchy hierarchy;
  ExpansionStats stats;
  std::size_t checks = 0;
  double wall_ms = 0.0;
};

/// Brute-force classification: one satisfiability test per class, one per
/// class complement, then every ordered pair. The timeout covers the whole run.
ClassificationResult classify_hierarchy(const KnowledgeBase& kb, const OrderConfig& cfg,
                                        std::chrono::milliseconds timeout = kDefaultTimeout);

/// Repeated satisfiability tests over one interned KB.
class Reasoner {
 public:
  Reasoner(const KnowledgeBase& kb, const OrderConfig& cfg);

  SatResult satisfiable(const Concept& c, Clock::time_point deadline);
  const OrderConfig& config() const noexcept { return cfg_; }

 private:
  OrderConfig cfg_;
  ConceptTable table_;
  ConceptId meta_;
};

}  // namespace ordo

#endif  // ORDO_REASONER_HPP
