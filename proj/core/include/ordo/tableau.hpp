#ifndef ORDO_TABLEAU_HPP
#define ORDO_TABLEAU_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordo/completion_graph.hpp"
#include "ordo/concept.hpp"
#include "ordo/concept_table.hpp"
#include "ordo/knowledge_base.hpp"
#include "ordo/order_config.hpp"

namespace ordo {

using Clock = std::chrono::steady_clock;

/// Default per-check budget for desk-scale corpora.
inline constexpr std::chrono::milliseconds kDefaultTimeout{10'000};
/// Budget for full-size corpora; selectable from the CLI.
inline constexpr std::chrono::milliseconds kFullScaleTimeout{500'000};

enum class Verdict : std::uint8_t { Sat, Unsat, Timeout };
std::string_view to_string(Verdict v);

struct ExpansionStats {
  std::array<std::uint64_t, kRuleCount> rule_applications{};
  std::uint64_t nodes_created = 0;
  std::uint64_t merges = 0;
  std::uint64_t backtracks = 0;
  std::uint64_t branch_points = 0;
  double wall_ms = 0.0;

  std::uint64_t total_rule_applications() const;
  ExpansionStats& operator+=(const ExpansionStats& other);

  static std::string csv_header();
  std::string csv_row() const;
};

struct SatResult {
  Verdict verdict = Verdict::Sat;
  ExpansionStats stats;
};

/// Hooks for tests; each receives the graph in the state named by the call.
class ExpansionObserver {
 public:
  virtual ~ExpansionObserver() = default;
  /// Just before the first alternative of a new branch point is applied.
  virtual void on_branch(const CompletionGraph&, std::size_t /*depth*/) {}
  /// Right after rolling back to a branch point, before the next alternative.
  virtual void on_restore(const CompletionGraph&, std::size_t /*depth*/) {}
  /// After every rule application.
  virtual void on_step(const CompletionGraph&) {}
};

/// Rule-driven expansion of one completion graph. Not thread-safe; use one
/// instance per check.
class Tableau {
 public:
  Tableau(const ConceptTable& table, const OrderConfig& cfg, ExpansionObserver* observer = nullptr);

  /// Creates the root labelled {concept, meta}. meta = kTop means no TBox.
  NodeId seed(ConceptId concept_id, ConceptId meta);
  SatResult run(Clock::time_point deadline);
  SatResult run(ConceptId concept_id, ConceptId meta, Clock::time_point deadline);

  /// Applies the rule for one popped entry.
  void apply_rule(const TodoEntry& entry);

  CompletionGraph& graph() noexcept { return graph_; }
  const CompletionGraph& graph() const noexcept { return graph_; }
  const ExpansionStats& stats() const noexcept { return stats_; }
  std::size_t branch_depth() const noexcept { return branches_.size(); }

 private:
  enum class BranchKind : std::uint8_t { Or, Choose, Merge };
  struct BranchPoint {
    BranchKind kind = BranchKind::Or;
    NodeId node = kNoNode;
    ConceptId concept_id = kNoConcept;
    NodeId target = kNoNode;
    std::vector<ConceptId> options;
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::size_t next = 1;
    CompletionGraph::Checkpoint checkpoint;

    std::size_t alternatives() const { return kind == BranchKind::Merge ? pairs.size() : options.size(); }
  };

  void apply_or(NodeId x, ConceptId c);
  // released: the saturated-label blocking check already passed
  void apply_exists(const TodoEntry& e, bool released = false);
  void apply_forall(NodeId x, ConceptId c);
  void apply_at_least(const TodoEntry& e, bool released = false);
  void apply_at_most(NodeId x, ConceptId c);
  void check_at_most(NodeId x, ConceptId c);

  void push_branch(BranchPoint bp);
  void take_alternative(const BranchPoint& bp, std::size_t i);
  bool backtrack();
  bool release_deferred();
  void merge(NodeId into, NodeId from);
  NodeId new_successor(NodeId x, RoleId role, ConceptId filler);

  const ConceptTable* table_;
  CompletionGraph graph_;
  ExpansionObserver* observer_;
  ConceptId meta_ = ConceptTable::kTop;
  std::vector<BranchPoint> branches_;
  ExpansionStats stats_;
};

/// Satisfiability of c with respect to kb. Builds a fresh concept table, so
/// calls share no mutable state.
SatResult check_satisfiability(const KnowledgeBase& kb, const Concept& c, const OrderConfig& cfg,
                               std::chrono::milliseconds timeout = kDefaultTimeout);

}  // namespace ordo

#endif  // ORDO_TABLEAU_HPP
