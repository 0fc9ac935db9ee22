#ifndef ORDO_COMPLETION_GRAPH_HPP
#define ORDO_COMPLETION_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ordo/concept_table.hpp"
#include "ordo/todo_list.hpp"

namespace ordo {

/// Concept set with O(1) membership and insertion order kept for undo.
class LabelSet {
 public:
  bool contains(ConceptId c) const noexcept {
    const std::size_t w = c >> 6;
    return w < bits_.size() && ((bits_[w] >> (c & 63)) & 1U) != 0;
  }
  bool insert(ConceptId c);
  void pop_back();

  std::span<const ConceptId> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool subset_of(const LabelSet& other) const;
  bool same_as(const LabelSet& other) const;

 private:
  std::vector<std::uint64_t> bits_;
  std::vector<ConceptId> items_;
};

struct GraphNode {
  NodeId parent = kNoNode;
  std::uint32_t depth = 0;
  LabelSet label;
  std::vector<RoleId> edge_roles;  // L(parent, this)
  std::vector<NodeId> children;
  std::vector<NodeId> distinct;
  std::vector<ConceptId> at_least_done;
  bool pruned = false;  // merged away
};

enum class BlockingMode : std::uint8_t { Subset, Equality };

/// Tree-shaped completion graph with an undo trail. Every mutation goes
/// through this class so restore() can roll back to any checkpoint.
class CompletionGraph {
 public:
  struct Checkpoint {
    std::size_t trail = 0;
    TodoList::Mark todo;
    std::size_t unexpanded = 0;
  };

  CompletionGraph(const ConceptTable& table, const OrderConfig& cfg);

  const ConceptTable& table() const noexcept { return *table_; }
  BlockingMode blocking_mode() const noexcept { return blocking_; }

  NodeId add_node(NodeId parent);
  /// Adds c to L(node). Returns false if already present. Enqueues the
  /// concept, re-fires ≤ restrictions on the parent that watch c, and
  /// raises the clash flag on ⊥ or a complementary literal.
  bool add_concept(NodeId node, ConceptId c);
  /// Adds a role to L(parent, node); re-fires ∀/≤ on that role at the parent.
  bool add_edge_role(NodeId node, RoleId role);
  void add_distinct(NodeId a, NodeId b);
  void prune(NodeId node);
  void mark_at_least_done(NodeId node, ConceptId c);
  void defer(const TodoEntry& e);
  void replace_deferred(std::vector<TodoEntry> entries);
  void refire(NodeId node, ConceptId c);

  bool has_role(NodeId node, RoleId role) const;
  bool are_distinct(NodeId a, NodeId b) const;
  bool at_least_done(NodeId node, ConceptId c) const;
  bool is_blocked(NodeId node) const { return is_blocked(node, blocking_); }
  /// Subset is the provisional test used while labels may still grow.
  bool is_blocked(NodeId node, BlockingMode mode) const;

  std::optional<TodoEntry> pop_next();
  const TodoList& todo() const noexcept { return todo_; }
  std::span<const TodoEntry> deferred() const noexcept { return deferred_; }

  bool clashed() const noexcept { return clash_; }
  void set_clash() noexcept { clash_ = true; }

  Checkpoint checkpoint() const;
  void restore(const Checkpoint& cp);

  const GraphNode& node(NodeId id) const { return nodes_[id]; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t trail_size() const noexcept { return trail_.size(); }

  /// Structural hash over labels, edges, ≠, queues and deferrals.
  std::uint64_t fingerprint() const;
  /// Label additions not yet expanded, tracked independently of the queues.
  std::size_t unexpanded() const noexcept { return unexpanded_; }
  /// Every pending entry refers to a label member, and the number of pending
  /// first-time entries equals unexpanded().
  bool queue_consistent() const;

 private:
  enum class Undo : std::uint8_t {
    AddConcept, AddNode, AddEdgeRole, AddDistinct, Prune, AtLeastDone, Defer, ReplaceDeferred
  };
  struct TrailEntry {
    Undo kind;
    NodeId node;
  };

  const ConceptTable* table_;
  BlockingMode blocking_;
  TodoList todo_;
  std::vector<GraphNode> nodes_;
  std::vector<TrailEntry> trail_;
  std::vector<TodoEntry> deferred_;
  std::vector<std::vector<TodoEntry>> saved_deferred_;
  std::size_t unexpanded_ = 0;
  bool clash_ = false;
};

}  // namespace ordo

#endif  // ORDO_COMPLETION_GRAPH_HPP
