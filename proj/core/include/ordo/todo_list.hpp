#ifndef ORDO_TODO_LIST_HPP
#define ORDO_TODO_LIST_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ordo/concept_table.hpp"
#include "ordo/order_config.hpp"

namespace ordo {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct TodoEntry {
  NodeId node = kNoNode;
  ConceptId concept_id = kNoConcept;
  Rule rule = Rule::Id;
  std::uint64_t seq = 0;
  // false for the one entry created when the concept entered the label;
  // true for re-fired entries (new edge, choose/merge follow-ups, released deferrals)
  bool refire = false;

  bool operator==(const TodoEntry&) const = default;
};

/// One FIFO per priority level. Popping is a head-index bump, so a mark of
/// (size, head) per level is enough to roll the whole structure back.
class TodoList {
 public:
  struct Mark {
    std::array<std::uint32_t, kPriorityLevels> size{};
    std::array<std::uint32_t, kPriorityLevels> head{};
    std::uint64_t seq = 0;
  };

  explicit TodoList(const OrderConfig& cfg) : cfg_(cfg) {}

  void enqueue(NodeId node, ConceptId concept_id, Rule rule, bool refire = false);
  std::optional<TodoEntry> pop_next();

  bool empty() const noexcept;
  std::size_t pending() const noexcept;
  std::size_t pending(std::size_t level) const noexcept;

  template <typename F>
  void for_each_pending(F&& f) const {
    for (const auto& q : queues_) {
      for (std::size_t i = q.head; i < q.items.size(); ++i) f(q.items[i]);
    }
  }

  Mark mark() const noexcept;
  void restore(const Mark& m);

  const OrderConfig& config() const noexcept { return cfg_; }

 private:
  struct Queue {
    std::vector<TodoEntry> items;
    std::size_t head = 0;
  };

  OrderConfig cfg_;
  std::array<Queue, kPriorityLevels> queues_{};
  std::uint64_t next_seq_ = 0;
};

}  // namespace ordo

#endif  // ORDO_TODO_LIST_HPP
