#include "ordo/todo_list.hpp"

namespace ordo {

void TodoList::enqueue(NodeId node, ConceptId concept_id, Rule rule, bool refire) {
  auto& q = queues_[cfg_.priority(rule)];
  q.items.push_back(TodoEntry{node, concept_id, rule, next_seq_++, refire});
}

std::optional<TodoEntry> TodoList::pop_next() {
  for (auto& q : queues_) {
    if (q.head < q.items.size()) return q.items[q.head++];
  }
  return std::nullopt;
}

bool TodoList::empty() const noexcept {
  for (const auto& q : queues_) {
    if (q.head < q.items.size()) return false;
  }
  return true;
}

std::size_t TodoList::pending() const noexcept {
  std::size_t n = 0;
  for (const auto& q : queues_) n += q.items.size() - q.head;
  return n;
}

std::size_t TodoList::pending(std::size_t level) const noexcept {
  const auto& q = queues_[level];
  return q.items.size() - q.head;
}

TodoList::Mark TodoList::mark() const noexcept {
  Mark m;
  for (std::size_t i = 0; i < kPriorityLevels; ++i) {
    m.size[i] = static_cast<std::uint32_t>(queues_[i].items.size());
    m.head[i] = static_cast<std::uint32_t>(queues_[i].head);
  }
  m.seq = next_seq_;
  return m;
}

void TodoList::restore(const Mark& m) {
  for (std::size_t i = 0; i < kPriorityLevels; ++i) {
    queues_[i].items.resize(m.size[i]);
    queues_[i].head = m.head[i];
  }
  next_seq_ = m.seq;
}

}  // namespace ordo
