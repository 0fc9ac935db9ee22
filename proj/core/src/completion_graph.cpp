#include "ordo/completion_graph.hpp"

#include <algorithm>

namespace ordo {

bool LabelSet::insert(ConceptId c) {
  if (contains(c)) return false;
  const std::size_t w = c >> 6;
  if (w >= bits_.size()) bits_.resize(w + 1, 0);
  bits_[w] |= std::uint64_t{1} << (c & 63);
  items_.push_back(c);
  return true;
}

void LabelSet::pop_back() {
  const ConceptId c = items_.back();
  items_.pop_back();
  bits_[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
}

bool LabelSet::subset_of(const LabelSet& other) const {
  if (items_.size() > other.items_.size()) return false;
  return std::all_of(items_.begin(), items_.end(), [&](ConceptId c) { return other.contains(c); });
}

bool LabelSet::same_as(const LabelSet& other) const {
  return items_.size() == other.items_.size() && subset_of(other);
}

CompletionGraph::CompletionGraph(const ConceptTable& table, const OrderConfig& cfg)
    : table_(&table),
      blocking_(table.has_number_restrictions() ? BlockingMode::Equality : BlockingMode::Subset),
      todo_(cfg) {}

NodeId CompletionGraph::add_node(NodeId parent) {
  const auto id = static_cast<NodeId>(nodes_.size());
  GraphNode n;
  n.parent = parent;
  if (parent != kNoNode) {
    n.depth = nodes_[parent].depth + 1;
    nodes_[parent].children.push_back(id);
  }
  nodes_.push_back(std::move(n));
  trail_.push_back({Undo::AddNode, id});
  return id;
}

bool CompletionGraph::add_concept(NodeId node, ConceptId c) {
  GraphNode& n = nodes_[node];
  if (!n.label.insert(c)) return false;
  trail_.push_back({Undo::AddConcept, node});
  ++unexpanded_;

  const ConceptInfo& info = table_->info(c);
  todo_.enqueue(node, c, info.rule);

  if (c == ConceptTable::kBottom) clash_ = true;
  if (info.complement != kNoConcept && n.label.contains(info.complement)) clash_ = true;

  if (info.at_most_filler && n.parent != kNoNode) {
    const GraphNode& p = nodes_[n.parent];
    for (ConceptId d : p.label.items()) {
      const ConceptInfo& di = table_->info(d);
      if (di.kind == ConceptKind::AtMost && di.operands.front() == c && has_role(node, di.role)) {
        refire(n.parent, d);
      }
    }
  }
  return true;
}

bool CompletionGraph::add_edge_role(NodeId node, RoleId role) {
  GraphNode& n = nodes_[node];
  if (has_role(node, role)) return false;
  n.edge_roles.push_back(role);
  trail_.push_back({Undo::AddEdgeRole, node});
  if (n.parent != kNoNode) {
    for (ConceptId d : nodes_[n.parent].label.items()) {
      const ConceptInfo& di = table_->info(d);
      if ((di.kind == ConceptKind::ForAll || di.kind == ConceptKind::AtMost) && di.role == role) {
        refire(n.parent, d);
      }
    }
  }
  return true;
}

void CompletionGraph::add_distinct(NodeId a, NodeId b) {
  if (a == b || are_distinct(a, b)) return;
  nodes_[a].distinct.push_back(b);
  trail_.push_back({Undo::AddDistinct, a});
  nodes_[b].distinct.push_back(a);
  trail_.push_back({Undo::AddDistinct, b});
}

void CompletionGraph::prune(NodeId node) {
  std::vector<NodeId> stack{node};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (nodes_[v].pruned) continue;
    nodes_[v].pruned = true;
    trail_.push_back({Undo::Prune, v});
    for (NodeId ch : nodes_[v].children) stack.push_back(ch);
  }
}

void CompletionGraph::mark_at_least_done(NodeId node, ConceptId c) {
  nodes_[node].at_least_done.push_back(c);
  trail_.push_back({Undo::AtLeastDone, node});
}

void CompletionGraph::defer(const TodoEntry& e) {
  deferred_.push_back(e);
  trail_.push_back({Undo::Defer, e.node});
}

void CompletionGraph::replace_deferred(std::vector<TodoEntry> entries) {
  saved_deferred_.push_back(std::move(deferred_));
  deferred_ = std::move(entries);
  trail_.push_back({Undo::ReplaceDeferred, kNoNode});
}

void CompletionGraph::refire(NodeId node, ConceptId c) {
  todo_.enqueue(node, c, table_->info(c).rule, true);
}

bool CompletionGraph::has_role(NodeId node, RoleId role) const {
  const auto& r = nodes_[node].edge_roles;
  return std::find(r.begin(), r.end(), role) != r.end();
}

bool CompletionGraph::are_distinct(NodeId a, NodeId b) const {
  const auto& d = nodes_[a].distinct;
  return std::find(d.begin(), d.end(), b) != d.end();
}

bool CompletionGraph::at_least_done(NodeId node, ConceptId c) const {
  const auto& d = nodes_[node].at_least_done;
  return std::find(d.begin(), d.end(), c) != d.end();
}

bool CompletionGraph::is_blocked(NodeId node, BlockingMode mode) const {
  // blocked directly by an ancestor, or sitting below a directly blocked node
  for (NodeId v = node; v != kNoNode; v = nodes_[v].parent) {
    const LabelSet& lv = nodes_[v].label;
    for (NodeId a = nodes_[v].parent; a != kNoNode; a = nodes_[a].parent) {
      const LabelSet& la = nodes_[a].label;
      const bool blocks = mode == BlockingMode::Subset ? lv.subset_of(la) : lv.same_as(la);
      if (blocks) return true;
    }
  }
  return false;
}

std::optional<TodoEntry> CompletionGraph::pop_next() {
  auto e = todo_.pop_next();
  if (e && !e->refire) --unexpanded_;
  return e;
}

CompletionGraph::Checkpoint CompletionGraph::checkpoint() const {
  return Checkpoint{trail_.size(), todo_.mark(), unexpanded_};
}

void CompletionGraph::restore(const Checkpoint& cp) {
  while (trail_.size() > cp.trail) {
    const TrailEntry t = trail_.back();
    trail_.pop_back();
    switch (t.kind) {
      case Undo::AddConcept: nodes_[t.node].label.pop_back(); break;
      case Undo::AddNode: {
        const NodeId parent = nodes_.back().parent;
        if (parent != kNoNode) nodes_[parent].children.pop_back();
        nodes_.pop_back();
        break;
      }
      case Undo::AddEdgeRole: nodes_[t.node].edge_roles.pop_back(); break;
      case Undo::AddDistinct: nodes_[t.node].distinct.pop_back(); break;
      case Undo::Prune: nodes_[t.node].pruned = false; break;
      case Undo::AtLeastDone: nodes_[t.node].at_least_done.pop_back(); break;
      case Undo::Defer: deferred_.pop_back(); break;
      case Undo::ReplaceDeferred:
        deferred_ = std::move(saved_deferred_.back());
        saved_deferred_.pop_back();
        break;
    }
  }
  todo_.restore(cp.todo);
  unexpanded_ = cp.unexpanded;
  clash_ = false;
}

namespace {

struct Hasher {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  void add(std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
};

}  // namespace

std::uint64_t CompletionGraph::fingerprint() const {
  Hasher hs;
  hs.add(nodes_.size());
  for (const auto& n : nodes_) {
    hs.add(n.parent);
    hs.add(n.pruned ? 1 : 0);
    hs.add(n.label.size());
    for (ConceptId c : n.label.items()) hs.add(c);
    hs.add(n.edge_roles.size());
    for (RoleId r : n.edge_roles) hs.add(r);
    hs.add(n.distinct.size());
    for (NodeId d : n.distinct) hs.add(d);
    hs.add(n.at_least_done.size());
    for (ConceptId c : n.at_least_done) hs.add(c);
  }
  hs.add(deferred_.size());
  for (const auto& e : deferred_) {
    hs.add(e.node);
    hs.add(e.concept_id);
  }
  todo_.for_each_pending([&](const TodoEntry& e) {
    hs.add(e.node);
    hs.add(e.concept_id);
    hs.add(e.seq);
  });
  hs.add(clash_ ? 1 : 0);
  return hs.h;
}

bool CompletionGraph::queue_consistent() const {
  bool ok = true;
  std::size_t first_time = 0;
  todo_.for_each_pending([&](const TodoEntry& e) {
    if (e.node >= nodes_.size() || !nodes_[e.node].label.contains(e.concept_id)) ok = false;
    if (!e.refire) ++first_time;
  });
  return ok && first_time == unexpanded_;
}

}  // namespace ordo
