#include "ordo/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace ordo {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Timeout: return "TIMEOUT";
  }
  return "?";
}

std::uint64_t ExpansionStats::total_rule_applications() const {
  std::uint64_t n = 0;
  for (auto v : rule_applications) n += v;
  return n;
}

ExpansionStats& ExpansionStats::operator+=(const ExpansionStats& other) {
  for (std::size_t i = 0; i < kRuleCount; ++i) rule_applications[i] += other.rule_applications[i];
  nodes_created += other.nodes_created;
  merges += other.merges;
  backtracks += other.backtracks;
  branch_points += other.branch_points;
  wall_ms += other.wall_ms;
  return *this;
}

std::string ExpansionStats::csv_header() {
  std::string h;
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    h += "rule_";
    h += rule_name(static_cast<Rule>(i));
    h += ',';
  }
  h += "nodes_created,merges,backtracks,branch_points,wall_ms";
  return h;
}

std::string ExpansionStats::csv_row() const {
  std::ostringstream os;
  for (auto v : rule_applications) os << v << ',';
  os << nodes_created << ',' << merges << ',' << backtracks << ',' << branch_points << ',' << wall_ms;
  return os.str();
}

Tableau::Tableau(const ConceptTable& table, const OrderConfig& cfg, ExpansionObserver* observer)
    : table_(&table), graph_(table, cfg), observer_(observer) {}

NodeId Tableau::seed(ConceptId concept_id, ConceptId meta) {
  meta_ = meta;
  const NodeId root = graph_.add_node(kNoNode);
  ++stats_.nodes_created;
  graph_.add_concept(root, concept_id);
  if (meta != ConceptTable::kTop) graph_.add_concept(root, meta);
  return root;
}

SatResult Tableau::run(ConceptId concept_id, ConceptId meta, Clock::time_point deadline) {
  seed(concept_id, meta);
  return run(deadline);
}

SatResult Tableau::run(Clock::time_point deadline) {
  const auto start = Clock::now();
  auto finish = [&](Verdict v) {
    stats_.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return SatResult{v, stats_};
  };

  std::uint64_t steps = 0;
  while (true) {
    if ((++steps & 15U) == 0 && Clock::now() > deadline) return finish(Verdict::Timeout);
    if (graph_.clashed()) {
      if (!backtrack()) return finish(Verdict::Unsat);
      continue;
    }
    auto e = graph_.pop_next();
    if (!e) {
      if (release_deferred()) continue;
      return finish(Verdict::Sat);
    }
    apply_rule(*e);
    if (observer_) observer_->on_step(graph_);
  }
}

void Tableau::apply_rule(const TodoEntry& e) {
  if (graph_.node(e.node).pruned) return;
  const ConceptInfo& info = table_->info(e.concept_id);
  ++stats_.rule_applications[static_cast<std::size_t>(info.rule)];
  switch (info.kind) {
    case ConceptKind::And:
      for (ConceptId op : info.operands) {
        graph_.add_concept(e.node, op);
        if (graph_.clashed()) return;
      }
      break;
    case ConceptKind::Or: apply_or(e.node, e.concept_id); break;
    case ConceptKind::Exists: apply_exists(e); break;
    case ConceptKind::ForAll: apply_forall(e.node, e.concept_id); break;
    case ConceptKind::AtLeast: apply_at_least(e); break;
    case ConceptKind::AtMost: apply_at_most(e.node, e.concept_id); break;
    default: break;  // literals, ⊤, ⊥: clash detection happens on insertion
  }
}

void Tableau::apply_or(NodeId x, ConceptId c) {
  const ConceptInfo& info = table_->info(c);
  const LabelSet& label = graph_.node(x).label;
  std::vector<ConceptId> viable;
  for (ConceptId op : info.operands) {
    if (label.contains(op)) return;
    if (op == ConceptTable::kBottom) continue;
    const ConceptId comp = table_->info(op).complement;
    if (comp != kNoConcept && label.contains(comp)) continue;
    viable.push_back(op);
  }
  if (viable.empty()) {
    graph_.set_clash();
  } else if (viable.size() == 1) {
    graph_.add_concept(x, viable.front());
  } else {
    BranchPoint bp;
    bp.kind = BranchKind::Or;
    bp.node = x;
    bp.concept_id = c;
    bp.options = std::move(viable);
    push_branch(std::move(bp));
  }
}

NodeId Tableau::new_successor(NodeId x, RoleId role, ConceptId filler) {
  const NodeId y = graph_.add_node(x);
  ++stats_.nodes_created;
  graph_.add_edge_role(y, role);
  graph_.add_concept(y, filler);
  if (meta_ != ConceptTable::kTop) graph_.add_concept(y, meta_);
  return y;
}

void Tableau::apply_exists(const TodoEntry& e, bool released) {
  if (!released && graph_.is_blocked(e.node, BlockingMode::Subset)) {
    graph_.defer(e);
    return;
  }
  const ConceptInfo& info = table_->info(e.concept_id);
  const ConceptId filler = info.operands.front();
  for (NodeId y : graph_.node(e.node).children) {
    const GraphNode& n = graph_.node(y);
    if (!n.pruned && graph_.has_role(y, info.role) && n.label.contains(filler)) return;
  }
  new_successor(e.node, info.role, filler);
}

void Tableau::apply_forall(NodeId x, ConceptId c) {
  const ConceptInfo& info = table_->info(c);
  const ConceptId filler = info.operands.front();
  const auto children = graph_.node(x).children;
  for (NodeId y : children) {
    const GraphNode& n = graph_.node(y);
    if (n.pruned || !graph_.has_role(y, info.role)) continue;
    graph_.add_concept(y, filler);
    if (graph_.clashed()) return;
  }
}

void Tableau::apply_at_least(const TodoEntry& e, bool released) {
  if (!released && graph_.is_blocked(e.node, BlockingMode::Subset)) {
    graph_.defer(e);
    return;
  }
  if (graph_.at_least_done(e.node, e.concept_id)) return;
  const ConceptInfo& info = table_->info(e.concept_id);
  const ConceptId filler = info.operands.front();

  std::vector<NodeId> clique;
  for (NodeId y : graph_.node(e.node).children) {
    const GraphNode& n = graph_.node(y);
    if (n.pruned || !graph_.has_role(y, info.role) || !n.label.contains(filler)) continue;
    const bool fits = std::all_of(clique.begin(), clique.end(),
                                  [&](NodeId w) { return graph_.are_distinct(y, w); });
    if (fits) clique.push_back(y);
  }
  graph_.mark_at_least_done(e.node, e.concept_id);
  while (clique.size() < info.cardinality && !graph_.clashed()) {
    const NodeId y = new_successor(e.node, info.role, filler);
    for (NodeId w : clique) graph_.add_distinct(y, w);
    clique.push_back(y);
  }
}

void Tableau::apply_at_most(NodeId x, ConceptId c) {
  const ConceptInfo& info = table_->info(c);
  const ConceptId filler = info.operands.front();
  const ConceptId neg = info.negated_filler;

  std::vector<NodeId> with;
  const auto children = graph_.node(x).children;
  for (NodeId y : children) {
    const GraphNode& n = graph_.node(y);
    if (n.pruned || !graph_.has_role(y, info.role)) continue;
    if (!n.label.contains(filler) && !n.label.contains(neg)) {
      if (neg == ConceptTable::kBottom) {
        graph_.add_concept(y, filler);
        if (graph_.clashed()) return;
      } else {
        BranchPoint bp;
        bp.kind = BranchKind::Choose;
        bp.node = x;
        bp.concept_id = c;
        bp.target = y;
        bp.options = {filler, neg};
        push_branch(std::move(bp));
        return;
      }
    }
    if (graph_.node(y).label.contains(filler)) with.push_back(y);
  }
  if (with.size() <= info.cardinality) return;

  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (std::size_t i = 0; i < with.size(); ++i) {
    for (std::size_t j = i + 1; j < with.size(); ++j) {
      if (!graph_.are_distinct(with[i], with[j])) pairs.emplace_back(with[i], with[j]);
    }
  }
  if (pairs.empty()) {
    graph_.set_clash();
  } else if (pairs.size() == 1) {
    merge(pairs.front().first, pairs.front().second);
    graph_.refire(x, c);
  } else {
    BranchPoint bp;
    bp.kind = BranchKind::Merge;
    bp.node = x;
    bp.concept_id = c;
    bp.pairs = std::move(pairs);
    push_branch(std::move(bp));
  }
}

// A bound already exceeded by pairwise distinct successors is a clash no
// merge can repair; flag it now instead of waiting for the queued refire.
void Tableau::check_at_most(NodeId x, ConceptId c) {
  const ConceptInfo& info = table_->info(c);
  const ConceptId filler = info.operands.front();
  std::vector<NodeId> with;
  for (NodeId y : graph_.node(x).children) {
    const GraphNode& n = graph_.node(y);
    if (!n.pruned && graph_.has_role(y, info.role) && n.label.contains(filler)) with.push_back(y);
  }
  if (with.size() <= info.cardinality) return;
  for (std::size_t i = 0; i < with.size(); ++i) {
    for (std::size_t j = i + 1; j < with.size(); ++j) {
      if (!graph_.are_distinct(with[i], with[j])) return;
    }
  }
  graph_.set_clash();
}

void Tableau::merge(NodeId into, NodeId from) {
  ++stats_.merges;
  const GraphNode src = graph_.node(from);
  graph_.prune(from);
  for (RoleId r : src.edge_roles) graph_.add_edge_role(into, r);
  for (NodeId w : src.distinct) graph_.add_distinct(into, w);
  for (ConceptId c : src.label.items()) graph_.add_concept(into, c);
}

void Tableau::push_branch(BranchPoint bp) {
  ++stats_.branch_points;
  bp.checkpoint = graph_.checkpoint();
  bp.next = 1;
  if (observer_) observer_->on_branch(graph_, branches_.size());
  branches_.push_back(std::move(bp));
  take_alternative(branches_.back(), 0);
}

void Tableau::take_alternative(const BranchPoint& bp, std::size_t i) {
  switch (bp.kind) {
    case BranchKind::Or: graph_.add_concept(bp.node, bp.options[i]); break;
    case BranchKind::Choose:
      graph_.add_concept(bp.target, bp.options[i]);
      if (i == 0 && !graph_.clashed()) check_at_most(bp.node, bp.concept_id);
      graph_.refire(bp.node, bp.concept_id);
      break;
    case BranchKind::Merge:
      merge(bp.pairs[i].first, bp.pairs[i].second);
      graph_.refire(bp.node, bp.concept_id);
      break;
  }
}

bool Tableau::backtrack() {
  ++stats_.backtracks;
  while (!branches_.empty()) {
    BranchPoint& bp = branches_.back();
    if (bp.next < bp.alternatives()) {
      graph_.restore(bp.checkpoint);
      if (observer_) observer_->on_restore(graph_, branches_.size() - 1);
      take_alternative(bp, bp.next++);
      return true;
    }
    branches_.pop_back();
  }
  return false;
}

bool Tableau::release_deferred() {
  const auto pending = graph_.deferred();
  if (pending.empty()) return false;
  std::vector<TodoEntry> keep;
  std::vector<TodoEntry> wake;
  // labels are saturated here, so the configured blocking mode decides
  for (const auto& e : pending) {
    if (graph_.node(e.node).pruned) continue;
    if (graph_.is_blocked(e.node)) {
      keep.push_back(e);
    } else {
      wake.push_back(e);
    }
  }
  if (keep.size() == pending.size()) return false;
  graph_.replace_deferred(std::move(keep));
  for (const auto& e : wake) {
    if (graph_.clashed()) break;
    if (graph_.node(e.node).pruned) continue;
    const ConceptInfo& info = table_->info(e.concept_id);
    ++stats_.rule_applications[static_cast<std::size_t>(info.rule)];
    if (info.kind == ConceptKind::Exists) {
      apply_exists(e, true);
    } else {
      apply_at_least(e, true);
    }
    if (observer_) observer_->on_step(graph_);
  }
  return true;
}

SatResult check_satisfiability(const KnowledgeBase& kb, const Concept& c, const OrderConfig& cfg,
                               std::chrono::milliseconds timeout) {
  const auto deadline = Clock::now() + timeout;
  ConceptTable table;
  const ConceptId meta = table.intern(internalize_tbox(kb));
  const ConceptId root = table.intern(nnf(c));
  Tableau t(table, cfg);
  return t.run(root, meta, deadline);
}

}  // namespace ordo
