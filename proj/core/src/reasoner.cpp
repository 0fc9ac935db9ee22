#include "ordo/reasoner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ordo {

std::string_view to_string(Entailment e) {
  switch (e) {
    case Entailment::True: return "true";
    case Entailment::False: return "false";
    case Entailment::Timeout: return "TIMEOUT";
  }
  return "?";
}

namespace {

Entailment from_unsat(Verdict v) {
  switch (v) {
    case Verdict::Unsat: return Entailment::True;
    case Verdict::Sat: return Entailment::False;
    default: return Entailment::Timeout;
  }
}

}  // namespace

Verdict is_satisfiable(const KnowledgeBase& kb, const Concept& c, const OrderConfig& cfg,
                       std::chrono::milliseconds timeout) {
  return check_satisfiability(kb, c, cfg, timeout).verdict;
}

Entailment subsumes(const KnowledgeBase& kb, const Concept& d, const Concept& c, const OrderConfig& cfg,
                    std::chrono::milliseconds timeout) {
  return from_unsat(is_satisfiable(kb, conjoin({c, negate(d)}), cfg, timeout));
}

Entailment equivalent(const KnowledgeBase& kb, const Concept& c, const Concept& d, const OrderConfig& cfg,
                      std::chrono::milliseconds timeout) {
  const Concept diff = disjoin({conjoin({c, negate(d)}), conjoin({d, negate(c)})});
  return from_unsat(is_satisfiable(kb, diff, cfg, timeout));
}

Entailment disjoint(const KnowledgeBase& kb, const Concept& c, const Concept& d, const OrderConfig& cfg,
                    std::chrono::milliseconds timeout) {
  return from_unsat(is_satisfiable(kb, conjoin({c, d}), cfg, timeout));
}

Verdict tbox_consistent(const KnowledgeBase& kb, const OrderConfig& cfg, std::chrono::milliseconds timeout) {
  return is_satisfiable(kb, Concept::top(), cfg, timeout);
}

Reasoner::Reasoner(const KnowledgeBase& kb, const OrderConfig& cfg)
    : cfg_(cfg), meta_(table_.intern(internalize_tbox(kb))) {}

SatResult Reasoner::satisfiable(const Concept& c, Clock::time_point deadline) {
  const ConceptId root = table_.intern(nnf(c));
  Tableau t(table_, cfg_);
  return t.run(root, meta_, deadline);
}

std::optional<std::size_t> Hierarchy::bucket_of(std::string_view name) const {
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    if (std::find(buckets[i].begin(), buckets[i].end(), name) != buckets[i].end()) return i;
  }
  return std::nullopt;
}

std::vector<std::string> Hierarchy::export_lines() const {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    const auto& b = buckets[i];
    for (std::size_t j = 1; j < b.size(); ++j) lines.push_back("eq " + b.front() + ' ' + b[j]);
    for (std::size_t p : parents[i]) lines.push_back("sub " + b.front() + ' ' + buckets[p].front());
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::string Hierarchy::to_text() const {
  std::string out;
  for (const auto& line : export_lines()) {
    out += line;
    out += '\n';
  }
  return out;
}

ClassificationResult classify_hierarchy(const KnowledgeBase& kb, const OrderConfig& cfg,
                                        std::chrono::milliseconds timeout) {
  const auto start = Clock::now();
  const auto deadline = start + timeout;
  ClassificationResult result;
  Reasoner reasoner(kb, cfg);

  bool timed_out = false;
  auto check = [&](const Concept& c) -> Verdict {
    if (timed_out) return Verdict::Timeout;
    SatResult r = reasoner.satisfiable(c, deadline);
    result.stats += r.stats;
    ++result.checks;
    if (r.verdict == Verdict::Timeout) timed_out = true;
    return r.verdict;
  };
  auto finish = [&] {
    result.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
  };

  std::vector<std::string> names;
  for (const auto& c : kb.classes) {
    if (c != kThingName && c != kNothingName) names.push_back(c);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  std::vector<std::string> top_eq;
  std::vector<std::string> bottom_eq;
  std::vector<std::string> rest;
  for (const auto& name : names) {
    const Concept a = Concept::atomic(name);
    const Verdict sat = check(a);
    if (sat == Verdict::Timeout) break;
    if (sat == Verdict::Unsat) {
      bottom_eq.push_back(name);
      continue;
    }
    const Verdict neg = check(negate(a));
    if (neg == Verdict::Timeout) break;
    if (neg == Verdict::Unsat) {
      top_eq.push_back(name);
    } else {
      rest.push_back(name);
    }
  }

  // below[i][j]: rest[i] ⊑ rest[j]
  const std::size_t n = rest.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n && !timed_out; ++i) {
    below[i][i] = 1;
    for (std::size_t j = 0; j < n && !timed_out; ++j) {
      if (i == j) continue;
      const Concept test = conjoin({Concept::atomic(rest[i]), negate(Concept::atomic(rest[j]))});
      below[i][j] = check(test) == Verdict::Unsat ? 1 : 0;
    }
  }
  if (timed_out) {
    result.status = Verdict::Timeout;
    return finish();
  }

  // equivalence buckets over rest, in name order
  std::vector<std::size_t> bucket_of(n, SIZE_MAX);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (bucket_of[i] != SIZE_MAX) continue;
    bucket_of[i] = groups.size();
    groups.push_back({i});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (bucket_of[j] == SIZE_MAX && below[i][j] && below[j][i]) {
        bucket_of[j] = bucket_of[i];
        groups.back().push_back(j);
      }
    }
  }

  Hierarchy& h = result.hierarchy;
  h.buckets.push_back({std::string(kThingName)});
  h.buckets.back().insert(h.buckets.back().end(), top_eq.begin(), top_eq.end());
  h.buckets.push_back({std::string(kNothingName)});
  h.buckets.back().insert(h.buckets.back().end(), bottom_eq.begin(), bottom_eq.end());
  h.parents.assign(2, {});

  const std::size_t g = groups.size();
  auto gbelow = [&](std::size_t a, std::size_t b) { return below[groups[a].front()][groups[b].front()] != 0; };
  for (std::size_t a = 0; a < g; ++a) {
    std::vector<std::string> members;
    for (std::size_t i : groups[a]) members.push_back(rest[i]);
    h.buckets.push_back(std::move(members));
    std::vector<std::size_t> direct;
    for (std::size_t b = 0; b < g; ++b) {
      if (a == b || !gbelow(a, b)) continue;
      bool is_direct = true;
      for (std::size_t c = 0; c < g && is_direct; ++c) {
        if (c != a && c != b && gbelow(a, c) && gbelow(c, b)) is_direct = false;
      }
      if (is_direct) direct.push_back(b + 2);
    }
    if (direct.empty()) direct.push_back(Hierarchy::kTopBucket);
    h.parents.push_back(std::move(direct));
  }
  return finish();
}

}  // namespace ordo
