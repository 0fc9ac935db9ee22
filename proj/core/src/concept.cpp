#include "ordo/concept.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace ordo {

struct Concept::Node {
  ConceptKind kind;
  std::string name;
  std::uint32_t n = 0;
  std::vector<Concept> children;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Concept::Concept() : Concept(top()) {}

Concept::Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Concept Concept::make(ConceptKind kind, std::string name, std::uint32_t n,
                      std::vector<Concept> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->n = n;
  node->children = std::move(children);
  std::size_t h = mix(static_cast<std::size_t>(kind) + 1, std::hash<std::string>{}(node->name));
  h = mix(h, n);
  for (const auto& child : node->children) h = mix(h, child.hash());
  node->hash = h;
  return Concept(std::move(node));
}

Concept Concept::top() {
  static const Concept value = make(ConceptKind::Top, {}, 0, {});
  return value;
}

Concept Concept::bottom() {
  static const Concept value = make(ConceptKind::Bottom, {}, 0, {});
  return value;
}

Concept Concept::atomic(std::string name) {
  if (name.empty()) throw std::invalid_argument("atomic concept name must not be empty");
  return make(ConceptKind::Atomic, std::move(name), 0, {});
}

Concept Concept::nominal(std::string individual) {
  if (individual.empty()) throw std::invalid_argument("nominal individual must not be empty");
  return make(ConceptKind::Nominal, std::move(individual), 0, {});
}

Concept Concept::negation(Concept operand) {
  return make(ConceptKind::Not, {}, 0, {std::move(operand)});
}

Concept Concept::conjunction(std::vector<Concept> operands) {
  if (operands.size() < 2) throw std::invalid_argument("conjunction needs at least two operands");
  return make(ConceptKind::And, {}, 0, std::move(operands));
}

Concept Concept::disjunction(std::vector<Concept> operands) {
  if (operands.size() < 2) throw std::invalid_argument("disjunction needs at least two operands");
  return make(ConceptKind::Or, {}, 0, std::move(operands));
}

Concept Concept::exists(std::string role, Concept filler) {
  if (role.empty()) throw std::invalid_argument("role name must not be empty");
  return make(ConceptKind::Exists, std::move(role), 0, {std::move(filler)});
}

Concept Concept::forall(std::string role, Concept filler) {
  if (role.empty()) throw std::invalid_argument("role name must not be empty");
  return make(ConceptKind::ForAll, std::move(role), 0, {std::move(filler)});
}

Concept Concept::at_least(std::uint32_t n, std::string role, Concept filler) {
  if (role.empty()) throw std::invalid_argument("role name must not be empty");
  return make(ConceptKind::AtLeast, std::move(role), n, {std::move(filler)});
}

Concept Concept::at_most(std::uint32_t n, std::string role, Concept filler) {
  if (role.empty()) throw std::invalid_argument("role name must not be empty");
  return make(ConceptKind::AtMost, std::move(role), n, {std::move(filler)});
}

ConceptKind Concept::kind() const noexcept { return node_->kind; }
const std::string& Concept::name() const noexcept { return node_->name; }
std::uint32_t Concept::cardinality() const noexcept { return node_->n; }
std::span<const Concept> Concept::operands() const noexcept { return node_->children; }
const Concept& Concept::operand() const noexcept { return node_->children.front(); }
std::size_t Concept::hash() const noexcept { return node_->hash; }

bool Concept::is_nnf() const {
  switch (kind()) {
    case ConceptKind::Not:
      return operand().is_atomic_like();
    case ConceptKind::And:
    case ConceptKind::Or:
      return std::ranges::all_of(operands(), [](const Concept& c) { return c.is_nnf(); });
    case ConceptKind::Exists:
    case ConceptKind::ForAll:
    case ConceptKind::AtLeast:
    case ConceptKind::AtMost:
      return operand().is_nnf();
    default:
      return true;
  }
}

bool Concept::is_enumeration() const {
  return kind() == ConceptKind::Or &&
         std::ranges::all_of(operands(),
                             [](const Concept& c) { return c.kind() == ConceptKind::Nominal; });
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.hash == y.hash && x.kind == y.kind && x.n == y.n && x.name == y.name &&
         x.children == y.children;
}

Concept negate(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return Concept::bottom();
    case ConceptKind::Bottom:
      return Concept::top();
    case ConceptKind::Not:
      return c.operand();
    default:
      return Concept::negation(c);
  }
}

namespace {

Concept join(ConceptKind kind, std::vector<Concept> operands) {
  std::vector<Concept> flat;
  flat.reserve(operands.size());
  for (auto& op : operands) {
    if (op.kind() == kind) {
      flat.insert(flat.end(), op.operands().begin(), op.operands().end());
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.empty()) return kind == ConceptKind::And ? Concept::top() : Concept::bottom();
  if (flat.size() == 1) return std::move(flat.front());
  return kind == ConceptKind::And ? Concept::conjunction(std::move(flat))
                                  : Concept::disjunction(std::move(flat));
}

Concept nnf_negated(const Concept& c);

Concept nnf_positive(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic:
    case ConceptKind::Nominal:
      return c;
    case ConceptKind::Not:
      return nnf_negated(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      ops.reserve(c.operands().size());
      for (const auto& op : c.operands()) ops.push_back(nnf_positive(op));
      return c.kind() == ConceptKind::And ? conjoin(std::move(ops)) : disjoin(std::move(ops));
    }
    case ConceptKind::Exists:
      return Concept::exists(c.role(), nnf_positive(c.filler()));
    case ConceptKind::ForAll:
      return Concept::forall(c.role(), nnf_positive(c.filler()));
    case ConceptKind::AtLeast:
      if (c.cardinality() == 0) return Concept::top();
      return Concept::at_least(c.cardinality(), c.role(), nnf_positive(c.filler()));
    case ConceptKind::AtMost:
      return Concept::at_most(c.cardinality(), c.role(), nnf_positive(c.filler()));
  }
  return c;
}

// nnf of the negation of c
Concept nnf_negated(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return Concept::bottom();
    case ConceptKind::Bottom:
      return Concept::top();
    case ConceptKind::Atomic:
    case ConceptKind::Nominal:
      return Concept::negation(c);
    case ConceptKind::Not:
      return nnf_positive(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      ops.reserve(c.operands().size());
      for (const auto& op : c.operands()) ops.push_back(nnf_negated(op));
      return c.kind() == ConceptKind::And ? disjoin(std::move(ops)) : conjoin(std::move(ops));
    }
    case ConceptKind::Exists:
      return Concept::forall(c.role(), nnf_negated(c.filler()));
    case ConceptKind::ForAll:
      return Concept::exists(c.role(), nnf_negated(c.filler()));
    case ConceptKind::AtLeast:
      if (c.cardinality() == 0) return Concept::bottom();
      return Concept::at_most(c.cardinality() - 1, c.role(), nnf_positive(c.filler()));
    case ConceptKind::AtMost:
      return Concept::at_least(c.cardinality() + 1, c.role(), nnf_positive(c.filler()));
  }
  return c;
}

}  // namespace

Concept conjoin(std::vector<Concept> operands) { return join(ConceptKind::And, std::move(operands)); }
Concept disjoin(std::vector<Concept> operands) { return join(ConceptKind::Or, std::move(operands)); }

Concept nnf(const Concept& c) { return nnf_positive(c); }

void collect_signature(const Concept& c, Signature& out) {
  switch (c.kind()) {
    case ConceptKind::Atomic:
      out.concepts.insert(c.name());
      break;
    case ConceptKind::Nominal:
      out.individuals.insert(c.name());
      break;
    case ConceptKind::Exists:
    case ConceptKind::ForAll:
    case ConceptKind::AtLeast:
    case ConceptKind::AtMost:
      out.roles.insert(c.role());
      collect_signature(c.filler(), out);
      break;
    case ConceptKind::Not:
    case ConceptKind::And:
    case ConceptKind::Or:
      for (const auto& op : c.operands()) collect_signature(op, out);
      break;
    default:
      break;
  }
}

Signature signature_of(const Concept& c) {
  Signature sig;
  collect_signature(c, sig);
  return sig;
}

std::size_t concept_size(const Concept& c) {
  std::size_t size = 1;
  if (c.kind() != ConceptKind::Atomic && c.kind() != ConceptKind::Nominal) {
    for (const auto& op : c.operands()) size += concept_size(op);
  }
  return size;
}

std::size_t modal_depth(const Concept& c) {
  std::size_t inner = 0;
  if (!c.is_atomic_like()) {
    for (const auto& op : c.operands()) inner = std::max(inner, modal_depth(op));
  }
  switch (c.kind()) {
    case ConceptKind::Exists:
    case ConceptKind::ForAll:
    case ConceptKind::AtLeast:
    case ConceptKind::AtMost:
      return inner + 1;
    default:
      return inner;
  }
}

std::string to_string(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return "⊤";
    case ConceptKind::Bottom:
      return "⊥";
    case ConceptKind::Atomic:
      return c.name();
    case ConceptKind::Nominal:
      return "{" + c.name() + "}";
    case ConceptKind::Not:
      return "¬" + to_string(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::string out = "(";
      const char* sep = c.kind() == ConceptKind::And ? " ⊓ " : " ⊔ ";
      bool first = true;
      for (const auto& op : c.operands()) {
        if (!first) out += sep;
        out += to_string(op);
        first = false;
      }
      return out + ")";
    }
    case ConceptKind::Exists:
      return "∃" + c.role() + "." + to_string(c.filler());
    case ConceptKind::ForAll:
      return "∀" + c.role() + "." + to_string(c.filler());
    case ConceptKind::AtLeast:
      return "≥" + std::to_string(c.cardinality()) + " " + c.role() + "." + to_string(c.filler());
    case ConceptKind::AtMost:
      return "≤" + std::to_string(c.cardinality()) + " " + c.role() + "." + to_string(c.filler());
  }
  return {};
}

}  // namespace ordo
