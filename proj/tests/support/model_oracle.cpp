#include "model_oracle.hpp"

#include <bit>
#include <stdexcept>

namespace ordo::oracle {

std::uint32_t Interpretation::extension(const Concept& c) const {
  switch (c.kind()) {
    case ConceptKind::Top: return full();
    case ConceptKind::Bottom: return 0;
    case ConceptKind::Atomic: {
      auto it = concepts.find(c.name());
      return it == concepts.end() ? 0 : it->second;
    }
    case ConceptKind::Nominal: return std::uint32_t{1} << individuals.at(c.name());
    case ConceptKind::Not: return full() & ~extension(c.operand());
    case ConceptKind::And: {
      std::uint32_t m = full();
      for (const auto& op : c.operands()) m &= extension(op);
      return m;
    }
    case ConceptKind::Or: {
      std::uint32_t m = 0;
      for (const auto& op : c.operands()) m |= extension(op);
      return m;
    }
    default: break;
  }
  const std::uint32_t filler = extension(c.filler());
  auto it = roles.find(c.role());
  std::uint32_t result = 0;
  for (std::size_t x = 0; x < size; ++x) {
    const std::uint32_t succ = it == roles.end() ? 0 : it->second[x];
    const auto hits = static_cast<std::uint32_t>(std::popcount(succ & filler));
    bool in = false;
    switch (c.kind()) {
      case ConceptKind::Exists: in = hits > 0; break;
      case ConceptKind::ForAll: in = (succ & ~filler) == 0; break;
      case ConceptKind::AtLeast: in = hits >= c.cardinality(); break;
      case ConceptKind::AtMost: in = hits <= c.cardinality(); break;
      default: break;
    }
    if (in) result |= std::uint32_t{1} << x;
  }
  return result;
}

bool Interpretation::satisfies_tbox(const KnowledgeBase& kb) const {
  auto subset = [](std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; };
  for (const auto& ax : kb.tbox) {
    switch (ax.kind) {
      case AxiomKind::SubClassOf:
        if (!subset(extension(ax.classes[0]), extension(ax.classes[1]))) return false;
        break;
      case AxiomKind::EquivalentClasses:
        for (std::size_t i = 1; i < ax.classes.size(); ++i) {
          if (extension(ax.classes[0]) != extension(ax.classes[i])) return false;
        }
        break;
      case AxiomKind::DisjointClasses:
        for (std::size_t i = 0; i < ax.classes.size(); ++i) {
          for (std::size_t j = i + 1; j < ax.classes.size(); ++j) {
            if ((extension(ax.classes[i]) & extension(ax.classes[j])) != 0) return false;
          }
        }
        break;
      case AxiomKind::ObjectPropertyDomain: {
        const auto some = extension(Concept::exists(ax.properties[0], Concept::top()));
        if (!subset(some, extension(ax.classes[0]))) return false;
        break;
      }
      case AxiomKind::ObjectPropertyRange: {
        const auto all = extension(Concept::forall(ax.properties[0], ax.classes[0]));
        if (all != full()) return false;
        break;
      }
      default: break;
    }
  }
  for (const auto& ax : kb.rbox) {
    if (ax.kind != AxiomKind::FunctionalObjectProperty) continue;
    auto it = roles.find(ax.properties[0]);
    if (it == roles.end()) continue;
    for (std::size_t x = 0; x < size; ++x) {
      if (std::popcount(it->second[x]) > 1) return false;
    }
  }
  return true;
}

namespace {

bool search(const KnowledgeBase& kb, const Concept& c, std::size_t d, const std::vector<std::string>& atoms,
            const std::vector<std::string>& roles, const std::vector<std::string>& inds) {
  const std::size_t atom_bits = atoms.size() * d;
  const std::size_t role_bits = roles.size() * d * d;
  if (atom_bits + role_bits > 30) throw std::runtime_error("oracle signature too large for domain");

  std::size_t nominal_combos = 1;
  for (std::size_t i = 0; i < inds.size(); ++i) nominal_combos *= d;

  Interpretation I;
  I.size = d;
  const std::uint64_t atom_space = std::uint64_t{1} << atom_bits;
  const std::uint64_t role_space = std::uint64_t{1} << role_bits;
  const std::uint32_t dmask = (std::uint32_t{1} << d) - 1;
  for (std::uint64_t rv = 0; rv < role_space; ++rv) {
    for (std::size_t r = 0; r < roles.size(); ++r) {
      auto& succ = I.roles[roles[r]];
      succ.assign(d, 0);
      for (std::size_t x = 0; x < d; ++x) {
        succ[x] = static_cast<std::uint32_t>(rv >> ((r * d + x) * d)) & dmask;
      }
    }
    for (std::uint64_t av = 0; av < atom_space; ++av) {
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        I.concepts[atoms[a]] = static_cast<std::uint32_t>(av >> (a * d)) & dmask;
      }
      for (std::size_t nv = 0; nv < nominal_combos; ++nv) {
        std::size_t rest = nv;
        for (const auto& name : inds) {
          I.individuals[name] = rest % d;
          rest /= d;
        }
        if (I.extension(c) != 0 && I.satisfies_tbox(kb)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool satisfiable(const KnowledgeBase& kb, const Concept& c, std::size_t max_domain) {
  Signature sig = signature_of(c);
  for (const auto& ax : kb.tbox) {
    for (const auto& cls : ax.classes) collect_signature(cls, sig);
    for (const auto& p : ax.properties) sig.roles.insert(p);
  }
  for (const auto& ax : kb.rbox) {
    if (ax.kind == AxiomKind::FunctionalObjectProperty) sig.roles.insert(ax.properties[0]);
  }
  const std::vector<std::string> atoms(sig.concepts.begin(), sig.concepts.end());
  const std::vector<std::string> roles(sig.roles.begin(), sig.roles.end());
  const std::vector<std::string> inds(sig.individuals.begin(), sig.individuals.end());
  for (std::size_t d = 1; d <= max_domain; ++d) {
    if (search(kb, c, d, atoms, roles, inds)) return true;
  }
  return false;
}

bool satisfiable(const Concept& c, std::size_t max_domain) {
  return satisfiable(KnowledgeBase{}, c, max_domain);
}

}  // namespace ordo::oracle
