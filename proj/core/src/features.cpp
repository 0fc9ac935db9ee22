#include "ordo/features.hpp"

#include <optional>
#include <vector>

namespace ordo {

namespace {

constexpr std::array<std::string_view, kFeatureCount> kNames = {
    "f00_exists",
    "f01_forall",
    "f02_classes",
    "f03_conj_groups",
    "f04_disj_groups",
    "f05_disjoint_classes",
    "f06_object_properties",
    "f07_inverse_object_properties",
    "f08_nominals",
    "f09_instances",
    "f10_role_assertions",
    "f11_min_cardinalities",
    "f12_max_cardinalities",
    "f13_subclasses",
    "f14_equivalent_classes",
    "f15_sub_object_properties",
    "f16_domains",
    "f17_ranges",
    "f18_data_properties",
    "f19_data_property_assertions",
    "f20_functional",
    "f21_transitive",
    "f22_symmetric",
    "f23_inverse_functional",
    "f24_tbox_ratio",
    "f25_abox_ratio",
    "f26_rbox_ratio",
    "f27_ratio_leq_forall",
    "f28_ratio_geq_exists",
    "f29_ratio_or",
    "f30_ratio_and",
    "f31_avg_population",
    "f32_top_sub_orleq",
    "f33_top_sub_and",
    "f34_top_sub_forall",
    "f35_top_sub_existsgeq",
    "f36_top_eq_orleq",
    "f37_top_eq_and",
    "f38_top_eq_forall",
    "f39_top_eq_existsgeq",
    "f40_nested_sub_orleq",
    "f41_nested_sub_and",
    "f42_nested_sub_forall",
    "f43_nested_sub_existsgeq",
    "f44_nested_eq_orleq",
    "f45_nested_eq_and",
    "f46_nested_eq_forall",
    "f47_nested_eq_existsgeq",
};

std::optional<PatternGroup> group_of(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Or:
      if (c.is_enumeration()) return std::nullopt;
      return PatternGroup::OrAtMost;
    case ConceptKind::AtMost: return PatternGroup::OrAtMost;
    case ConceptKind::And: return PatternGroup::And;
    case ConceptKind::ForAll: return PatternGroup::ForAll;
    case ConceptKind::Exists:
    case ConceptKind::AtLeast: return PatternGroup::ExistsAtLeast;
    default: return std::nullopt;
  }
}

void count_nested(const Concept& c, std::array<double, 4>& out) {
  for (const auto& op : c.operands()) {
    if (auto g = group_of(op)) out[static_cast<std::size_t>(*g)] += 1;
    count_nested(op, out);
  }
}

struct Tally {
  RuleCounts rules;
  double conj_groups = 0;
  double disj_groups = 0;
  double nominals = 0;

  void visit(const Concept& c, ConceptKind parent) {
    switch (c.kind()) {
      case ConceptKind::Exists: rules.exists += 1; break;
      case ConceptKind::ForAll: rules.forall += 1; break;
      case ConceptKind::AtLeast: rules.at_least += 1; break;
      case ConceptKind::AtMost: rules.at_most += 1; break;
      case ConceptKind::Nominal: nominals += 1; break;
      case ConceptKind::And:
        rules.conjunction += 1;
        if (parent != ConceptKind::And) conj_groups += 1;
        break;
      case ConceptKind::Or:
        if (c.is_enumeration()) break;
        rules.disjunction += 1;
        if (parent != ConceptKind::Or) disj_groups += 1;
        break;
      default: break;
    }
    for (const auto& op : c.operands()) visit(op, c.kind());
  }
};

Tally tally(const SourceDocument& doc) {
  Tally t;
  for (const auto& ax : doc.axioms) {
    for (const auto& c : ax.classes) t.visit(c, ConceptKind::Top);
  }
  return t;
}

double ratio(double num, double den) { return den > 0 ? num / den : 0.0; }

}  // namespace

std::span<const std::string_view, kFeatureCount> feature_names() { return kNames; }

RuleRatios rule_ratios(const RuleCounts& c) {
  const double total = c.at_most + c.forall + c.disjunction + c.conjunction + c.at_least + c.exists;
  return RuleRatios{ratio(c.at_most + c.forall, total), ratio(c.at_least + c.exists, total),
                    ratio(c.disjunction, total), ratio(c.conjunction, total)};
}

RuleCounts rule_counts(const SourceDocument& doc) { return tally(doc).rules; }

PatternCounts pattern_counts(const SourceDocument& doc) {
  PatternCounts p;
  for (const auto& ax : doc.axioms) {
    std::array<double, 4>* top = nullptr;
    std::array<double, 4>* nested = nullptr;
    std::vector<const Concept*> rhs;
    if (ax.kind == AxiomKind::SubClassOf) {
      top = &p.top_sub;
      nested = &p.nested_sub;
      rhs.push_back(&ax.classes[1]);
    } else if (ax.kind == AxiomKind::EquivalentClasses) {
      top = &p.top_eq;
      nested = &p.nested_eq;
      for (const auto& c : ax.classes) {
        if (!c.is_atomic_like() && c.kind() != ConceptKind::Top && c.kind() != ConceptKind::Bottom) rhs.push_back(&c);
      }
    } else {
      continue;
    }
    std::array<bool, 4> hit{};
    for (const Concept* c : rhs) {
      if (auto g = group_of(*c)) hit[static_cast<std::size_t>(*g)] = true;
      count_nested(*c, *nested);
    }
    for (std::size_t g = 0; g < 4; ++g) {
      if (hit[g]) (*top)[g] += 1;
    }
  }
  return p;
}

FeatureVector extract_features(const SourceDocument& doc) {
  namespace fi = feature_index;
  FeatureVector f{};
  const KnowledgeBase kb = doc.knowledge_base();
  const Tally t = tally(doc);

  auto count_kind = [&](AxiomKind k) {
    double n = 0;
    for (const auto& ax : doc.axioms) n += ax.kind == k ? 1 : 0;
    return n;
  };

  f[0] = t.rules.exists;
  f[1] = t.rules.forall;
  f[2] = static_cast<double>(kb.classes.size());
  f[3] = t.conj_groups;
  f[4] = t.disj_groups;
  f[5] = count_kind(AxiomKind::DisjointClasses);
  f[6] = static_cast<double>(kb.roles.size());
  f[7] = count_kind(AxiomKind::InverseObjectProperties);
  f[8] = t.nominals;
  f[9] = count_kind(AxiomKind::ClassAssertion);
  f[10] = count_kind(AxiomKind::ObjectPropertyAssertion);
  f[11] = t.rules.at_least;
  f[12] = t.rules.at_most;
  f[13] = count_kind(AxiomKind::SubClassOf);
  f[14] = count_kind(AxiomKind::EquivalentClasses);
  f[15] = count_kind(AxiomKind::SubObjectPropertyOf);
  f[16] = count_kind(AxiomKind::ObjectPropertyDomain);
  f[17] = count_kind(AxiomKind::ObjectPropertyRange);
  f[18] = static_cast<double>(kb.data_properties.size());
  f[19] = count_kind(AxiomKind::DataPropertyAssertion);
  f[20] = count_kind(AxiomKind::FunctionalObjectProperty);
  f[21] = count_kind(AxiomKind::TransitiveObjectProperty);
  f[22] = count_kind(AxiomKind::SymmetricObjectProperty);
  f[23] = count_kind(AxiomKind::InverseFunctionalObjectProperty);

  const double logical = static_cast<double>(kb.logical_axiom_count());
  f[fi::kTboxRatio] = ratio(static_cast<double>(kb.tbox.size()), logical);
  f[fi::kTboxRatio + 1] = ratio(static_cast<double>(kb.abox.size()), logical);
  f[fi::kTboxRatio + 2] = ratio(static_cast<double>(kb.rbox.size()), logical);

  const RuleRatios r = rule_ratios(t.rules);
  f[fi::kRatioLeqForall] = r.leq_forall;
  f[fi::kRatioGeqExists] = r.geq_exists;
  f[fi::kRatioOr] = r.disjunction;
  f[fi::kRatioAnd] = r.conjunction;
  f[fi::kAvgPopulation] = ratio(f[fi::kInstances], f[fi::kClasses]);

  const PatternCounts p = pattern_counts(doc);
  for (std::size_t g = 0; g < 4; ++g) {
    f[fi::kTopSub + g] = p.top_sub[g];
    f[fi::kTopEq + g] = p.top_eq[g];
    f[fi::kNestedSub + g] = p.nested_sub[g];
    f[fi::kNestedEq + g] = p.nested_eq[g];
  }
  return f;
}

}  // namespace ordo
