#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ordo/features.hpp"
#include "ordo/ofs.hpp"

using namespace ordo;
namespace fi = ordo::feature_index;

namespace {

FeatureVector features_of(std::string_view text) { return extract_features(parse_document(text)); }

}  // namespace

TEST(FeatureSchema, FortyEightUniqueNames) {
  const auto names = feature_names();
  ASSERT_EQ(names.size(), 48U);
  EXPECT_EQ(names.front(), "f00_exists");
  EXPECT_EQ(names.back(), "f47_nested_eq_existsgeq");
  for (std::size_t i = 0; i < names.size(); ++i) {
    char prefix[8];
    std::snprintf(prefix, sizeof prefix, "f%02zu_", i);
    EXPECT_TRUE(names[i].starts_with(prefix)) << names[i];
  }
}

TEST(Features, EmptyDocumentIsAllZero) {
  const auto f = features_of("");
  for (double v : f) EXPECT_EQ(v, 0.0);
}

TEST(Features, SingleUnion) {
  const auto f = features_of("SubClassOf(A ObjectUnionOf(B C))");
  EXPECT_EQ(f[fi::kClasses], 3);
  EXPECT_EQ(f[fi::kDisjGroups], 1);
  EXPECT_EQ(f[fi::kTopSub + 0], 1);
  EXPECT_EQ(f[fi::kRatioOr], 1.0);
  EXPECT_EQ(f[13], 1);
  EXPECT_EQ(f[fi::kTboxRatio], 1.0);
}

TEST(Features, AveragePopulation) {
  std::string doc;
  for (int c = 0; c < 5; ++c) doc += "Declaration(Class(C" + std::to_string(c) + "))\n";
  for (int i = 0; i < 10; ++i) doc += "ClassAssertion(C" + std::to_string(i % 5) + " i" + std::to_string(i) + ")\n";
  const auto f = features_of(doc);
  EXPECT_EQ(f[fi::kInstances], 10);
  EXPECT_EQ(f[fi::kAvgPopulation], 2.0);
  EXPECT_EQ(f[fi::kTboxRatio + 1], 1.0);
}

TEST(RuleRatios, Examples) {
  const auto r = rule_ratios(RuleCounts{1, 1, 1, 1, 0, 0});
  EXPECT_DOUBLE_EQ(r.leq_forall, 0.5);
  EXPECT_DOUBLE_EQ(r.geq_exists, 0.0);
  EXPECT_DOUBLE_EQ(r.disjunction, 0.25);
  EXPECT_DOUBLE_EQ(r.conjunction, 0.25);
  const auto only_and = rule_ratios(RuleCounts{0, 0, 0, 4, 0, 0});
  EXPECT_DOUBLE_EQ(only_and.conjunction, 1.0);
  EXPECT_DOUBLE_EQ(only_and.leq_forall, 0.0);
  const auto none = rule_ratios(RuleCounts{});
  EXPECT_EQ(none.conjunction + none.disjunction + none.leq_forall + none.geq_exists, 0.0);
}

TEST(Patterns, NestedUnionAndForall) {
  const auto p = pattern_counts(parse_document(
      "SubClassOf(A ObjectUnionOf(B ObjectUnionOf(C ObjectAllValuesFrom(R D))))"));
  EXPECT_EQ(p.top_sub[0], 1);
  EXPECT_EQ(p.nested_sub[0], 1);
  EXPECT_EQ(p.nested_sub[2], 1);
  EXPECT_EQ(p.nested_sub[1], 0);
  EXPECT_EQ(p.nested_eq[0], 0);
}

TEST(Patterns, EquivalentClassesUseComplexOperands) {
  const auto p = pattern_counts(parse_document(
      "EquivalentClasses(A ObjectIntersectionOf(B ObjectSomeValuesFrom(R C)))\n"
      "EquivalentClasses(D ObjectMinCardinality(2 R E))\n"));
  EXPECT_EQ(p.top_eq[1], 1);
  EXPECT_EQ(p.top_eq[3], 1);
  EXPECT_EQ(p.nested_eq[3], 1);
  EXPECT_EQ(p.top_sub[1], 0);
}

TEST(Patterns, TopLevelCountsOncePerAxiom) {
  const auto p = pattern_counts(parse_document(
      "EquivalentClasses(ObjectUnionOf(A B) ObjectUnionOf(C D))"));
  EXPECT_EQ(p.top_eq[0], 1);
}

TEST(Features, NominalsCountIndividuals) {
  const auto f = features_of("SubClassOf(A ObjectOneOf(a b c))");
  EXPECT_EQ(f[fi::kNominals], 3);
  EXPECT_EQ(f[fi::kDisjGroups], 0);
}

TEST(Features, GroupsCountMaximalRuns) {
  const auto f = features_of(
      "SubClassOf(A ObjectIntersectionOf(B ObjectIntersectionOf(C D)))\n"
      "SubClassOf(A ObjectIntersectionOf(B ObjectUnionOf(C ObjectIntersectionOf(D E))))\n");
  EXPECT_EQ(f[fi::kConjGroups], 3);
  EXPECT_EQ(f[fi::kDisjGroups], 1);
}

TEST(Features, PropertyCharacteristics) {
  const auto f = features_of(
      "FunctionalObjectProperty(R)\nTransitiveObjectProperty(S)\nSymmetricObjectProperty(S)\n"
      "InverseFunctionalObjectProperty(R)\nSubObjectPropertyOf(R S)\n");
  EXPECT_EQ(f[fi::kFunctional], 1);
  EXPECT_EQ(f[21], 1);
  EXPECT_EQ(f[22], 1);
  EXPECT_EQ(f[23], 1);
  EXPECT_EQ(f[15], 1);
  EXPECT_EQ(f[6], 2);
}

TEST(Features, AxiomOrderDoesNotMatter) {
  std::vector<std::string> lines = {
      "SubClassOf(A ObjectUnionOf(B ObjectSomeValuesFrom(R C)))",
      "EquivalentClasses(D ObjectAllValuesFrom(R ObjectMaxCardinality(1 S E)))",
      "ClassAssertion(A x)",
      "ObjectPropertyAssertion(R x y)",
      "DisjointClasses(A D)",
      "ObjectPropertyRange(R B)",
  };
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  const auto base = features_of(text);
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    std::shuffle(lines.begin(), lines.end(), rng);
    text.clear();
    for (const auto& l : lines) text += l + "\n";
    EXPECT_EQ(features_of(text), base);
  }
}

TEST(Features, CountsAreMonotoneUnderAddedAxioms) {
  std::string text = "SubClassOf(A ObjectSomeValuesFrom(R B))\n";
  auto prev = features_of(text);
  const char* extra[] = {"SubClassOf(B ObjectAllValuesFrom(R C))", "ClassAssertion(A a)",
                         "EquivalentClasses(C ObjectIntersectionOf(A B))", "SubClassOf(C ObjectMaxCardinality(2 R A))"};
  for (const char* line : extra) {
    text += std::string(line) + "\n";
    const auto cur = features_of(text);
    for (std::size_t i = 0; i < 24; ++i) EXPECT_GE(cur[i], prev[i]) << i;
    for (std::size_t i = fi::kTopSub; i < kFeatureCount; ++i) EXPECT_GE(cur[i], prev[i]) << i;
    prev = cur;
  }
}

TEST(Features, AllFiniteAndNonNegativeOnCorpus) {
  for (const char* name : {"family.ofs", "pizza.ofs"}) {
    const auto f = extract_features(load_document(std::string(ORDO_DATA_DIR) + "/ontologies/" + name));
    for (double v : f) {
      EXPECT_TRUE(std::isfinite(v));
      EXPECT_GE(v, 0.0);
    }
    EXPECT_GT(f[fi::kClasses], 0);
  }
}
