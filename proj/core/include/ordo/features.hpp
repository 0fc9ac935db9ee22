#ifndef ORDO_FEATURES_HPP
#define ORDO_FEATURES_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "ordo/ofs.hpp"

namespace ordo {

inline constexpr std::size_t kFeatureCount = 48;
using FeatureVector = std::array<double, kFeatureCount>;

/// Column names f00_exists .. f47_nested_eq_existsgeq in schema order.
std::span<const std::string_view, kFeatureCount> feature_names();

/// Schema offsets of the feature blocks.
namespace feature_index {
inline constexpr std::size_t kExists = 0;
inline constexpr std::size_t kClasses = 2;
inline constexpr std::size_t kConjGroups = 3;
inline constexpr std::size_t kDisjGroups = 4;
inline constexpr std::size_t kNominals = 8;
inline constexpr std::size_t kInstances = 9;
inline constexpr std::size_t kFunctional = 20;
inline constexpr std::size_t kTboxRatio = 24;
inline constexpr std::size_t kRatioLeqForall = 27;
inline constexpr std::size_t kRatioGeqExists = 28;
inline constexpr std::size_t kRatioOr = 29;
inline constexpr std::size_t kRatioAnd = 30;
inline constexpr std::size_t kAvgPopulation = 31;
inline constexpr std::size_t kTopSub = 32;
inline constexpr std::size_t kTopEq = 36;
inline constexpr std::size_t kNestedSub = 40;
inline constexpr std::size_t kNestedEq = 44;
}  // namespace feature_index

/// Constructor occurrences per expansion-rule category.
struct RuleCounts {
  double at_most = 0;
  double forall = 0;
  double disjunction = 0;
  double conjunction = 0;
  double at_least = 0;
  double exists = 0;
};

struct RuleRatios {
  double leq_forall = 0;
  double geq_exists = 0;
  double disjunction = 0;
  double conjunction = 0;
};

/// Share of each rule group in the six-way total; zeros for an empty total.
RuleRatios rule_ratios(const RuleCounts& counts);

/// Pattern groups: (⊔ or ≤), ⊓, ∀, (∃ or ≥).
enum class PatternGroup : std::uint8_t { OrAtMost = 0, And, ForAll, ExistsAtLeast };

struct PatternCounts {
  std::array<double, 4> top_sub{};
  std::array<double, 4> top_eq{};
  std::array<double, 4> nested_sub{};
  std::array<double, 4> nested_eq{};
};

/// Right-hand sides are the superclass of SubClassOf and every non-atomic
/// operand of EquivalentClasses. An axiom adds one to top_* for each group
/// some right-hand side starts with; nested_* counts constructors strictly
/// below the right-hand-side root, at any depth.
PatternCounts pattern_counts(const SourceDocument& doc);

RuleCounts rule_counts(const SourceDocument& doc);

FeatureVector extract_features(const SourceDocument& doc);

}  // namespace ordo

#endif  // ORDO_FEATURES_HPP
