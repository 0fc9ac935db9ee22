#ifndef ORDO_SYNTHETIC_HPP
#define ORDO_SYNTHETIC_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ordo/learn/preprocess.hpp"
#include "ordo/ofs.hpp"

namespace ordo::synthetic {

// The defaults stay clear of shapes that make chronological backtracking
// thrash (general GCIs, domain axioms, deep nesting); turn them on explicitly.
struct RandomKbOptions {
  std::size_t classes = 6;
  std::size_t roles = 2;
  std::size_t min_axioms = 3;
  std::size_t max_axioms = 6;  // TBox axioms, excluding declarations
  int max_depth = 1;
  std::uint32_t max_cardinality = 2;
  std::size_t assertions = 4;  // ABox axioms appended after the TBox
  // relative weights of the TBox axiom shapes
  unsigned atomic_sub = 6;    // SubClassOf(Ci, expr)
  unsigned general_sub = 0;   // SubClassOf(expr, expr)
  unsigned equivalence = 1;   // EquivalentClasses(Ci, expr)
  unsigned disjoint = 1;
  unsigned domain_range = 0;
};

/// Random GCIs over C0..Cn and R0..Rm mixing ⊓ ⊔ ¬ ∃ ∀ ≥ ≤, plus a few
/// disjointness, domain/range and assertion axioms.
SourceDocument random_kb(std::uint64_t seed, const RandomKbOptions& options = {});

/// Bomb ⊑ ⊓(Aᵢ ⊔ Bᵢ) ⊓ ∃R…∃R.X ⊓ ∀R…∀R.¬X with `disjunctions` choices and a
/// chain of `depth` roles. Bomb is unsatisfiable; how soon the engine notices
/// depends on whether the chain is expanded before the disjunctions.
SourceDocument disjunction_bomb(std::size_t disjunctions, std::size_t depth = 1);

struct PlantedDataset {
  learn::Matrix X;  // rows x 48, feature-schema order
  learn::Labels y;
  std::vector<std::size_t> informative;
};

/// Count-like noise features plus the four rule-ratio features (a point on
/// the simplex). y = 1 iff the ⊓ and ⊔ shares sum below one half, flipped
/// with probability `flip`.
PlantedDataset planted_dataset(std::size_t rows = 200, std::uint64_t seed = 1, double flip = 0.03);

}  // namespace ordo::synthetic

#endif  // ORDO_SYNTHETIC_HPP
