#ifndef ORDO_TESTS_ALC_ENUMERATION_HPP
#define ORDO_TESTS_ALC_ENUMERATION_HPP

#include <cstddef>
#include <vector>

#include "ordo/concept.hpp"

namespace ordo::oracle {

/// Every ALC concept up to max_size over atoms {A, B}, ⊤, ⊥ and role R.
/// Size counts one per constructor and leaf; ⊓/⊔ are binary and both operand
/// orders are included. Alongside each concept, its satisfiability decided
/// by evaluating it in all 2^15 interpretations over a 3-element domain.
struct AlcCorpus {
  std::vector<Concept> concepts;
  std::vector<std::size_t> sizes;
  std::vector<bool> satisfiable;
};

AlcCorpus enumerate_alc(std::size_t max_size);

/// Closed-form count of the enumeration, for cross-checking.
std::size_t alc_count(std::size_t max_size);

}  // namespace ordo::oracle

#endif  // ORDO_TESTS_ALC_ENUMERATION_HPP
