#include "ordo/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "ordo/features.hpp"

namespace ordo::synthetic {

namespace {

class ConceptGen {
 public:
  ConceptGen(std::mt19937_64& rng, const RandomKbOptions& o) : rng_(rng), o_(o) {}

  Concept atom() { return Concept::atomic("C" + std::to_string(pick(o_.classes))); }
  std::string role() { return "R" + std::to_string(pick(o_.roles)); }

  Concept make(int depth) {
    const std::size_t top = depth <= 0 ? 1 : 8;
    switch (pick(top + 1)) {
      case 0: return atom();
      case 1: return Concept::negation(atom());
      case 2: return Concept::conjunction({make(depth - 1), make(depth - 1)});
      case 3: return Concept::disjunction({make(depth - 1), make(depth - 1)});
      case 4: return Concept::exists(role(), make(depth - 1));
      case 5: return Concept::forall(role(), make(depth - 1));
      case 6: return Concept::at_least(1 + static_cast<std::uint32_t>(pick(o_.max_cardinality)), role(), make(depth - 1));
      case 7: return Concept::at_most(static_cast<std::uint32_t>(pick(o_.max_cardinality + 1)), role(), make(depth - 1));
      default: return Concept::negation(make(depth - 1));
    }
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

 private:
  std::mt19937_64& rng_;
  const RandomKbOptions& o_;
};

}  // namespace

SourceDocument random_kb(std::uint64_t seed, const RandomKbOptions& options) {
  std::mt19937_64 rng(seed);
  ConceptGen gen(rng, options);
  SourceDocument doc;
  for (std::size_t i = 0; i < options.classes; ++i) {
    doc.axioms.push_back(Axiom::declaration(EntityType::Class, "C" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < options.roles; ++i) {
    doc.axioms.push_back(Axiom::declaration(EntityType::ObjectProperty, "R" + std::to_string(i)));
  }
  const std::size_t n = options.min_axioms + gen.pick(options.max_axioms - options.min_axioms + 1);
  for (std::size_t a = 0; a < n; ++a) {
    const unsigned weights[] = {options.atomic_sub, options.general_sub, options.equivalence, options.disjoint,
                                options.domain_range};
    std::discrete_distribution<int> shape(std::begin(weights), std::end(weights));
    switch (shape(rng)) {
      case 1: doc.axioms.push_back(Axiom::sub_class_of(gen.make(1), gen.make(options.max_depth))); break;
      case 2: doc.axioms.push_back(Axiom::equivalent_classes({gen.atom(), gen.make(options.max_depth)})); break;
      case 3: {
        Concept x = gen.atom();
        Concept y = gen.atom();
        doc.axioms.push_back(x == y ? Axiom::sub_class_of(x, gen.make(options.max_depth)) : Axiom::disjoint_classes({x, y}));
        break;
      }
      case 4:
        doc.axioms.push_back(gen.pick(2) == 0 ? Axiom::domain(gen.role(), gen.make(1)) : Axiom::range(gen.role(), gen.make(1)));
        break;
      default: doc.axioms.push_back(Axiom::sub_class_of(gen.atom(), gen.make(options.max_depth))); break;
    }
  }
  for (std::size_t a = 0; a < options.assertions; ++a) {
    const std::string ind = "i" + std::to_string(gen.pick(4));
    if (gen.pick(2) == 0) {
      doc.axioms.push_back(Axiom::class_assertion(gen.atom(), ind));
    } else {
      doc.axioms.push_back(Axiom::object_property_assertion(gen.role(), ind, "i" + std::to_string(gen.pick(4))));
    }
  }
  return doc;
}

SourceDocument disjunction_bomb(std::size_t disjunctions, std::size_t depth) {
  SourceDocument doc;
  std::vector<Concept> parts;
  for (std::size_t i = 0; i < disjunctions; ++i) {
    parts.push_back(Concept::disjunction(
        {Concept::atomic("A" + std::to_string(i)), Concept::atomic("B" + std::to_string(i))}));
  }
  Concept some = Concept::atomic("X");
  Concept all = Concept::negation(Concept::atomic("X"));
  for (std::size_t d = 0; d < std::max<std::size_t>(depth, 1); ++d) {
    some = Concept::exists("R", some);
    all = Concept::forall("R", all);
  }
  parts.push_back(some);
  parts.push_back(all);
  doc.axioms.push_back(Axiom::declaration(EntityType::Class, "Bomb"));
  doc.axioms.push_back(Axiom::sub_class_of(Concept::atomic("Bomb"), Concept::conjunction(std::move(parts))));
  return doc;
}

PlantedDataset planted_dataset(std::size_t rows, std::uint64_t seed, double flip) {
  namespace fi = feature_index;
  std::mt19937_64 rng(seed);
  // count features all scale with one per-row size, as real ones scale with
  // ontology size; the jitter keeps columns from being exact copies
  std::lognormal_distribution<double> size(3.0, 1.0);
  std::lognormal_distribution<double> scale(0.0, 1.0);
  std::lognormal_distribution<double> jitter(0.0, 0.2);
  std::gamma_distribution<double> share(1.0, 1.0);
  std::bernoulli_distribution flipper(flip);
  std::array<double, kFeatureCount> column_scale{};
  for (double& v : column_scale) v = scale(rng);
  PlantedDataset d;
  d.X.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(kFeatureCount));
  d.informative = {fi::kRatioLeqForall, fi::kRatioGeqExists, fi::kRatioOr, fi::kRatioAnd};
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    const double n = size(rng);
    for (std::size_t c = 0; c < kFeatureCount; ++c) {
      d.X(row, static_cast<Eigen::Index>(c)) = std::floor(n * column_scale[c] * jitter(rng));
    }
    double g[4];
    double total = 0;
    for (double& v : g) total += v = share(rng);
    for (std::size_t k = 0; k < 4; ++k) d.X(row, static_cast<Eigen::Index>(d.informative[k])) = g[k] / total;
    const bool good = (g[2] + g[3]) / total < 0.5;
    d.y.push_back((good != flipper(rng)) ? 1 : 0);
  }
  return d;
}

}  // namespace ordo::synthetic
