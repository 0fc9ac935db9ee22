#include <gtest/gtest.h>

#include <random>

#include "model_oracle.hpp"
#include "ordo/concept.hpp"
#include "ordo/knowledge_base.hpp"

using namespace ordo;

namespace {

Concept A() { return Concept::atomic("A"); }
Concept B() { return Concept::atomic("B"); }

Concept random_concept(std::mt19937& rng, int depth) {
  const int top = depth <= 0 ? 3 : 11;
  switch (std::uniform_int_distribution<int>(0, top)(rng)) {
    case 0: return A();
    case 1: return B();
    case 2: return rng() % 2 ? Concept::top() : Concept::bottom();
    case 3: return Concept::negation(rng() % 2 ? A() : B());
    case 4: return Concept::negation(random_concept(rng, depth - 1));
    case 5: return Concept::conjunction({random_concept(rng, depth - 1), random_concept(rng, depth - 1)});
    case 6: return Concept::disjunction({random_concept(rng, depth - 1), random_concept(rng, depth - 1)});
    case 7: return Concept::exists("R", random_concept(rng, depth - 1));
    case 8: return Concept::forall("R", random_concept(rng, depth - 1));
    case 9: return Concept::at_least(rng() % 3, "R", random_concept(rng, depth - 1));
    case 10: return Concept::at_most(rng() % 3, "R", random_concept(rng, depth - 1));
    default: return Concept::negation(Concept::conjunction({random_concept(rng, depth - 1), A()}));
  }
}

}  // namespace

TEST(Concept, FactoriesRejectBadInput) {
  EXPECT_THROW(Concept::atomic(""), std::invalid_argument);
  EXPECT_THROW(Concept::exists("", A()), std::invalid_argument);
  EXPECT_THROW(Concept::conjunction({A()}), std::invalid_argument);
  EXPECT_THROW(Concept::disjunction({}), std::invalid_argument);
}

TEST(Concept, StructuralEquality) {
  EXPECT_EQ(Concept::exists("R", A()), Concept::exists("R", A()));
  EXPECT_NE(Concept::exists("R", A()), Concept::forall("R", A()));
  EXPECT_NE(Concept::at_least(1, "R", A()), Concept::at_least(2, "R", A()));
  EXPECT_EQ(ConceptHash{}(Concept::conjunction({A(), B()})), ConceptHash{}(Concept::conjunction({A(), B()})));
}

TEST(Negate, SpecExamples) {
  EXPECT_EQ(negate(A()), Concept::negation(A()));
  EXPECT_EQ(negate(Concept::negation(A())), A());
  EXPECT_EQ(negate(Concept::top()), Concept::bottom());
  EXPECT_EQ(negate(Concept::bottom()), Concept::top());
}

TEST(Nnf, SpecExamples) {
  EXPECT_EQ(nnf(negate(Concept::conjunction({A(), B()}))), Concept::disjunction({negate(A()), negate(B())}));
  EXPECT_EQ(nnf(negate(Concept::exists("R", A()))), Concept::forall("R", negate(A())));
  EXPECT_EQ(nnf(negate(Concept::at_least(2, "R", A()))), Concept::at_most(1, "R", A()));
  EXPECT_EQ(nnf(negate(Concept::at_most(1, "R", A()))), Concept::at_least(2, "R", A()));
  EXPECT_EQ(nnf(negate(Concept::at_least(0, "R", A()))), Concept::bottom());
  EXPECT_EQ(nnf(Concept::at_least(0, "R", A())), Concept::top());
}

TEST(Nnf, FlattensNestedJunctions) {
  const Concept nested = Concept::conjunction({A(), Concept::conjunction({B(), Concept::atomic("C")})});
  const Concept flat = nnf(nested);
  ASSERT_EQ(flat.kind(), ConceptKind::And);
  EXPECT_EQ(flat.operands().size(), 3u);
}

TEST(Nnf, IdempotentAndInNnf) {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Concept c = random_concept(rng, 4);
    const Concept n = nnf(c);
    EXPECT_TRUE(n.is_nnf()) << to_string(c);
    EXPECT_EQ(nnf(n), n) << to_string(c);
  }
}

TEST(Nnf, PreservesSemantics) {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 300) {
    const Concept c = random_concept(rng, 3);
    if (modal_depth(c) > 2) continue;
    EXPECT_EQ(oracle::satisfiable(c), oracle::satisfiable(nnf(c))) << to_string(c);
    // also the complement, which exercises the ≤/≥ duality
    EXPECT_EQ(oracle::satisfiable(negate(c)), oracle::satisfiable(nnf(negate(c)))) << to_string(c);
    ++checked;
  }
}

TEST(Conjoin, FlattensAndCollapses) {
  EXPECT_EQ(conjoin({}), Concept::top());
  EXPECT_EQ(disjoin({}), Concept::bottom());
  EXPECT_EQ(conjoin({A()}), A());
  const Concept c = conjoin({A(), conjoin({B(), Concept::atomic("C")})});
  EXPECT_EQ(c.operands().size(), 3u);
}

TEST(Signature, SpecExamples) {
  EXPECT_EQ(signature_of(Concept::exists("R", A())), (Signature{{"A"}, {"R"}, {}}));
  EXPECT_EQ(signature_of(Concept::top()), Signature{});
  EXPECT_EQ(signature_of(Concept::conjunction({Concept::nominal("o"), A()})), (Signature{{"A"}, {}, {"o"}}));
}

TEST(Concept, SizeDepthAndPrinting) {
  const Concept c = Concept::conjunction({A(), Concept::exists("R", Concept::forall("S", B()))});
  EXPECT_EQ(concept_size(c), 5u);
  EXPECT_EQ(modal_depth(c), 2u);
  EXPECT_EQ(to_string(Concept::exists("R", A())), "∃R.A");
  EXPECT_TRUE(Concept::disjunction({Concept::nominal("a"), Concept::nominal("b")}).is_enumeration());
  EXPECT_FALSE(Concept::disjunction({Concept::nominal("a"), A()}).is_enumeration());
}

TEST(Internalize, SpecExamples) {
  const std::vector<Axiom> sub{Axiom::sub_class_of(A(), B())};
  EXPECT_EQ(internalize_tbox(KnowledgeBase::from_axioms(sub)), Concept::disjunction({negate(A()), B()}));

  const std::vector<Axiom> eq{Axiom::equivalent_classes({A(), B()})};
  EXPECT_EQ(internalize_tbox(KnowledgeBase::from_axioms(eq)),
            Concept::conjunction({Concept::disjunction({negate(A()), B()}), Concept::disjunction({negate(B()), A()})}));

  const std::vector<Axiom> dis{Axiom::disjoint_classes({A(), B()})};
  EXPECT_EQ(internalize_tbox(KnowledgeBase::from_axioms(dis)), Concept::disjunction({negate(A()), negate(B())}));

  EXPECT_EQ(internalize_tbox(KnowledgeBase{}), Concept::top());
}

TEST(Internalize, DomainRangeAndFunctional) {
  const std::vector<Axiom> axioms{Axiom::domain("R", A()), Axiom::range("R", B()),
                                  Axiom::property_characteristic(AxiomKind::FunctionalObjectProperty, "R")};
  const Concept m = internalize_tbox(KnowledgeBase::from_axioms(axioms));
  ASSERT_EQ(m.kind(), ConceptKind::And);
  const auto ops = m.operands();
  EXPECT_NE(std::find(ops.begin(), ops.end(), Concept::disjunction({Concept::forall("R", Concept::bottom()), A()})),
            ops.end());
  EXPECT_NE(std::find(ops.begin(), ops.end(), Concept::forall("R", B())), ops.end());
  EXPECT_NE(std::find(ops.begin(), ops.end(), Concept::at_most(1, "R", Concept::top())), ops.end());
}

TEST(Internalize, RejectsAssertionsInTbox) {
  KnowledgeBase kb;
  kb.tbox.push_back(Axiom::class_assertion(A(), "a"));
  EXPECT_THROW(internalize_tbox(kb), UnsupportedAxiom);
}

TEST(KnowledgeBase, PartitionsAndCollectsSignature) {
  const std::vector<Axiom> axioms{
      Axiom::sub_class_of(A(), Concept::exists("R", B())),
      Axiom::property_characteristic(AxiomKind::TransitiveObjectProperty, "S"),
      Axiom::class_assertion(A(), "a"),
      Axiom::object_property_assertion("R", "a", "b"),
      Axiom::declaration(EntityType::Class, "C"),
  };
  const auto kb = KnowledgeBase::from_axioms(axioms);
  EXPECT_EQ(kb.tbox.size(), 1u);
  EXPECT_EQ(kb.rbox.size(), 1u);
  EXPECT_EQ(kb.abox.size(), 2u);
  EXPECT_EQ(kb.logical_axiom_count(), 4u);
  EXPECT_EQ(kb.classes, (std::set<std::string>{"A", "B", "C"}));
  EXPECT_EQ(kb.roles, (std::set<std::string>{"R", "S"}));
  EXPECT_EQ(kb.individuals, (std::set<std::string>{"a", "b"}));
}
