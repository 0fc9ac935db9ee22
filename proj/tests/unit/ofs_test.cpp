#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "ordo/ofs.hpp"

using namespace ordo;

TEST(Parse, SpecExamples) {
  const auto d1 = parse_document("SubClassOf(A B)");
  ASSERT_EQ(d1.axioms.size(), 1u);
  EXPECT_EQ(d1.axioms[0].kind, AxiomKind::SubClassOf);

  const auto d2 = parse_document("SubClassOf(A ObjectSomeValuesFrom(R B))");
  ASSERT_EQ(d2.axioms.size(), 1u);
  EXPECT_EQ(d2.axioms[0].classes[1], Concept::exists("R", Concept::atomic("B")));

  try {
    parse_document("SubClassOf(A");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 13u);
  }
}

TEST(Parse, PrefixesOntologyBlockAndComments) {
  const auto doc = parse_document(
      "# family\n"
      "Prefix(:=<http://example.org/family#>)\n"
      "Ontology(<http://example.org/family>\n"
      "  Declaration(Class(:Person))  # trailing\n"
      "  SubClassOf(:Mother ObjectIntersectionOf(:Woman ObjectMinCardinality(1 :hasChild)))\n"
      ")\n");
  ASSERT_EQ(doc.prefixes.size(), 1u);
  EXPECT_EQ(doc.prefixes[0].prefix, ":");
  EXPECT_TRUE(doc.has_ontology_block);
  EXPECT_EQ(doc.ontology_iri, "<http://example.org/family>");
  ASSERT_EQ(doc.axioms.size(), 2u);
  EXPECT_EQ(doc.axioms[1].classes[1].operands()[1], Concept::at_least(1, ":hasChild", Concept::top()));
}

TEST(Parse, ThingNothingAndOneOf) {
  const auto doc = parse_document(
      "SubClassOf(owl:Thing ObjectUnionOf(A owl:Nothing))\n"
      "EquivalentClasses(C ObjectOneOf(a b))\n"
      "EquivalentClasses(D ObjectOneOf(c))\n");
  EXPECT_EQ(doc.axioms[0].classes[0], Concept::top());
  EXPECT_EQ(doc.axioms[0].classes[1].operands()[1], Concept::bottom());
  EXPECT_TRUE(doc.axioms[1].classes[1].is_enumeration());
  EXPECT_EQ(doc.axioms[2].classes[1], Concept::nominal("c"));
}

TEST(Parse, AllAxiomKinds) {
  const auto doc = parse_document(
      "Declaration(Class(A))\n"
      "Declaration(ObjectProperty(R))\n"
      "Declaration(DataProperty(age))\n"
      "Declaration(NamedIndividual(a))\n"
      "DisjointClasses(A B C)\n"
      "SubObjectPropertyOf(R S)\n"
      "InverseObjectProperties(R Rinv)\n"
      "ObjectPropertyDomain(R A)\n"
      "ObjectPropertyRange(R B)\n"
      "FunctionalObjectProperty(R)\n"
      "TransitiveObjectProperty(S)\n"
      "SymmetricObjectProperty(S)\n"
      "InverseFunctionalObjectProperty(R)\n"
      "ClassAssertion(A a)\n"
      "ObjectPropertyAssertion(R a b)\n"
      "DataPropertyAssertion(age a \"42\"^^xsd:integer)\n"
      "DataPropertyAssertion(name a \"Ann \\\"A\\\"\"@en)\n");
  ASSERT_EQ(doc.axioms.size(), 17u);
  EXPECT_EQ(doc.axioms[15].literal.lexical, "42");
  EXPECT_EQ(doc.axioms[15].literal.datatype, "xsd:integer");
  EXPECT_EQ(doc.axioms[16].literal.lexical, "Ann \"A\"");
  EXPECT_EQ(doc.axioms[16].literal.language, "en");
  const auto kb = doc.knowledge_base();
  EXPECT_EQ(kb.tbox.size(), 3u);
  EXPECT_EQ(kb.rbox.size(), 6u);
  EXPECT_EQ(kb.abox.size(), 4u);
}

TEST(Parse, RejectsUnknownConstructs) {
  try {
    parse_document("SubClassOf(A B)\nAnnotationAssertion(rdfs:label A \"x\")\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 1u);
    EXPECT_EQ(e.token(), "AnnotationAssertion");
  }
  EXPECT_THROW(parse_document("SubClassOf(A ObjectHasSelf(R))"), ParseError);
  EXPECT_THROW(parse_document("SubClassOf(A B C)"), ParseError);
  EXPECT_THROW(parse_document("SubClassOf(A B))"), ParseError);
  EXPECT_THROW(parse_document("EquivalentClasses(A)"), ParseError);
  EXPECT_THROW(parse_document("SubClassOf(A ObjectMinCardinality(-1 R))"), ParseError);
}

TEST(Parse, ErrorsPointInsideInput) {
  // parser totality on mutated inputs: either a document or a located ParseError
  const std::string seed =
      "Prefix(:=<http://x#>)\nSubClassOf(:A ObjectUnionOf(:B ObjectAllValuesFrom(:R :C)))\n"
      "ClassAssertion(:A :a)\nDataPropertyAssertion(:p :a \"v\"@en)\n";
  std::mt19937 rng(3);
  const std::string alphabet = "()<>\"#:=@^ \nABRab01xObjectUnionOf";
  for (int i = 0; i < 3000; ++i) {
    std::string text = seed;
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < edits; ++k) {
      const std::size_t pos = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0: text.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
        case 1: if (pos < text.size()) text.erase(pos, 1); break;
        default: if (pos < text.size()) text[pos] = alphabet[rng() % alphabet.size()]; break;
      }
    }
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      std::size_t lines = 1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
      EXPECT_GE(e.line(), 1u);
      EXPECT_LE(e.line(), lines);
      EXPECT_GE(e.column(), 1u);
    }
  }
}

TEST(Serialize, SpecExamples) {
  EXPECT_EQ(serialize_document(SourceDocument{}), "");
  const auto doc = parse_document("SubClassOf(A B)");
  EXPECT_EQ(serialize_document(doc), "SubClassOf(A B)\n");
}

TEST(Serialize, RoundTrip) {
  const std::string text =
      "Prefix(:=<http://example.org/x#>)\n"
      "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
      "Ontology(<http://example.org/x>\n"
      "SubClassOf(:A ObjectIntersectionOf(:B ObjectComplementOf(:C) ObjectMaxCardinality(2 :R :D)))\n"
      "EquivalentClasses(:E ObjectUnionOf(:F ObjectOneOf(:a :b)))\n"
      "SubClassOf(owl:Thing ObjectMinCardinality(1 :R))\n"
      "ObjectPropertyDomain(:R :A)\n"
      "ClassAssertion(ObjectSomeValuesFrom(:R owl:Nothing) :c)\n"
      "DataPropertyAssertion(:p :c \"x y\"^^xsd:string)\n"
      ")\n";
  const auto doc = parse_document(text);
  const std::string out = serialize_document(doc);
  EXPECT_EQ(out, text);
  EXPECT_EQ(parse_document(out), doc);
}

TEST(Serialize, CorpusFilesAreStable) {
  const std::filesystem::path dir = ORDO_DATA_DIR;
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.path().extension() != ".ofs") continue;
    ++files;
    const auto doc = load_document(entry.path());
    const std::string once = serialize_document(doc);
    const auto again = parse_document(once);
    EXPECT_EQ(again, doc) << entry.path();
    EXPECT_EQ(serialize_document(again), once) << entry.path();
  }
  EXPECT_GT(files, 0u);
}

TEST(ParseConcept, SingleExpression) {
  EXPECT_EQ(parse_concept("ObjectAllValuesFrom(R ObjectComplementOf(A))"),
            Concept::forall("R", Concept::negation(Concept::atomic("A"))));
  EXPECT_THROW(parse_concept("A B"), ParseError);
}
