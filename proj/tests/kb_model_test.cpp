#include <gtest/gtest.h>

#include "ddl/axiom.hpp"
#include "ddl/error.hpp"
#include "ddl/generator.hpp"
#include "ddl/parser.hpp"
#include "ddl/tableau.hpp"
#include "random_concepts.hpp"
#include "support.hpp"

namespace ddl {
namespace {

using test::atom;
using test::neg;

TEST(ParseKb, BirdExampleSizes) {
  const KnowledgeBase kb = test::load_fixture("exB.kb");
  EXPECT_EQ(kb.tbox.size(), 6u);
  EXPECT_EQ(kb.dbox.size(), 5u);
  EXPECT_TRUE(kb.rbox.empty());
  EXPECT_EQ(kb.signature.individuals, (std::set<std::string>{"a", "b"}));
  EXPECT_TRUE(kb.tbox.count(Axiom::inclusion(Concept::nominal("a"), atom("B"))));
  EXPECT_TRUE(kb.dbox.count(DefeasibleAxiom(atom("P"), neg(atom("F")))));
}

TEST(ParseKb, PreyinsDefinitionGroupsQuantifiersUnderConjunction) {
  const KnowledgeBase kb = test::load_fixture("exB.kb");
  const Concept expected = Concept::conjunction(
      {Concept::forall(Role::named("Prey"), atom("I")),
       Concept::exists(Role::named("Prey"), Concept::top())});
  EXPECT_TRUE(kb.tbox.count(Axiom::equality(atom("Preyins"), expected)));
}

TEST(ParseKb, DeclarationsOnly) {
  const KnowledgeBase kb = parse_kb("concept A, B.\nrole R.\nindividual a.\n");
  EXPECT_TRUE(kb.tbox.empty());
  EXPECT_TRUE(kb.rbox.empty());
  EXPECT_TRUE(kb.dbox.empty());
  EXPECT_EQ(kb.signature.concepts.size(), 2u);
}

TEST(ParseKb, ComplexDefeasibleSideIsMalformed) {
  try {
    parse_kb("concept A, B, C.\ndbox: (A & B) ~[= C.\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::MalformedDefeasible);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseKb, UnknownOperatorIsSyntaxError) {
  try {
    parse_kb("concept A, B, C.\ndbox: A ~<= C.\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseKb, UndeclaredNameReportsPosition) {
  try {
    parse_kb("concept A.\n\ntbox: A [= Bird.\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::UndeclaredName);
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 12u);
  }
}

TEST(ParseKb, RoleAxiomsAndAssertions) {
  const KnowledgeBase kb = parse_kb(
      "concept C.\nrole R, S, T.\nindividual a, b.\n"
      "rbox: R o S [= T.\nrbox: trans(R).\nrbox: disjoint(R, S).\n"
      "abox: C(a).\nabox: R(a, b).\n");
  EXPECT_EQ(kb.rbox.size(), 3u);
  EXPECT_TRUE(kb.tbox.count(Axiom::inclusion(Concept::nominal("a"), atom("C"))));
  EXPECT_TRUE(kb.tbox.count(Axiom::inclusion(
      Concept::nominal("a"), Concept::exists(Role::named("R"), Concept::nominal("b")))));
}

TEST(ParseKb, RoundTripOnFixtures) {
  for (const char* name : {"exA.kb", "exB.kb", "two_answer_sets.kb", "example2.kb"}) {
    const KnowledgeBase kb = test::load_fixture(name);
    EXPECT_EQ(parse_kb(serialize_kb(kb)), kb) << name;
  }
}

TEST(ParseKb, RoundTripOnGeneratedKnowledgeBases) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const KnowledgeBase kb = random_kb(seed);
    const std::string text = serialize_kb(kb);
    EXPECT_EQ(parse_kb(text), kb) << text;
    EXPECT_EQ(serialize_kb(parse_kb(text)), text);
  }
}

TEST(ParseKb, RoundTripOnRandomConcepts) {
  Signature sig;
  sig.concepts = {"A", "B", "C"};
  sig.roles = {"R", "S"};
  sig.individuals = {"a", "b"};
  test::ConceptSampler sample(7);
  for (int i = 0; i < 300; ++i) {
    KnowledgeBase kb;
    kb.signature = sig;
    for (const auto& a : sample.tbox(3, 3)) kb.add(a);
    kb.add(Axiom::equality(atom("A"), sample.draw(2)));
    kb.add(DefeasibleAxiom(atom("B"), neg(atom("C"))));
    kb.add(Axiom::role_inclusion(Role::chain({Role::named("R"), Role::named("S")}), Role::named("R")));
    kb.add(Axiom::inclusion(Concept::at_least(2, Role::inverse_of("R"), atom("A")),
                            Concept::self(Role::named("S"))));
    EXPECT_EQ(parse_kb(serialize_kb(kb)), kb) << serialize_kb(kb);
  }
}

TEST(Role, InverseOfInverseIsNamed) {
  const Role r = Role::named("R");
  EXPECT_EQ(r.inverse().inverse(), r);
  EXPECT_EQ(r.inverse().kind(), RoleKind::Inverse);
}

TEST(Nnf, DoubleNegationCollapses) { EXPECT_EQ(nnf(neg(neg(atom("F")))), atom("F")); }

TEST(Nnf, AtomIsFixedPoint) { EXPECT_EQ(nnf(atom("A")), atom("A")); }

TEST(Nnf, PushesNegationThroughConjunctionAndExists) {
  const Role r = Role::named("R");
  const Concept in = neg(Concept::conjunction({atom("A"), Concept::exists(r, atom("B"))}));
  const Concept expected = Concept::disjunction({neg(atom("A")), Concept::forall(r, neg(atom("B")))});
  EXPECT_EQ(nnf(in), expected);
  const Theory empty;
  EXPECT_TRUE(tableau::entails(empty, in, expected));
  EXPECT_TRUE(tableau::entails(empty, expected, in));
}

bool negation_only_above_leaves(const Concept& c) {
  if (c.is(ConceptKind::Not)) {
    const auto k = c.child().kind();
    return k == ConceptKind::Atom || k == ConceptKind::Nominals || k == ConceptKind::Self;
  }
  for (const auto& ch : c.children()) {
    if (!negation_only_above_leaves(ch)) return false;
  }
  return true;
}

TEST(Nnf, IdempotentAndNormalOnRandomConcepts) {
  test::ConceptSampler sample(11);
  for (int i = 0; i < 500; ++i) {
    const Concept c = sample.draw(4);
    const Concept n = nnf(c);
    EXPECT_EQ(nnf(n), n) << c.str();
    EXPECT_TRUE(negation_only_above_leaves(n)) << n.str();
  }
}

TEST(Nnf, PreservesSatisfiabilityUnderRandomTBoxes) {
  test::ConceptSampler sample(13);
  for (int i = 0; i < 150; ++i) {
    const Theory t(sample.tbox(sample.below(3), 2));
    const Concept c = sample.draw(3);
    EXPECT_EQ(tableau::is_satisfiable(t, c), tableau::is_satisfiable(t, nnf(c))) << c.str();
  }
}

TEST(AboxToTbox, ConceptAssertion) {
  EXPECT_EQ(abox_to_tbox(ConceptAssertion{atom("Cat"), "a"}),
            Axiom::inclusion(Concept::nominal("a"), atom("Cat")));
}

TEST(AboxToTbox, RoleAssertion) {
  EXPECT_EQ(abox_to_tbox(RoleAssertion{Role::named("Prey"), "a", "b"}),
            Axiom::inclusion(Concept::nominal("a"),
                             Concept::exists(Role::named("Prey"), Concept::nominal("b"))));
}

TEST(AboxToTbox, TopAssertion) {
  EXPECT_EQ(abox_to_tbox(ConceptAssertion{Concept::top(), "a"}),
            Axiom::inclusion(Concept::nominal("a"), Concept::top()));
}

TEST(AboxToTbox, RejectsUniversalRole) {
  EXPECT_THROW(abox_to_tbox(RoleAssertion{Role::universal(), "a", "b"}), std::exception);
}

TEST(Signature, DefeasibleSidesMustBeLiterals) {
  EXPECT_THROW(DefeasibleAxiom(Concept::conjunction({atom("A"), atom("B")}), atom("C")),
               std::exception);
  EXPECT_NO_THROW(DefeasibleAxiom(Concept::top(), atom("C")));
  EXPECT_NO_THROW(DefeasibleAxiom(atom("A"), Concept::bottom()));
}

}  // namespace
}  // namespace ddl
