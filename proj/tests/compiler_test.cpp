#include <gtest/gtest.h>

#include "ddl/compiler.hpp"
#include "ddl/error.hpp"
#include "ddl/generator.hpp"
#include "support.hpp"

namespace ddl {
namespace {

using test::atom;
using test::neg;

RankedKB ranked(const std::string& fixture) {
  Reasoner r;
  return compute_ranking(r, test::load_fixture(fixture));
}

std::multiset<std::string> rule_texts(const DlProgram& p) {
  std::multiset<std::string> out;
  for (const auto& r : p.rules) out.insert(rule_text(r, p.lambda));
  return out;
}

std::set<std::string> lambda_texts(const std::vector<UpdateSpec>& lambda) {
  std::set<std::string> out;
  for (const auto& u : lambda) out.insert(u.str());
  return out;
}

TEST(AntecedentsByRank, Birds) {
  const RankedKB rkb = ranked("exB.kb");
  EXPECT_EQ(antecedents_by_rank(rkb, 0), std::set<Concept>{atom("B")});
  EXPECT_EQ(antecedents_by_rank(rkb, 1), std::set<Concept>{atom("P")});
  EXPECT_TRUE(antecedents_by_rank(rkb, 7).empty());
}

TEST(AntecedentsByRank, Cats) {
  EXPECT_EQ(antecedents_by_rank(ranked("exA.kb"), 1), std::set<Concept>{atom("BigFeline")});
}

TEST(Consequents, Birds) {
  EXPECT_EQ(consequents(ranked("exB.kb")),
            (std::set<Concept>{atom("F"), neg(atom("F")), atom("Preyins"), atom("Preyfish"), atom("W")}));
}

TEST(Consequents, CatsAndEmpty) {
  EXPECT_EQ(consequents(ranked("exA.kb")), (std::set<Concept>{atom("Agile"), atom("Docile"), neg(atom("Docile"))}));
  EXPECT_TRUE(consequents(ranked("example2.kb")).empty());
}

TEST(BuildLambda, Birds) {
  EXPECT_EQ(lambda_texts(build_lambda(ranked("exB.kb"))),
            (std::set<std::string>{"F + f", "-F + -f", "W + w", "-W + -w", "Preyins + preyins",
                                   "-Preyins + -preyins", "Preyfish + preyfish", "-Preyfish + -preyfish"}));
}

TEST(BuildLambda, CanonicalOrder) {
  std::vector<std::string> order;
  for (const auto& u : build_lambda(ranked("exB.kb"))) order.push_back(u.str());
  EXPECT_EQ(order, (std::vector<std::string>{"F + f", "-F + -f", "Preyfish + preyfish", "-Preyfish + -preyfish",
                                             "Preyins + preyins", "-Preyins + -preyins", "W + w", "-W + -w"}));
}

TEST(BuildLambda, TopAntecedentAndEmpty) {
  EXPECT_EQ(lambda_texts(build_lambda(ranked("two_answer_sets.kb"))), (std::set<std::string>{"C + c", "-C + -c"}));
  EXPECT_TRUE(build_lambda(ranked("example2.kb")).empty());
}

TEST(Compile, BirdProgram) {
  const DlProgram p = compile(ranked("exB.kb"));
  const std::multiset<std::string> expected{
      "f(X) :- DL[lambda; B](X), not DL[lambda; P](X), not -f(X).",
      "-f(X) :- DL[lambda; -F](X).",
      "preyins(X) :- DL[lambda; B](X), not DL[lambda; P](X), not -preyins(X).",
      "-preyins(X) :- DL[lambda; -Preyins](X).",
      "w(X) :- DL[lambda; B](X), not DL[lambda; P](X), not -w(X).",
      "-w(X) :- DL[lambda; -W](X).",
      "-f(X) :- DL[lambda; P](X), not f(X).",
      "f(X) :- DL[lambda; F](X).",
      "preyfish(X) :- DL[lambda; P](X), not -preyfish(X).",
      "-preyfish(X) :- DL[lambda; -Preyfish](X).",
      "-p(X) :- not DL[lambda; P](X).",
  };
  EXPECT_EQ(rule_texts(p), expected);
  EXPECT_EQ(p.constants, (std::set<std::string>{"a", "b"}));
}

TEST(Compile, BirdProgramGolden) {
  EXPECT_EQ(to_string(compile(ranked("exB.kb"))), test::read_text(test::fixture_path("golden/exB.dlp")));
}

TEST(Compile, TwoAnswerSetProgram) {
  const DlProgram p = compile(ranked("two_answer_sets.kb"));
  EXPECT_EQ(rule_texts(p), (std::multiset<std::string>{"c(X) :- DL[lambda; TOP](X), not -c(X).",
                                                        "-c(X) :- DL[lambda; -C](X)."}));
}

TEST(Compile, EmptyDBox) {
  const DlProgram p = compile(ranked("example2.kb"));
  EXPECT_TRUE(p.rules.empty());
  EXPECT_TRUE(p.lambda.empty());
  EXPECT_EQ(to_string(p), "lambda = {}\n");
}

TEST(Compile, Provenance) {
  const RankedKB rkb = ranked("exB.kb");
  for (const auto& r : compile(rkb).rules) {
    ASSERT_GE(r.provenance.schema, 1);
    ASSERT_LE(r.provenance.schema, 3);
    if (r.provenance.schema == 3) {
      ASSERT_TRUE(r.provenance.antecedent);
      EXPECT_EQ(*r.provenance.antecedent, atom("P"));
    } else {
      ASSERT_TRUE(r.provenance.axiom);
      EXPECT_TRUE(rkb.dbox_star.count(*r.provenance.axiom));
      EXPECT_EQ(r.head.predicate, predicate_name(r.provenance.axiom->consequent().is(ConceptKind::Not)
                                                     ? r.provenance.axiom->consequent().child().name()
                                                     : r.provenance.axiom->consequent().name()));
    }
  }
}

TEST(Compile, PredicateCollisionIsRejected) {
  Reasoner r;
  const KnowledgeBase kb = parse_kb("concept Cat, cat.\ndbox: Cat ~[= cat.\n");
  EXPECT_THROW(compile(compute_ranking(r, kb)), Error);
}

TEST(Compile, PredicateNames) {
  EXPECT_EQ(predicate_name("Male"), "male");
  EXPECT_EQ(predicate_name("BigFeline"), "bigFeline");
  EXPECT_EQ(literal_for(neg(atom("F")), {Term::constant("a")}).str(), "-f(a)");
}

class GeneratedCompile : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GeneratedCompile, StructuralInvariants) {
  Reasoner r;
  const KnowledgeBase kb = random_kb(GetParam());
  const RankedKB rkb = compute_ranking(r, kb);
  const DlProgram p = compile(rkb);

  std::set<Concept> exceptional;
  for (const auto& [axiom, k] : rkb.rank) {
    if (k >= 1) exceptional.insert(axiom.antecedent());
  }
  EXPECT_EQ(p.rules.size(), 2 * rkb.dbox_star.size() + exceptional.size());

  std::set<std::string> predicates;
  for (const auto& name : kb.signature.concepts) predicates.insert(predicate_name(name));
  for (const auto& rule : p.rules) {
    EXPECT_TRUE(predicates.count(rule.head.predicate)) << rule.str();
    EXPECT_FALSE(kb.signature.concepts.count(rule.head.predicate));
    for (const auto* body : {&rule.positive, &rule.negative}) {
      for (const auto& item : *body) {
        if (const auto* a = std::get_if<DlAtom>(&item)) {
          EXPECT_EQ(a->updates, p.lambda);
        }
      }
    }
  }
  EXPECT_EQ(to_string(p), to_string(compile(rkb)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, GeneratedCompile, ::testing::Range<std::uint64_t>(1, 101));

}  // namespace
}  // namespace ddl
