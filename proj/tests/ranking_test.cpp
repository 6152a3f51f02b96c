#include <gtest/gtest.h>

#include <algorithm>

#include "ddl/generator.hpp"
#include "ddl/ranking.hpp"
#include "support.hpp"

namespace ddl {
namespace {

using test::atom;
using test::neg;

DefeasibleAxiom typ(const Concept& c, const Concept& d) { return DefeasibleAxiom(c, d); }

Concept material(const Concept& c, const Concept& d) {
  return simplify(nnf(Concept::disjunction({neg(c), d})));
}

class CatRanking : public ::testing::Test {
 protected:
  void SetUp() override {
    kb = test::load_fixture("exA.kb");
    rkb = compute_ranking(reasoner, kb);
  }
  Reasoner reasoner;
  KnowledgeBase kb;
  RankedKB rkb;
};

TEST_F(CatRanking, Materialization) {
  const std::set<Concept> expected{material(atom("Feline"), atom("Agile")),
                                   material(atom("Feline"), atom("Docile")),
                                   material(atom("BigFeline"), neg(atom("Docile")))};
  EXPECT_EQ(materialize(kb.dbox), expected);
}

TEST(Materialize, EmptyAndTop) {
  EXPECT_TRUE(materialize({}).empty());
  EXPECT_EQ(materialized_conjunction({}), Concept::top());
  EXPECT_EQ(materialize({typ(Concept::top(), atom("C"))}), std::set<Concept>{atom("C")});
}

TEST_F(CatRanking, BigFelineIsExceptional) {
  EXPECT_EQ(exceptional(reasoner, Theory(kb.tbox_axioms()), kb.dbox),
            DefeasibleSet{typ(atom("BigFeline"), neg(atom("Docile")))});
}

TEST(Exceptional, EmptyDBox) {
  Reasoner r;
  EXPECT_TRUE(exceptional(r, Theory({Axiom::inclusion(atom("A"), atom("B"))}), {}).empty());
}

// (¬A ⊔ B) ⊓ (¬A ⊔ ¬B) entails ¬A, so both antecedents are exceptional.
TEST(Exceptional, ContradictoryPair) {
  Reasoner r;
  const DefeasibleSet d{typ(atom("A"), atom("B")), typ(atom("A"), neg(atom("B")))};
  EXPECT_EQ(exceptional(r, Theory(), d), d);
  EXPECT_TRUE(tableau::entails(Theory(), materialized_conjunction(d), neg(atom("A"))));
}

TEST_F(CatRanking, Ranks) {
  EXPECT_EQ(rkb.rank.at(typ(atom("Feline"), atom("Agile"))), 0u);
  EXPECT_EQ(rkb.rank.at(typ(atom("Feline"), atom("Docile"))), 0u);
  EXPECT_EQ(rkb.rank.at(typ(atom("BigFeline"), neg(atom("Docile")))), 1u);
  EXPECT_EQ(rkb.tbox_star, kb.tbox);
  EXPECT_TRUE(rkb.promoted.empty());
}

TEST_F(CatRanking, ConceptRanks) {
  EXPECT_EQ(rank_of_concept(reasoner, rkb, atom("Cat")), Rank(0));
  EXPECT_EQ(rank_of_concept(reasoner, rkb, atom("Feline")), Rank(0));
  EXPECT_EQ(rank_of_concept(reasoner, rkb, atom("Tiger")), Rank(1));
  EXPECT_EQ(rank_of_concept(reasoner, rkb, Concept::conjunction({atom("Feline"), atom("Big")})), Rank(1));
  EXPECT_EQ(rank_of_concept(reasoner, rkb, Concept::bottom()), Rank::infinite());
}

TEST_F(CatRanking, Entailments) {
  auto rc = [&](const Concept& c, const Concept& d) { return rational_closure_entails(reasoner, rkb, c, d); };
  EXPECT_TRUE(rc(atom("Cat"), atom("Docile")));
  EXPECT_TRUE(rc(atom("Cat"), atom("Agile")));
  EXPECT_TRUE(rc(atom("Cat"), neg(atom("Big"))));
  EXPECT_TRUE(rc(atom("Tiger"), neg(atom("Docile"))));
  EXPECT_TRUE(rc(atom("Cat"), neg(atom("Tiger"))));
  EXPECT_FALSE(rc(atom("Tiger"), atom("Docile")));
  // Tigers are exceptional felines and inherit none of the rank-0 defaults.
  EXPECT_FALSE(rc(atom("Tiger"), atom("Agile")));
  EXPECT_FALSE(rc(atom("Feline"), atom("Cat")));
}

TEST_F(CatRanking, KnowledgeBaseOverload) {
  EXPECT_TRUE(rational_closure_entails(reasoner, kb, typ(atom("Cat"), atom("Docile"))));
  EXPECT_TRUE(rational_closure_entails(reasoner, kb, typ(atom("Cat"), atom("Cat"))));
}

TEST(BirdRanking, TwoLevels) {
  Reasoner r;
  const RankedKB rkb = compute_ranking(r, test::load_fixture("exB.kb"));
  EXPECT_EQ(rkb.axioms_of_rank(0),
            (DefeasibleSet{typ(atom("B"), atom("F")), typ(atom("B"), atom("Preyins")), typ(atom("B"), atom("W"))}));
  EXPECT_EQ(rkb.axioms_of_rank(1),
            (DefeasibleSet{typ(atom("P"), neg(atom("F"))), typ(atom("P"), atom("Preyfish"))}));
  EXPECT_TRUE(rkb.axioms_of_rank(2).empty());
  ASSERT_EQ(rkb.exceptionality_seq.size(), 2u);
  EXPECT_EQ(rkb.exceptionality_seq[0].size(), 5u);
  EXPECT_EQ(rkb.exceptionality_seq[1].size(), 2u);
}

TEST(Ranking, EmptyDBox) {
  Reasoner r;
  const KnowledgeBase kb = test::load_fixture("example2.kb");
  const RankedKB rkb = compute_ranking(r, kb);
  EXPECT_EQ(rkb.tbox_star, kb.tbox);
  EXPECT_TRUE(rkb.dbox_star.empty());
  EXPECT_TRUE(rkb.rank.empty());
  EXPECT_TRUE(rkb.exceptionality_seq.empty());
}

TEST(Ranking, InfiniteRankIsPromoted) {
  Reasoner r;
  const KnowledgeBase kb = KnowledgeBase::from_axioms({}, {}, {typ(atom("A"), atom("B")), typ(atom("A"), neg(atom("B")))});
  const RankedKB rkb = compute_ranking(r, kb);
  EXPECT_TRUE(rkb.dbox_star.empty());
  EXPECT_EQ(rkb.tbox_star, (std::set<Axiom>{Axiom::inclusion(atom("A"), atom("B")),
                                            Axiom::inclusion(atom("A"), neg(atom("B")))}));
  EXPECT_EQ(rkb.promoted.size(), 2u);
  EXPECT_EQ(rank_of_concept(r, rkb, atom("A")), Rank::infinite());
  EXPECT_TRUE(rational_closure_entails(r, rkb, atom("A"), atom("C")));
}

TEST(Ranking, PromotionKeepsFiniteRanksBelow) {
  // A is contradictory by default, so A's axioms are promoted; B keeps rank 0.
  Reasoner r;
  const KnowledgeBase kb = KnowledgeBase::from_axioms(
      {}, {}, {typ(atom("A"), atom("C")), typ(atom("A"), neg(atom("C"))), typ(atom("B"), atom("C"))});
  const RankedKB rkb = compute_ranking(r, kb);
  EXPECT_EQ(rkb.dbox_star, DefeasibleSet{typ(atom("B"), atom("C"))});
  EXPECT_EQ(rkb.rank.at(typ(atom("B"), atom("C"))), 0u);
  EXPECT_TRUE(rational_closure_entails(r, rkb, atom("B"), atom("C")));
  EXPECT_TRUE(rational_closure_entails(r, rkb, atom("B"), neg(atom("A"))));
}

// Structural invariants and the rank/closure relationships on generated
// knowledge bases.
class GeneratedRanking : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GeneratedRanking, Invariants) {
  Reasoner r;
  const KnowledgeBase kb = random_kb(GetParam());
  const RankedKB rkb = compute_ranking(r, kb);

  EXPECT_TRUE(std::includes(rkb.tbox_star.begin(), rkb.tbox_star.end(), kb.tbox.begin(), kb.tbox.end()));
  for (const auto& p : rkb.promoted) {
    EXPECT_TRUE(rkb.tbox_star.count(p.strict()));
    EXPECT_FALSE(rkb.dbox_star.count(p));
  }
  if (!rkb.dbox_star.empty()) {
    ASSERT_FALSE(rkb.exceptionality_seq.empty());
    EXPECT_EQ(rkb.exceptionality_seq.front(), rkb.dbox_star);
  }
  for (std::size_t i = 1; i < rkb.exceptionality_seq.size(); ++i) {
    const auto& outer = rkb.exceptionality_seq[i - 1];
    const auto& inner = rkb.exceptionality_seq[i];
    EXPECT_TRUE(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
    EXPECT_LT(inner.size(), outer.size());
  }
  EXPECT_LE(rkb.exceptionality_seq.size(), kb.dbox.size() + 1);
  EXPECT_EQ(rkb.rank.size(), rkb.dbox_star.size());

  for (const auto& [axiom, k] : rkb.rank) {
    std::size_t deepest = 0;
    for (std::size_t j = 0; j < rkb.exceptionality_seq.size(); ++j) {
      if (rkb.exceptionality_seq[j].count(axiom)) deepest = j;
    }
    EXPECT_EQ(k, deepest) << axiom.str();
    EXPECT_EQ(rank_of_concept(r, rkb, axiom.antecedent()), Rank(k)) << axiom.str();
  }

  // Reordering the input does not change the result.
  std::vector<DefeasibleAxiom> reversed(kb.dbox.rbegin(), kb.dbox.rend());
  std::vector<Axiom> tbox(kb.tbox.rbegin(), kb.tbox.rend());
  Reasoner fresh;
  const RankedKB again = compute_ranking(fresh, KnowledgeBase::from_axioms(tbox, {}, reversed));
  EXPECT_EQ(again.rank, rkb.rank);
  EXPECT_EQ(again.exceptionality_seq, rkb.exceptionality_seq);
}

TEST_P(GeneratedRanking, QueryCharacterization) {
  Reasoner r;
  const KnowledgeBase kb = random_kb(GetParam());
  const RankedKB rkb = compute_ranking(r, kb);
  std::vector<Concept> pool;
  for (const auto& n : kb.signature.concepts) {
    pool.push_back(atom(n));
    pool.push_back(neg(atom(n)));
  }
  for (const auto& c : pool) {
    const Rank rc = rank_of_concept(r, rkb, c);
    for (const auto& d : pool) {
      const bool closure = rational_closure_entails(r, rkb, c, d);
      if (rc.is_infinite()) {
        // C is classically empty, so every inclusion holds for it.
        EXPECT_TRUE(closure);
        continue;
      }
      const Rank rcd = rank_of_concept(r, rkb, Concept::conjunction({c, negated_nnf(d)}));
      EXPECT_EQ(closure, rc < rcd) << c.str() << " ~[= " << d.str() << "\n" << serialize_kb(kb);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GeneratedRanking, ::testing::Range<std::uint64_t>(1, 81));

}  // namespace
}  // namespace ddl
