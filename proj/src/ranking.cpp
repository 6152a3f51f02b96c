#include "ddl/ranking.hpp"

#include <algorithm>

namespace ddl {

namespace {

Theory strict_theory(const std::set<Axiom>& tbox, const std::set<Axiom>& rbox) {
  return Theory({tbox.begin(), tbox.end()}, {rbox.begin(), rbox.end()});
}

}  // namespace

DefeasibleSet RankedKB::axioms_of_rank(std::size_t k) const {
  DefeasibleSet out;
  for (const auto& [axiom, r] : rank) {
    if (r == k) out.insert(axiom);
  }
  return out;
}

std::set<Concept> materialize(const DefeasibleSet& dbox) {
  std::set<Concept> out;
  for (const auto& d : dbox) {
    out.insert(simplify(nnf(Concept::disjunction({Concept::negation(d.antecedent()), d.consequent()}))));
  }
  return out;
}

Concept materialized_conjunction(const DefeasibleSet& dbox) {
  const auto m = materialize(dbox);
  return simplify(conjunction_of({m.begin(), m.end()}));
}

DefeasibleSet exceptional(Reasoner& reasoner, const Theory& strict, const DefeasibleSet& dbox) {
  DefeasibleSet out;
  if (dbox.empty()) return out;
  const Concept conj = materialized_conjunction(dbox);
  for (const auto& d : dbox) {
    if (reasoner.entails(strict, conj, Concept::negation(d.antecedent()))) out.insert(d);
  }
  return out;
}

RankedKB compute_ranking(Reasoner& reasoner, const KnowledgeBase& kb) {
  RankedKB out;
  out.signature = kb.signature;
  out.tbox_star = kb.tbox;
  out.rbox = kb.rbox;
  out.dbox_star = kb.dbox;

  std::vector<DefeasibleSet> seq;
  for (;;) {
    const Theory strict = strict_theory(out.tbox_star, out.rbox);
    seq.assign({out.dbox_star});
    seq.push_back(exceptional(reasoner, strict, seq[0]));
    std::size_t i = 0;
    while (seq[i + 1] != seq[i]) {
      ++i;
      seq.push_back(exceptional(reasoner, strict, seq[i]));
    }
    const DefeasibleSet infinite = seq[i];
    if (infinite.empty()) {
      seq.resize(i);  // (E_0, ..., E_{i-1})
      break;
    }
    for (const auto& d : infinite) {
      out.tbox_star.insert(d.strict());
      out.dbox_star.erase(d);
      out.promoted.insert(d);
    }
  }

  out.exceptionality_seq = std::move(seq);
  for (std::size_t j = 0; j < out.exceptionality_seq.size(); ++j) {
    for (const auto& d : out.exceptionality_seq[j]) out.rank[d] = j;
  }
  out.strict = strict_theory(out.tbox_star, out.rbox);
  return out;
}

Rank rank_of_concept(Reasoner& reasoner, const RankedKB& rkb, const Concept& c) {
  const Concept not_c = Concept::negation(c);
  const std::size_t tail = rkb.exceptionality_seq.size();
  for (std::size_t j = 0; j < tail; ++j) {
    if (!reasoner.entails(rkb.strict, materialized_conjunction(rkb.exceptionality_seq[j]), not_c)) {
      return Rank(j);
    }
  }
  if (!reasoner.entails(rkb.strict, Concept::top(), not_c)) return Rank(tail);
  return Rank::infinite();
}

bool rational_closure_entails(Reasoner& reasoner, const RankedKB& rkb, const Concept& c,
                              const Concept& d) {
  const auto& seq = rkb.exceptionality_seq;
  auto premise = [&](std::size_t i) {
    return simplify(conjunction_of({materialized_conjunction(seq[i]), c}));
  };
  // The bound is tested first so that E_{n+1} is never touched.
  std::size_t i = 0;
  while (i < seq.size() && reasoner.entails(rkb.strict, premise(i), Concept::bottom())) ++i;
  if (i < seq.size()) return reasoner.entails(rkb.strict, premise(i), d);
  return reasoner.entails(rkb.strict, c, d);
}

}  // namespace ddl
