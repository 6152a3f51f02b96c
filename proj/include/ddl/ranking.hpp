#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ddl/axiom.hpp"
#include "ddl/knowledge_base.hpp"
#include "ddl/oracle.hpp"
#include "ddl/tableau.hpp"

namespace ddl {

/// A rank: a natural number or infinity. Infinity compares above every
/// finite rank.
class Rank {
 public:
  constexpr explicit Rank(std::size_t v) : v_(v) {}
  static constexpr Rank infinite() { return Rank(kInfinite); }

  constexpr bool is_infinite() const { return v_ == kInfinite; }
  /// The finite value; only meaningful when !is_infinite().
  constexpr std::size_t value() const { return v_; }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

  constexpr auto operator<=>(const Rank&) const = default;

 private:
  static constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
  std::size_t v_;
};

using DefeasibleSet = std::set<DefeasibleAxiom>;

/// Output of the ranking procedure: ⟨T*, R, D*⟩ and the exceptionality
/// sequence E_0 ⊇ E_1 ⊇ … ⊇ E_n of its last round.
struct RankedKB {
  Signature signature;
  std::set<Axiom> tbox_star;
  std::set<Axiom> rbox;
  DefeasibleSet dbox_star;
  std::map<DefeasibleAxiom, std::size_t> rank;
  std::vector<DefeasibleSet> exceptionality_seq;
  /// Axioms of infinite rank, now strict members of tbox_star.
  DefeasibleSet promoted;
  /// T* ∪ R, prepared once for the reasoner.
  Theory strict;

  /// D_k: the axioms of rank exactly k.
  DefeasibleSet axioms_of_rank(std::size_t k) const;
  /// n, the index of the last exceptionality set; only meaningful when the
  /// sequence is non-empty.
  std::size_t top_index() const { return exceptionality_seq.size() - 1; }
};

/// {¬C ⊔ D | C ~⊑ D ∈ dbox}, each in simplified negation normal form.
std::set<Concept> materialize(const DefeasibleSet& dbox);

/// ⊓ of the materialisation; ⊤ for the empty set.
Concept materialized_conjunction(const DefeasibleSet& dbox);

/// The axioms whose antecedent C satisfies T ∪ R ⊨ ⊓D̄ ⊑ ¬C.
DefeasibleSet exceptional(Reasoner& reasoner, const Theory& strict, const DefeasibleSet& dbox);

RankedKB compute_ranking(Reasoner& reasoner, const KnowledgeBase& kb);

/// Smallest j with T* ∪ R ⊭ ⊓Ē_j ⊑ ¬c, trying the empty tail (⊤) after E_n.
Rank rank_of_concept(Reasoner& reasoner, const RankedKB& rkb, const Concept& c);

/// Whether c ~⊑ d is in the rational closure of the ranked knowledge base.
bool rational_closure_entails(Reasoner& reasoner, const RankedKB& rkb, const Concept& c,
                              const Concept& d);

inline bool rational_closure_entails(Reasoner& reasoner, const KnowledgeBase& kb,
                                     const DefeasibleAxiom& query) {
  return rational_closure_entails(reasoner, compute_ranking(reasoner, kb), query.antecedent(),
                                  query.consequent());
}

}  // namespace ddl
