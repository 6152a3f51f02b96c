#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ddl/program.hpp"
#include "ddl/ranking.hpp"

namespace ddl {

/// Program predicate for a concept name: the name with its initial lowercased
/// (Male ↦ male).
std::string predicate_name(const std::string& concept_name);

/// Program literal p(X) or ¬p(X) for a (negated) concept name.
Literal literal_for(const Concept& c, const std::vector<Term>& args);

/// Antecedents of the axioms of rank k.
std::set<Concept> antecedents_by_rank(const RankedKB& rkb, std::size_t k);

/// Consequents of D*.
std::set<Concept> consequents(const RankedKB& rkb);

/// E ⊎ e, ¬E ⊎ ¬e for every concept name E among the consequents, by name.
std::vector<UpdateSpec> build_lambda(const RankedKB& rkb);

/// Compiles D* into dl-rules. For each axiom C ~⊑ D of rank k, a rule
///   d(X) :- DL[λ; C](X), not DL[λ; ⊔ antecedents of rank > k](X), not -d(X).
/// (the middle literal dropped when nothing ranks higher) and a rule
///   -d(X) :- DL[λ; ¬D](X).
/// Then, for each antecedent C of rank ≥ 1, -c(X) :- not DL[λ; C](X).
/// Axioms with consequent ⊤ carry no information and yield no rules.
DlProgram compile(const RankedKB& rkb);

}  // namespace ddl
