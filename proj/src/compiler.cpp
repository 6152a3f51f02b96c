#include "ddl/compiler.hpp"

#include <cctype>
#include <map>

#include "ddl/error.hpp"

namespace ddl {

namespace {

const Term kX = Term::variable("X");

DlAtom dl_atom(const std::vector<UpdateSpec>& lambda, const Concept& query) {
  return DlAtom{lambda, query, {kX}};
}

// Concept names that become predicates must stay distinguishable.
void check_bijection(const RankedKB& rkb) {
  std::map<std::string, std::string> seen;
  for (const auto& name : rkb.signature.concepts) {
    const auto [it, fresh] = seen.emplace(predicate_name(name), name);
    if (!fresh) {
      throw Error("concept names '" + it->second + "' and '" + name +
                  "' map to the same program predicate '" + it->first + "'");
    }
  }
}

}  // namespace

std::string predicate_name(const std::string& concept_name) {
  std::string p = concept_name;
  if (!p.empty()) p[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(p[0])));
  return p;
}

Literal literal_for(const Concept& c, const std::vector<Term>& args) {
  if (c.is(ConceptKind::Atom)) return {false, predicate_name(c.name()), args};
  if (c.is(ConceptKind::Not) && c.child().is(ConceptKind::Atom)) {
    return {true, predicate_name(c.child().name()), args};
  }
  throw Error("no program predicate for non-atomic concept " + c.str());
}

std::set<Concept> antecedents_by_rank(const RankedKB& rkb, std::size_t k) {
  std::set<Concept> out;
  for (const auto& [axiom, r] : rkb.rank) {
    if (r == k) out.insert(axiom.antecedent());
  }
  return out;
}

std::set<Concept> consequents(const RankedKB& rkb) {
  std::set<Concept> out;
  for (const auto& d : rkb.dbox_star) out.insert(d.consequent());
  return out;
}

std::vector<UpdateSpec> build_lambda(const RankedKB& rkb) {
  std::set<std::string> names;
  for (const auto& c : consequents(rkb)) {
    if (c.is(ConceptKind::Atom)) names.insert(c.name());
    if (c.is(ConceptKind::Not) && c.child().is(ConceptKind::Atom)) names.insert(c.child().name());
  }
  std::vector<UpdateSpec> lambda;
  for (const auto& n : names) {
    const Concept e = Concept::atom(n);
    lambda.push_back({e, false, predicate_name(n)});
    lambda.push_back({Concept::negation(e), true, predicate_name(n)});
  }
  return lambda;
}

DlProgram compile(const RankedKB& rkb) {
  check_bijection(rkb);
  DlProgram p;
  p.lambda = build_lambda(rkb);
  p.constants = rkb.signature.individuals;

  const std::size_t levels = rkb.exceptionality_seq.size();
  for (std::size_t k = 0; k < levels; ++k) {
    std::vector<Concept> higher;
    for (std::size_t m = k + 1; m < levels; ++m) {
      for (const auto& c : antecedents_by_rank(rkb, m)) higher.push_back(c);
    }
    for (const auto& d : rkb.axioms_of_rank(k)) {
      if (d.consequent().is(ConceptKind::Top)) continue;
      const Literal head = literal_for(d.consequent(), {kX});

      DlRule r1{head, {dl_atom(p.lambda, d.antecedent())}, {}, {1, d, std::nullopt}};
      if (!higher.empty()) r1.negative.push_back(dl_atom(p.lambda, simplify(disjunction_of(higher))));
      r1.negative.push_back(head.complement());
      p.rules.push_back(std::move(r1));

      p.rules.push_back(DlRule{head.complement(),
                               {dl_atom(p.lambda, negated_nnf(d.consequent()))},
                               {},
                               {2, d, std::nullopt}});
    }
  }

  std::set<Concept> exceptional_antecedents;
  for (std::size_t m = 1; m < levels; ++m) {
    for (const auto& c : antecedents_by_rank(rkb, m)) exceptional_antecedents.insert(c);
  }
  for (const auto& c : exceptional_antecedents) {
    if (c.is(ConceptKind::Top)) continue;
    p.rules.push_back(DlRule{literal_for(c, {kX}).complement(),
                             {},
                             {dl_atom(p.lambda, c)},
                             {3, std::nullopt, c}});
  }
  return p;
}

}  // namespace ddl
