#include "ddl/axiom.hpp"

#include <stdexcept>

namespace ddl {

const char* to_string(RoleProperty p) {
  switch (p) {
    case RoleProperty::Trans:
      return "trans";
    case RoleProperty::Fun:
      return "fun";
    case RoleProperty::Ref:
      return "ref";
    case RoleProperty::Irr:
      return "irr";
    case RoleProperty::Sym:
      return "sym";
    case RoleProperty::Asy:
      return "asy";
  }
  return "?";
}

namespace {

void check_simple_role(const Role& r) {
  if (r.kind() == RoleKind::Chain) throw std::invalid_argument("role chain not allowed here");
}

}  // namespace

void Axiom::finish() { line_ = (is_concept_axiom() ? "tbox: " : "rbox: ") + str() + "."; }

Axiom Axiom::inclusion(Concept lhs, Concept rhs) {
  Axiom a;
  a.kind_ = AxiomKind::ConceptInclusion;
  a.lhs_ = std::move(lhs);
  a.rhs_ = std::move(rhs);
  a.finish();
  return a;
}

Axiom Axiom::equality(Concept lhs, Concept rhs) {
  Axiom a;
  a.kind_ = AxiomKind::ConceptEquality;
  a.lhs_ = std::move(lhs);
  a.rhs_ = std::move(rhs);
  a.finish();
  return a;
}

Axiom Axiom::role_inclusion(Role lhs, Role rhs) {
  check_simple_role(rhs);
  Axiom a;
  a.kind_ = AxiomKind::RoleInclusion;
  a.roles_ = {std::move(lhs), std::move(rhs)};
  a.finish();
  return a;
}

Axiom Axiom::role_property(RoleProperty property, Role role) {
  check_simple_role(role);
  Axiom a;
  a.kind_ = AxiomKind::RoleProperty;
  a.property_ = property;
  a.roles_ = {std::move(role)};
  a.finish();
  return a;
}

Axiom Axiom::role_disjointness(Role first, Role second) {
  check_simple_role(first);
  check_simple_role(second);
  Axiom a;
  a.kind_ = AxiomKind::RoleDisjointness;
  a.roles_ = {std::move(first), std::move(second)};
  a.finish();
  return a;
}

std::string Axiom::str() const {
  switch (kind_) {
    case AxiomKind::ConceptInclusion:
      return lhs_.str() + " [= " + rhs_.str();
    case AxiomKind::ConceptEquality:
      return lhs_.str() + " == " + rhs_.str();
    case AxiomKind::RoleInclusion:
      return roles_[0].str() + " [= " + roles_[1].str();
    case AxiomKind::RoleProperty:
      return std::string(to_string(property_)) + "(" + roles_[0].str() + ")";
    case AxiomKind::RoleDisjointness:
      return "disjoint(" + roles_[0].str() + ", " + roles_[1].str() + ")";
  }
  return {};
}

std::vector<Axiom> expand_equalities(const std::vector<Axiom>& axioms) {
  std::vector<Axiom> out;
  out.reserve(axioms.size());
  for (const auto& a : axioms) {
    if (a.kind() == AxiomKind::ConceptEquality) {
      out.push_back(Axiom::inclusion(a.lhs(), a.rhs()));
      out.push_back(Axiom::inclusion(a.rhs(), a.lhs()));
    } else {
      out.push_back(a);
    }
  }
  return out;
}

DefeasibleAxiom::DefeasibleAxiom(Concept antecedent, Concept consequent)
    : antecedent_(std::move(antecedent)), consequent_(std::move(consequent)) {
  if (!is_literal_concept(antecedent_) || !is_literal_concept(consequent_)) {
    throw std::invalid_argument("defeasible axiom sides must be (negated) atoms, TOP or BOT: " +
                                str());
  }
}

std::string DefeasibleAxiom::str() const {
  return antecedent_.str() + " ~[= " + consequent_.str();
}

Axiom abox_to_tbox(const Assertion& assertion) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&assertion)) {
    return Axiom::inclusion(Concept::nominal(ca->individual), ca->concept_);
  }
  const auto& ra = std::get<RoleAssertion>(assertion);
  if (ra.role.kind() != RoleKind::Named && ra.role.kind() != RoleKind::Inverse) {
    throw std::invalid_argument("role assertion needs a named role, got " + ra.role.str());
  }
  return Axiom::inclusion(Concept::nominal(ra.subject),
                          Concept::exists(ra.role, Concept::nominal(ra.object)));
}

void collect_signature(const Axiom& a, Signature& into) {
  if (a.is_concept_axiom()) {
    collect_signature(a.lhs(), into);
    collect_signature(a.rhs(), into);
    return;
  }
  collect_signature(a.role_lhs(), into);
  if (a.kind() != AxiomKind::RoleProperty) collect_signature(a.role_rhs(), into);
}

void collect_signature(const DefeasibleAxiom& d, Signature& into) {
  collect_signature(d.antecedent(), into);
  collect_signature(d.consequent(), into);
}

}  // namespace ddl
