#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "ddl/concept.hpp"

namespace ddl {

enum class RoleProperty { Trans, Fun, Ref, Irr, Sym, Asy };

const char* to_string(RoleProperty p);

enum class AxiomKind { ConceptInclusion, ConceptEquality, RoleInclusion, RoleProperty, RoleDisjointness };

/// A strict TBox or RBox axiom.
class Axiom {
 public:
  static Axiom inclusion(Concept lhs, Concept rhs);
  static Axiom equality(Concept lhs, Concept rhs);
  static Axiom role_inclusion(Role lhs, Role rhs);
  static Axiom role_property(RoleProperty property, Role role);
  static Axiom role_disjointness(Role first, Role second);

  AxiomKind kind() const { return kind_; }
  bool is_concept_axiom() const {
    return kind_ == AxiomKind::ConceptInclusion || kind_ == AxiomKind::ConceptEquality;
  }

  const Concept& lhs() const { return lhs_; }
  const Concept& rhs() const { return rhs_; }
  const Role& role_lhs() const { return roles_.at(0); }
  const Role& role_rhs() const { return roles_.at(1); }
  const Role& role() const { return roles_.at(0); }
  RoleProperty property() const { return property_; }

  /// Body of the axiom as it appears after `tbox:` / `rbox:`, without the
  /// trailing period.
  std::string str() const;
  /// Full source line, e.g. `tbox: Cat [= Feline.`
  const std::string& line() const { return line_; }

  friend bool operator==(const Axiom& a, const Axiom& b) { return a.line_ == b.line_; }
  friend std::strong_ordering operator<=>(const Axiom& a, const Axiom& b) {
    return a.line_ <=> b.line_;
  }

 private:
  Axiom() = default;
  void finish();

  AxiomKind kind_ = AxiomKind::ConceptInclusion;
  Concept lhs_;
  Concept rhs_;
  std::vector<Role> roles_;
  RoleProperty property_ = RoleProperty::Trans;
  std::string line_;
};

/// Expands concept equalities into the pair of inclusions C ⊑ D, D ⊑ C, which
/// is the same theory as ⊤ ⊑ (¬C ⊔ D) ⊓ (¬D ⊔ C). Other axioms pass through.
std::vector<Axiom> expand_equalities(const std::vector<Axiom>& axioms);

/// Defeasible inclusion C ~⊑ D ("typically, Cs are Ds"). Both sides are atoms,
/// negated atoms, ⊤ or ⊥.
class DefeasibleAxiom {
 public:
  DefeasibleAxiom(Concept antecedent, Concept consequent);

  const Concept& antecedent() const { return antecedent_; }
  const Concept& consequent() const { return consequent_; }

  /// The strict counterpart C ⊑ D.
  Axiom strict() const { return Axiom::inclusion(antecedent_, consequent_); }

  std::string str() const;
  std::string line() const { return "dbox: " + str() + "."; }

  friend bool operator==(const DefeasibleAxiom& a, const DefeasibleAxiom& b) {
    return a.antecedent_ == b.antecedent_ && a.consequent_ == b.consequent_;
  }
  friend std::strong_ordering operator<=>(const DefeasibleAxiom& a, const DefeasibleAxiom& b) {
    if (auto c = a.antecedent_ <=> b.antecedent_; c != 0) return c;
    return a.consequent_ <=> b.consequent_;
  }

 private:
  Concept antecedent_;
  Concept consequent_;
};

struct ConceptAssertion {
  Concept concept_;
  std::string individual;
};

struct RoleAssertion {
  Role role;
  std::string subject;
  std::string object;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;

/// C(a) ↦ {a} ⊑ C and R(a,b) ↦ {a} ⊑ ∃R.{b}.
Axiom abox_to_tbox(const Assertion& assertion);

void collect_signature(const Axiom& a, Signature& into);
void collect_signature(const DefeasibleAxiom& d, Signature& into);

}  // namespace ddl
