#pragma once

#include <set>
#include <string>
#include <vector>

#include "ddl/axiom.hpp"
#include "ddl/concept.hpp"

namespace ddl {

/// A defeasible knowledge base ⟨T, R, D⟩ over a declared signature.
/// Axiom sets are kept in canonical (serialization) order.
struct KnowledgeBase {
  Signature signature;
  std::set<Axiom> tbox;
  std::set<Axiom> rbox;
  std::set<DefeasibleAxiom> dbox;

  /// Adds an axiom to the TBox or RBox depending on its kind.
  void add(const Axiom& a);
  void add(const DefeasibleAxiom& d) { dbox.insert(d); }

  /// Throws std::invalid_argument if an axiom mentions an undeclared name or
  /// a box holds an axiom of the wrong kind.
  void validate() const;

  std::vector<Axiom> tbox_axioms() const { return {tbox.begin(), tbox.end()}; }
  std::vector<Axiom> rbox_axioms() const { return {rbox.begin(), rbox.end()}; }

  /// Builds a knowledge base whose signature is exactly the names used.
  static KnowledgeBase from_axioms(const std::vector<Axiom>& tbox, const std::vector<Axiom>& rbox,
                                   const std::vector<DefeasibleAxiom>& dbox = {});

  bool operator==(const KnowledgeBase&) const = default;
};

/// Canonical text form: declarations, then one axiom per line, sorted.
std::string serialize_kb(const KnowledgeBase& kb);

}  // namespace ddl
