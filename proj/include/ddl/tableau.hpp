#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ddl/axiom.hpp"
#include "ddl/concept.hpp"

namespace ddl {

/// An immutable strict theory T ∪ R, prepared for the tableau: equalities
/// expanded, axioms in negation normal form, axioms with a concept name or a
/// single nominal on the left kept aside for lazy unfolding.
class Theory {
 public:
  Theory() : Theory(std::vector<Axiom>{}, std::vector<Axiom>{}) {}
  explicit Theory(std::vector<Axiom> tbox, std::vector<Axiom> rbox = {});

  /// This theory plus the given concept axioms.
  Theory with(const std::vector<Axiom>& extra) const;

  const std::vector<Axiom>& tbox() const { return tbox_; }
  const std::vector<Axiom>& rbox() const { return rbox_; }

  /// Canonical text of the theory; equal theories have equal keys.
  const std::string& key() const { return key_; }

  /// True if every axiom lies in ALCO and the RBox is empty.
  bool in_alco() const { return in_alco_; }

  struct Unfolding {
    Concept trigger;  // atom or single nominal
    Concept implied;  // NNF
  };
  const std::vector<Unfolding>& unfoldings() const { return unfoldings_; }
  const std::vector<Concept>& global_constraints() const { return globals_; }

 private:
  std::vector<Axiom> tbox_;
  std::vector<Axiom> rbox_;
  std::string key_;
  bool in_alco_ = true;
  std::vector<Unfolding> unfoldings_;
  std::vector<Concept> globals_;
};

struct TableauStats {
  std::size_t steps = 0;
  std::size_t nodes = 0;
  std::size_t branches = 0;
};

struct TableauOptions {
  /// Upper bound on rule applications per call; exceeding it throws
  /// TableauLimitExceeded.
  std::size_t step_limit = 5'000'000;
};

namespace tableau {

/// True if the concept and theory lie in the internally decided fragment.
bool supports(const Theory& theory, const Concept& c);

/// Decides whether c has a non-empty extension in some model of the theory.
/// Throws UnsupportedConstruct outside ALCO.
bool is_satisfiable(const Theory& theory, const Concept& c, TableauStats* stats = nullptr,
                    const TableauOptions& options = {});

/// theory ⊨ lhs ⊑ rhs, decided as unsatisfiability of lhs ⊓ ¬rhs.
bool entails(const Theory& theory, const Concept& lhs, const Concept& rhs,
             TableauStats* stats = nullptr, const TableauOptions& options = {});

}  // namespace tableau

bool is_satisfiable(const std::vector<Axiom>& tbox, const Concept& c);
bool entails(const std::vector<Axiom>& tbox, const Concept& lhs, const Concept& rhs);

}  // namespace ddl
