#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ddl {

enum class RoleKind { Named, Inverse, Universal, Chain };

/// A role expression: a role name, the inverse of a name, the universal
/// role, or a composition chain (the latter only on the left of a role
/// inclusion).
class Role {
 public:
  static Role named(std::string name);
  static Role inverse_of(std::string name);
  static Role universal();
  static Role chain(std::vector<Role> links);

  /// R⁻ for named roles, R for R⁻. Throws for universal and chain roles.
  Role inverse() const;

  RoleKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Role>& links() const { return links_; }

  std::string str() const;

  friend bool operator==(const Role& a, const Role& b) { return a.str() == b.str(); }
  friend std::strong_ordering operator<=>(const Role& a, const Role& b) {
    return a.str() <=> b.str();
  }

 private:
  Role(RoleKind kind, std::string name, std::vector<Role> links)
      : kind_(kind), name_(std::move(name)), links_(std::move(links)) {}

  RoleKind kind_ = RoleKind::Named;
  std::string name_;
  std::vector<Role> links_;
};

enum class ConceptKind {
  Top,
  Bottom,
  Atom,
  Nominals,
  Not,
  And,
  Or,
  Exists,
  Forall,
  AtLeast,
  AtMost,
  Self,
};

/// Immutable concept description. Copies share structure; equality and
/// ordering are structural and go through the canonical text form, which is
/// computed once per node.
class Concept {
 public:
  Concept();  // ⊤

  static Concept top();
  static Concept bottom();
  static Concept atom(std::string name);
  static Concept nominals(std::vector<std::string> individuals);
  static Concept nominal(std::string individual) { return nominals({std::move(individual)}); }
  static Concept negation(Concept c);
  static Concept conjunction(std::vector<Concept> children);
  static Concept disjunction(std::vector<Concept> children);
  static Concept exists(Role role, Concept filler);
  static Concept forall(Role role, Concept filler);
  static Concept at_least(std::size_t n, Role role, Concept filler);
  static Concept at_most(std::size_t n, Role role, Concept filler);
  static Concept self(Role role);

  ConceptKind kind() const;
  const std::string& name() const;                     // Atom
  const std::vector<std::string>& individuals() const;  // Nominals, sorted
  const std::vector<Concept>& children() const;        // Not (1), And/Or (>= 2), restrictions (1)
  const Concept& child() const;                        // first child
  const Role& role() const;                            // restrictions and Self
  std::size_t cardinality() const;                     // AtLeast/AtMost

  bool is(ConceptKind k) const { return kind() == k; }

  /// Canonical surface syntax, e.g. `!A | exists R . {a, b}`.
  const std::string& str() const;

  friend bool operator==(const Concept& a, const Concept& b) {
    return a.node_ == b.node_ || a.str() == b.str();
  }
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
    return a.str() <=> b.str();
  }

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Concept make(Node node);

  std::shared_ptr<const Node> node_;
};

/// ⊓ of the given concepts; ⊤ for none, the concept itself for one.
Concept conjunction_of(std::vector<Concept> cs);
/// ⊔ of the given concepts; ⊥ for none, the concept itself for one.
Concept disjunction_of(std::vector<Concept> cs);

/// Negation normal form: pushes ¬ down to atoms, nominals and Self, removing
/// double negations.
Concept nnf(const Concept& c);

/// nnf(¬c).
inline Concept negated_nnf(const Concept& c) { return nnf(Concept::negation(c)); }

/// Flattens nested ⊓/⊔, drops neutral ⊤/⊥ operands, collapses absorbing ones,
/// and sorts/deduplicates operands. Expects NNF input (other nodes are left as is).
Concept simplify(const Concept& c);

/// Atom, ¬Atom, ⊤ or ⊥: the shapes allowed on either side of a defeasible axiom.
bool is_literal_concept(const Concept& c);

/// True if the concept uses only ALCO constructors with named roles.
bool in_alco(const Concept& c);

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  void merge(const Signature& other);
  bool operator==(const Signature&) const = default;
};

void collect_signature(const Concept& c, Signature& into);
void collect_signature(const Role& r, Signature& into);

}  // namespace ddl

template <>
struct std::hash<ddl::Concept> {
  std::size_t operator()(const ddl::Concept& c) const noexcept {
    return std::hash<std::string>{}(c.str());
  }
};
