#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ddl/axiom.hpp"
#include "ddl/concept.hpp"

namespace ddl {

/// A variable (written with an uppercase initial, e.g. X) or a constant.
struct Term {
  enum class Kind { Variable, Constant };
  Kind kind = Kind::Constant;
  std::string name;

  static Term variable(std::string n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }
  bool is_variable() const { return kind == Kind::Variable; }

  auto operator<=>(const Term&) const = default;
};

/// A classical literal p(t…) or ¬p(t…).
struct Literal {
  bool negated = false;
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  Literal complement() const { return {!negated, predicate, args}; }
  /// `p(a)` or `-p(X)`.
  std::string str() const;

  bool operator==(const Literal&) const = default;
};

/// Canonical literal order: by arguments, then predicate, then polarity
/// (positive first). Interpretations and answer sets are printed in it.
struct LiteralOrder {
  bool operator()(const Literal& a, const Literal& b) const;
};

using Interpretation = std::set<Literal, LiteralOrder>;

/// `{f(a), -p(a)}`; `{}` when empty.
std::string to_string(const Interpretation& interp);
bool is_consistent(const Interpretation& interp);

/// One λ entry S ⊎ p: the extension of the DL side grows by that of the
/// (possibly classically negated) program predicate.
struct UpdateSpec {
  std::variant<Concept, Role> dl_side;
  bool negated_predicate = false;
  std::string predicate;

  std::size_t arity() const { return std::holds_alternative<Role>(dl_side) ? 2 : 1; }
  /// `F + f`, `-F + -f`.
  std::string str() const;

  bool operator==(const UpdateSpec& o) const { return str() == o.str(); }
};

using DlQuery = std::variant<Concept, Role>;

/// DL[λ; Q](t).
struct DlAtom {
  std::vector<UpdateSpec> updates;
  DlQuery query;
  std::vector<Term> terms;

  bool is_ground() const;
  std::string query_str() const;
  /// Full text with λ spelled out inline.
  std::string str() const;

  bool operator==(const DlAtom& o) const { return str() == o.str(); }
};

using BodyItem = std::variant<Literal, DlAtom>;

std::string to_string(const BodyItem& item);

/// Where a compiled rule came from: the defeasible axiom for rules (1) and
/// (2), the antecedent for rule (3). Schema 0 marks hand-written rules.
struct Provenance {
  int schema = 0;
  std::optional<DefeasibleAxiom> axiom;
  std::optional<Concept> antecedent;
};

/// head ← B⁺, not B⁻.
struct DlRule {
  Literal head;
  std::vector<BodyItem> positive;
  std::vector<BodyItem> negative;
  Provenance provenance;

  bool is_ground() const;
  bool is_positive() const { return negative.empty(); }
  bool has_dl_atoms() const;
  std::string str() const;

  bool operator==(const DlRule& o) const { return str() == o.str(); }
};

struct DlProgram {
  std::vector<DlRule> rules;
  /// The shared update list of compiled programs; printed once as a header
  /// and referred to as `lambda` inside rules.
  std::vector<UpdateSpec> lambda;
  /// The constant vocabulary C (the individuals of the DL side).
  std::set<std::string> constants;
};

/// Program text: a `lambda = {…}` header line, then one rule per line.
/// Dl-atoms whose update list equals the program's λ print as
/// `DL[lambda; C](X)`; others spell their updates out.
std::string to_string(const DlProgram& program);

/// Text of a single rule relative to the given shared λ.
std::string rule_text(const DlRule& rule, const std::vector<UpdateSpec>& lambda);

/// Parses a ground literal such as `c(a)`, `-c(a)`, `prey(a, b)` or `p`.
/// Throws ParseError.
Literal parse_literal(std::string_view text);

}  // namespace ddl
