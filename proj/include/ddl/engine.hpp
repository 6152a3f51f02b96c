#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddl/knowledge_base.hpp"
#include "ddl/oracle.hpp"
#include "ddl/program.hpp"
#include "ddl/tableau.hpp"

namespace ddl {

struct GroundProgram {
  std::vector<DlRule> rules;
  std::set<std::string> universe;  // HU_P
  Interpretation base;             // HB_P, closed under complement
  std::vector<UpdateSpec> lambda;  // carried over for printing
};

/// Instantiates every rule over HU_P (program constants plus constants in
/// the rules). Throws ddl::Error when a rule has variables and HU_P is empty,
/// or a predicate is used with two arities.
GroundProgram ground(const DlProgram& program);

/// P^I for a ground normal program. Throws ddl::Error if a rule carries a
/// dl-atom; use Engine::strong_dl_transform for those.
GroundProgram gelfond_lifschitz(const GroundProgram& program, const Interpretation& interp);

/// Orders answer sets lexicographically by canonical literal order.
struct InterpretationOrder {
  bool operator()(const Interpretation& a, const Interpretation& b) const;
};

enum class ConsequenceMode { Cautious, Brave };
enum class Consequence { Holds, Fails, NoAnswerSet };

/// Evaluates dl-programs ⟨L, P⟩ against a fixed DL base L. Dl-atom verdicts
/// are memoized on the λ-relevant part of the interpretation.
class Engine {
 public:
  Engine(Reasoner& reasoner, Theory base) : reasoner_(reasoner), base_(std::move(base)) {}
  Engine(Reasoner& reasoner, const KnowledgeBase& kb)
      : Engine(reasoner, Theory(kb.tbox_axioms(), kb.rbox_axioms())) {}

  const Theory& base() const { return base_; }

  /// I ⊨_L DL[λ; Q](c): L ∪ {S(e) | p(e) ∈ I} ⊨ Q(c).
  bool eval_dl_atom(const Interpretation& interp, const DlAtom& atom);
  /// I ⊨_L l for a ground literal or dl-atom.
  bool holds(const Interpretation& interp, const BodyItem& item);

  /// sP^I_L: drops every rule with a satisfied B⁻ member, then all of B⁻.
  GroundProgram strong_dl_transform(const GroundProgram& program, const Interpretation& interp);

  /// Least fixpoint of a positive program; nullopt if it is inconsistent.
  std::optional<Interpretation> least_model(const GroundProgram& positive);

  bool is_strong_answer_set(const GroundProgram& program, const Interpretation& interp);
  /// I ⊨_L r for every ground rule r.
  bool is_model(const GroundProgram& program, const Interpretation& interp);

  /// All strong answer sets, sorted.
  std::vector<Interpretation> strong_answer_sets(const GroundProgram& program);
  std::vector<Interpretation> strong_answer_sets(const DlProgram& program) {
    return strong_answer_sets(ground(program));
  }

  /// Cautious or brave consequence of a ground literal. A literal outside
  /// HB_P belongs to no answer set.
  Consequence consequence(const DlProgram& program, const Literal& literal, ConsequenceMode mode);

  /// ⟨L, P⟩ ⊨_{P^I} C(a): L augmented through λ with the literals of I
  /// entails C(a). Literals whose predicate has no λ entry add nothing.
  bool entails_under_answer_set(const DlProgram& program, const Interpretation& answer_set,
                                const Concept& c, const std::string& individual) {
    return entails_under_answer_set(ground(program), answer_set, c, individual);
  }
  bool entails_under_answer_set(const GroundProgram& program, const Interpretation& answer_set,
                                const Concept& c, const std::string& individual);

  /// The DL axioms contributed by I through the given update list.
  static std::vector<Axiom> updates_from(const Interpretation& interp,
                                         const std::vector<UpdateSpec>& updates);

  struct Stats {
    std::size_t dl_atom_evaluations = 0;
    std::size_t dl_atom_cache_hits = 0;
    std::size_t search_nodes = 0;
  };
  Stats stats() const;

 private:
  Interpretation fixpoint(const std::vector<const DlRule*>& rules);
  void search(const GroundProgram& program, const std::vector<std::vector<std::size_t>>& naf_of_rule,
              const std::vector<BodyItem>& naf_items, std::vector<signed char> assignment,
              std::set<Interpretation, InterpretationOrder>& found);

  Reasoner& reasoner_;
  Theory base_;
  mutable std::mutex memo_mutex_;
  std::unordered_map<std::string, bool> memo_;
  Stats stats_;
};

}  // namespace ddl
