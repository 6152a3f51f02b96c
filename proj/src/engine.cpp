#include "ddl/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ddl/error.hpp"

namespace ddl {

namespace {

using Binding = std::map<std::string, std::string>;

void collect_variables(const std::vector<Term>& terms, std::vector<std::string>& out) {
  for (const auto& t : terms) {
    if (t.is_variable() && std::find(out.begin(), out.end(), t.name) == out.end()) {
      out.push_back(t.name);
    }
  }
}

void collect_constants(const std::vector<Term>& terms, std::set<std::string>& out) {
  for (const auto& t : terms) {
    if (!t.is_variable()) out.insert(t.name);
  }
}

std::vector<Term> substitute(const std::vector<Term>& terms, const Binding& b) {
  std::vector<Term> out;
  for (const auto& t : terms) {
    out.push_back(t.is_variable() ? Term::constant(b.at(t.name)) : t);
  }
  return out;
}

BodyItem substitute(const BodyItem& item, const Binding& b) {
  if (const auto* l = std::get_if<Literal>(&item)) {
    return Literal{l->negated, l->predicate, substitute(l->args, b)};
  }
  DlAtom a = std::get<DlAtom>(item);
  a.terms = substitute(a.terms, b);
  return a;
}

template <typename F>
void for_each_item(const DlRule& r, F&& f) {
  for (const auto& b : r.positive) f(b);
  for (const auto& b : r.negative) f(b);
}

void record_arity(std::map<std::string, std::size_t>& arity, const std::string& p, std::size_t n) {
  const auto [it, fresh] = arity.emplace(p, n);
  if (!fresh && it->second != n) {
    throw Error("predicate '" + p + "' used with arities " + std::to_string(it->second) + " and " +
                std::to_string(n));
  }
}

void product(const std::vector<std::string>& universe, std::size_t n,
             std::vector<std::string>& prefix, const std::function<void()>& emit) {
  if (prefix.size() == n) {
    emit();
    return;
  }
  for (const auto& c : universe) {
    prefix.push_back(c);
    product(universe, n, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

GroundProgram ground(const DlProgram& program) {
  GroundProgram g;
  g.lambda = program.lambda;
  g.universe = program.constants;
  std::map<std::string, std::size_t> arity;
  for (const auto& u : program.lambda) record_arity(arity, u.predicate, u.arity());
  for (const auto& r : program.rules) {
    collect_constants(r.head.args, g.universe);
    record_arity(arity, r.head.predicate, r.head.args.size());
    for_each_item(r, [&](const BodyItem& b) {
      if (const auto* l = std::get_if<Literal>(&b)) {
        collect_constants(l->args, g.universe);
        record_arity(arity, l->predicate, l->args.size());
      } else {
        const auto& a = std::get<DlAtom>(b);
        collect_constants(a.terms, g.universe);
        for (const auto& u : a.updates) record_arity(arity, u.predicate, u.arity());
      }
    });
  }

  const std::vector<std::string> hu(g.universe.begin(), g.universe.end());
  for (const auto& r : program.rules) {
    std::vector<std::string> vars;
    collect_variables(r.head.args, vars);
    for_each_item(r, [&](const BodyItem& b) {
      if (const auto* l = std::get_if<Literal>(&b)) {
        collect_variables(l->args, vars);
      } else {
        collect_variables(std::get<DlAtom>(b).terms, vars);
      }
    });
    if (!vars.empty() && hu.empty()) {
      throw Error("cannot ground rule '" + r.str() + "': the Herbrand universe is empty");
    }
    std::vector<std::string> values;
    product(hu, vars.size(), values, [&] {
      Binding b;
      for (std::size_t i = 0; i < vars.size(); ++i) b[vars[i]] = values[i];
      DlRule inst{Literal{r.head.negated, r.head.predicate, substitute(r.head.args, b)},
                  {},
                  {},
                  r.provenance};
      for (const auto& x : r.positive) inst.positive.push_back(substitute(x, b));
      for (const auto& x : r.negative) inst.negative.push_back(substitute(x, b));
      g.rules.push_back(std::move(inst));
    });
  }

  for (const auto& [p, n] : arity) {
    std::vector<std::string> args;
    product(hu, n, args, [&] {
      std::vector<Term> ts;
      for (const auto& a : args) ts.push_back(Term::constant(a));
      g.base.insert(Literal{false, p, ts});
      g.base.insert(Literal{true, p, ts});
    });
  }
  return g;
}

GroundProgram gelfond_lifschitz(const GroundProgram& program, const Interpretation& interp) {
  GroundProgram out = program;
  out.rules.clear();
  for (const auto& r : program.rules) {
    if (r.has_dl_atoms()) {
      throw Error("rule '" + r.str() + "' contains a dl-atom; use the strong dl-transform");
    }
    const bool blocked = std::any_of(r.negative.begin(), r.negative.end(), [&](const BodyItem& b) {
      return interp.count(std::get<Literal>(b)) > 0;
    });
    if (blocked) continue;
    DlRule kept = r;
    kept.negative.clear();
    out.rules.push_back(std::move(kept));
  }
  return out;
}

bool InterpretationOrder::operator()(const Interpretation& a, const Interpretation& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LiteralOrder{});
}

std::vector<Axiom> Engine::updates_from(const Interpretation& interp,
                                        const std::vector<UpdateSpec>& updates) {
  std::vector<Axiom> out;
  for (const auto& u : updates) {
    for (const auto& l : interp) {
      if (l.predicate != u.predicate || l.negated != u.negated_predicate ||
          l.args.size() != u.arity()) {
        continue;
      }
      const Concept subject = Concept::nominal(l.args[0].name);
      if (const auto* c = std::get_if<Concept>(&u.dl_side)) {
        out.push_back(Axiom::inclusion(subject, *c));
      } else {
        out.push_back(Axiom::inclusion(
            subject, Concept::exists(std::get<Role>(u.dl_side), Concept::nominal(l.args[1].name))));
      }
    }
  }
  return out;
}

bool Engine::eval_dl_atom(const Interpretation& interp, const DlAtom& atom) {
  if (!atom.is_ground()) throw Error("dl-atom " + atom.str() + " is not ground");

  std::string key = atom.str();
  key += '\x1f';
  for (const auto& l : interp) {
    const bool relevant = std::any_of(atom.updates.begin(), atom.updates.end(), [&](const UpdateSpec& u) {
      return u.predicate == l.predicate && u.negated_predicate == l.negated;
    });
    if (relevant) key += l.str() + ";";
  }
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.dl_atom_cache_hits;
      return it->second;
    }
  }

  const Theory augmented = base_.with(updates_from(interp, atom.updates));
  const Concept subject = Concept::nominal(atom.terms.at(0).name);
  Concept goal;
  if (const auto* c = std::get_if<Concept>(&atom.query)) {
    goal = *c;
  } else {
    goal = Concept::exists(std::get<Role>(atom.query), Concept::nominal(atom.terms.at(1).name));
  }
  const bool result = reasoner_.entails(augmented, subject, goal);

  std::lock_guard lock(memo_mutex_);
  ++stats_.dl_atom_evaluations;
  memo_.emplace(std::move(key), result);
  return result;
}

bool Engine::holds(const Interpretation& interp, const BodyItem& item) {
  if (const auto* l = std::get_if<Literal>(&item)) return interp.count(*l) > 0;
  return eval_dl_atom(interp, std::get<DlAtom>(item));
}

GroundProgram Engine::strong_dl_transform(const GroundProgram& program,
                                          const Interpretation& interp) {
  GroundProgram out = program;
  out.rules.clear();
  for (const auto& r : program.rules) {
    const bool blocked = std::any_of(r.negative.begin(), r.negative.end(),
                                     [&](const BodyItem& b) { return holds(interp, b); });
    if (blocked) continue;
    DlRule kept = r;
    kept.negative.clear();
    out.rules.push_back(std::move(kept));
  }
  return out;
}

Interpretation Engine::fixpoint(const std::vector<const DlRule*>& rules) {
  Interpretation m;
  std::vector<bool> fired(rules.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (fired[i]) continue;
      const DlRule& r = *rules[i];
      const bool body = std::all_of(r.positive.begin(), r.positive.end(),
                                    [&](const BodyItem& b) { return holds(m, b); });
      if (!body) continue;
      fired[i] = true;
      if (m.insert(r.head).second) changed = true;
    }
  }
  return m;
}

std::optional<Interpretation> Engine::least_model(const GroundProgram& positive) {
  std::vector<const DlRule*> rules;
  for (const auto& r : positive.rules) {
    if (!r.is_positive()) throw Error("least model requested for a rule with NAF: " + r.str());
    rules.push_back(&r);
  }
  Interpretation m = fixpoint(rules);
  if (!is_consistent(m)) return std::nullopt;
  return m;
}

bool Engine::is_strong_answer_set(const GroundProgram& program, const Interpretation& interp) {
  if (!is_consistent(interp)) return false;
  if (!std::all_of(interp.begin(), interp.end(),
                   [&](const Literal& l) { return program.base.count(l) > 0; })) {
    return false;
  }
  const auto m = least_model(strong_dl_transform(program, interp));
  return m && *m == interp;
}

bool Engine::is_model(const GroundProgram& program, const Interpretation& interp) {
  for (const auto& r : program.rules) {
    const bool pos = std::all_of(r.positive.begin(), r.positive.end(),
                                 [&](const BodyItem& b) { return holds(interp, b); });
    const bool neg = std::none_of(r.negative.begin(), r.negative.end(),
                                  [&](const BodyItem& b) { return holds(interp, b); });
    if (pos && neg && !interp.count(r.head)) return false;
  }
  return true;
}

// Branches over the truth of the NAF conditions. For a partial assignment,
// rules with every NAF condition assigned false surely apply and rules with
// none assigned true may apply, so any answer set agreeing with the
// assignment lies between the two least models; both bounds are monotone in
// the interpretation, which forces the value of further conditions.
void Engine::search(const GroundProgram& program,
                    const std::vector<std::vector<std::size_t>>& naf_of_rule,
                    const std::vector<BodyItem>& naf_items, std::vector<signed char> assignment,
                    std::set<Interpretation, InterpretationOrder>& found) {
  {
    std::lock_guard lock(memo_mutex_);
    ++stats_.search_nodes;
  }
  Interpretation low;
  for (bool changed = true; changed;) {
    changed = false;
    // Literal conditions decided true belong to any answer set below this
    // node, and those decided false head no rule such an answer set uses.
    std::vector<DlRule> assumed;
    std::set<Literal, LiteralOrder> excluded;
    for (std::size_t j = 0; j < naf_items.size(); ++j) {
      const auto* l = std::get_if<Literal>(&naf_items[j]);
      if (!l || assignment[j] == -1) continue;
      if (assignment[j] == 1) {
        assumed.push_back(DlRule{*l, {}, {}, {}});
      } else {
        excluded.insert(*l);
      }
    }
    std::vector<const DlRule*> sure, possible;
    for (const auto& r : assumed) sure.push_back(&r);
    for (std::size_t i = 0; i < program.rules.size(); ++i) {
      const auto& items = naf_of_rule[i];
      const bool any_true = std::any_of(items.begin(), items.end(),
                                        [&](std::size_t j) { return assignment[j] == 1; });
      const bool all_false = std::all_of(items.begin(), items.end(),
                                         [&](std::size_t j) { return assignment[j] == 0; });
      if (all_false) sure.push_back(&program.rules[i]);
      if (!any_true) possible.push_back(&program.rules[i]);
    }
    low = fixpoint(sure);
    if (!is_consistent(low)) return;
    // Such an answer set is consistent, so it never derives a complement of
    // a member of low.
    std::erase_if(possible, [&](const DlRule* r) {
      return excluded.count(r->head) > 0 || low.count(r->head.complement()) > 0;
    });
    const Interpretation up = fixpoint(possible);
    for (std::size_t j = 0; j < naf_items.size(); ++j) {
      if (holds(low, naf_items[j])) {
        if (assignment[j] == 0) return;
        if (assignment[j] == -1) assignment[j] = 1, changed = true;
      } else if (!holds(up, naf_items[j])) {
        if (assignment[j] == 1) return;
        if (assignment[j] == -1) assignment[j] = 0, changed = true;
      }
    }
  }

  // Literal conditions first: deciding them prunes the upper bound.
  std::size_t open = assignment.size();
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    if (assignment[j] != -1) continue;
    if (open == assignment.size()) open = j;
    if (std::holds_alternative<Literal>(naf_items[j])) {
      open = j;
      break;
    }
  }
  if (open == assignment.size()) {
    std::vector<const DlRule*> applied;
    for (std::size_t i = 0; i < program.rules.size(); ++i) {
      if (std::all_of(naf_of_rule[i].begin(), naf_of_rule[i].end(),
                      [&](std::size_t j) { return assignment[j] == 0; })) {
        applied.push_back(&program.rules[i]);
      }
    }
    const Interpretation candidate = fixpoint(applied);
    for (std::size_t j = 0; j < naf_items.size(); ++j) {
      if (holds(candidate, naf_items[j]) != (assignment[j] == 1)) return;
    }
    if (is_strong_answer_set(program, candidate)) found.insert(candidate);
    return;
  }
  for (const signed char value : {1, 0}) {
    auto next = assignment;
    next[open] = value;
    search(program, naf_of_rule, naf_items, std::move(next), found);
  }
}

std::vector<Interpretation> Engine::strong_answer_sets(const GroundProgram& program) {
  std::vector<BodyItem> naf_items;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> naf_of_rule;
  for (const auto& r : program.rules) {
    std::vector<std::size_t> ids;
    for (const auto& b : r.negative) {
      const auto [it, fresh] = index.emplace(to_string(b), naf_items.size());
      if (fresh) naf_items.push_back(b);
      ids.push_back(it->second);
    }
    naf_of_rule.push_back(std::move(ids));
  }
  std::set<Interpretation, InterpretationOrder> found;
  search(program, naf_of_rule, naf_items, std::vector<signed char>(naf_items.size(), -1), found);
  return {found.begin(), found.end()};
}

Consequence Engine::consequence(const DlProgram& program, const Literal& literal,
                                ConsequenceMode mode) {
  const auto sets = strong_answer_sets(ground(program));
  if (sets.empty()) return Consequence::NoAnswerSet;
  auto has = [&](const Interpretation& i) { return i.count(literal) > 0; };
  const bool yes = mode == ConsequenceMode::Cautious ? std::all_of(sets.begin(), sets.end(), has)
                                                     : std::any_of(sets.begin(), sets.end(), has);
  return yes ? Consequence::Holds : Consequence::Fails;
}

bool Engine::entails_under_answer_set(const GroundProgram& program,
                                      const Interpretation& answer_set, const Concept& c,
                                      const std::string& individual) {
  for (const auto& l : answer_set) {
    if (!program.base.count(l)) {
      throw Error("literal " + l.str() + " does not belong to the program's Herbrand base");
    }
  }
  const Theory augmented = base_.with(updates_from(answer_set, program.lambda));
  return reasoner_.entails(augmented, Concept::nominal(individual), c);
}

Engine::Stats Engine::stats() const {
  std::lock_guard lock(memo_mutex_);
  return stats_;
}

}  // namespace ddl
