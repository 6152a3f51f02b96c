#include "ddl/tableau.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "ddl/error.hpp"

namespace ddl {

// ---------------------------------------------------------------------------
// Theory

namespace {

// {a, b} becomes {a} ⊔ {b} so that the tableau only sees singleton nominals.
Concept split_nominals(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Nominals: {
      if (c.individuals().size() == 1) return c;
      std::vector<Concept> ops;
      for (const auto& i : c.individuals()) ops.push_back(Concept::nominal(i));
      return Concept::disjunction(std::move(ops));
    }
    case ConceptKind::Not:
      if (c.child().is(ConceptKind::Nominals) && c.child().individuals().size() > 1) {
        std::vector<Concept> ops;
        for (const auto& i : c.child().individuals()) {
          ops.push_back(Concept::negation(Concept::nominal(i)));
        }
        return Concept::conjunction(std::move(ops));
      }
      return c;
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      for (const auto& x : c.children()) ops.push_back(split_nominals(x));
      return c.is(ConceptKind::And) ? Concept::conjunction(std::move(ops))
                                    : Concept::disjunction(std::move(ops));
    }
    case ConceptKind::Exists:
      return Concept::exists(c.role(), split_nominals(c.child()));
    case ConceptKind::Forall:
      return Concept::forall(c.role(), split_nominals(c.child()));
    default:
      return c;
  }
}

// NNF, singleton nominals, simplified.
Concept prepare(const Concept& c) { return simplify(split_nominals(nnf(c))); }

bool is_trigger(const Concept& c) {
  return c.is(ConceptKind::Atom) ||
         (c.is(ConceptKind::Nominals) && c.individuals().size() == 1);
}

}  // namespace

Theory::Theory(std::vector<Axiom> tbox, std::vector<Axiom> rbox)
    : tbox_(std::move(tbox)), rbox_(std::move(rbox)) {
  std::sort(tbox_.begin(), tbox_.end());
  tbox_.erase(std::unique(tbox_.begin(), tbox_.end()), tbox_.end());
  std::sort(rbox_.begin(), rbox_.end());
  rbox_.erase(std::unique(rbox_.begin(), rbox_.end()), rbox_.end());

  for (const auto& a : tbox_) key_ += a.line() + "\n";
  for (const auto& a : rbox_) key_ += a.line() + "\n";

  in_alco_ = rbox_.empty();
  for (const auto& a : tbox_) {
    if (!a.is_concept_axiom()) {
      in_alco_ = false;
      continue;
    }
    if (!ddl::in_alco(a.lhs()) || !ddl::in_alco(a.rhs())) in_alco_ = false;
  }
  if (!in_alco_) return;

  for (const auto& a : expand_equalities(tbox_)) {
    const Concept lhs = prepare(a.lhs());
    const Concept rhs = prepare(a.rhs());
    if (rhs.is(ConceptKind::Top) || lhs.is(ConceptKind::Bottom)) continue;
    if (lhs.is(ConceptKind::Top)) {
      globals_.push_back(rhs);
    } else if (is_trigger(lhs)) {
      unfoldings_.push_back({lhs, rhs});
    } else {
      Concept g = prepare(Concept::disjunction({Concept::negation(a.lhs()), a.rhs()}));
      if (!g.is(ConceptKind::Top)) globals_.push_back(std::move(g));
    }
  }
}

Theory Theory::with(const std::vector<Axiom>& extra) const {
  std::vector<Axiom> tbox = tbox_;
  tbox.insert(tbox.end(), extra.begin(), extra.end());
  return Theory(std::move(tbox), rbox_);
}

// ---------------------------------------------------------------------------
// Tableau

namespace {

using Label = boost::dynamic_bitset<>;

struct Entry {
  ConceptKind kind = ConceptKind::Top;
  int role = -1;
  std::vector<int> children;
  int complement = -1;  // literals only
  int negation = -1;    // id of nnf(¬c) for disjuncts (semantic branching)
  int individual = -1;  // singleton nominals
};

// Interned closure of every concept the tableau can encounter.
class ConceptTable {
 public:
  int intern(const Concept& c) {
    if (auto it = index_.find(c.str()); it != index_.end()) return it->second;
    Entry e;
    e.kind = c.kind();
    switch (c.kind()) {
      case ConceptKind::Exists:
      case ConceptKind::Forall:
        e.role = role_id(c.role().name());
        e.children = {intern(c.child())};
        break;
      case ConceptKind::And:
      case ConceptKind::Or:
        for (const auto& x : c.children()) e.children.push_back(intern(x));
        break;
      case ConceptKind::Not:
        e.children = {intern(c.child())};
        break;
      case ConceptKind::Nominals:
        e.individual = individual_id(c.individuals().front());
        break;
      default:
        break;
    }
    // Interning the children may already have interned c (e.g. ¬A via A).
    if (auto it = index_.find(c.str()); it != index_.end()) return it->second;
    const int id = static_cast<int>(entries_.size());
    entries_.push_back(std::move(e));
    concepts_.push_back(c);
    index_.emplace(c.str(), id);

    if (c.is(ConceptKind::Atom) || c.is(ConceptKind::Nominals)) {
      const int neg = intern(Concept::negation(c));
      entries_[id].complement = neg;
      entries_[neg].complement = id;
    }
    if (c.is(ConceptKind::Or)) {
      // Copy: interning may reallocate entries_.
      const std::vector<Concept> disjuncts = c.children();
      for (const auto& d : disjuncts) {
        const int did = intern(d);
        if (entries_[did].negation < 0) {
          const int nid = intern(simplify(negated_nnf(d)));
          entries_[did].negation = nid;
        }
      }
    }
    return id;
  }

  int individual_id(const std::string& name) {
    auto [it, inserted] = individuals_.emplace(name, static_cast<int>(individuals_.size()));
    return it->second;
  }

  int role_id(const std::string& name) {
    auto [it, inserted] = roles_.emplace(name, static_cast<int>(roles_.size()));
    return it->second;
  }

  const Entry& operator[](int id) const { return entries_[id]; }
  std::size_t size() const { return entries_.size(); }
  std::size_t individual_count() const { return individuals_.size(); }

  std::optional<int> find(const Concept& c) const {
    if (auto it = index_.find(c.str()); it != index_.end()) return it->second;
    return std::nullopt;
  }

 private:
  std::vector<Entry> entries_;
  std::vector<Concept> concepts_;
  std::unordered_map<std::string, int> index_;
  std::map<std::string, int> individuals_;
  std::map<std::string, int> roles_;
};

// Branch levels a fact depends on, sorted. Used for backjumping: a clash
// whose dependencies do not include the current branch level is returned
// straight past it.
using DepSet = std::vector<int>;

DepSet unite(const DepSet& a, const DepSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  DepSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DepSet without(DepSet d, int level) {
  d.erase(std::remove(d.begin(), d.end(), level), d.end());
  return d;
}

bool contains(const DepSet& d, int level) { return std::binary_search(d.begin(), d.end(), level); }

struct Edge {
  int role;
  int target;
  DepSet dep;
};

struct Node {
  Label label;
  std::vector<DepSet> deps;  // per concept id, meaningful where label is set
  std::vector<Edge> edges;
  int parent = -1;
  bool alive = true;
  bool root = false;
  DepSet origin;
};

struct Graph {
  std::vector<Node> nodes;
  std::vector<int> representative;  // individual -> node
};

class Tableau {
 public:
  Tableau(const Theory& theory, const Concept& query, TableauStats* stats,
          const TableauOptions& options)
      : stats_(stats), options_(options) {
    for (const auto& u : theory.unfoldings()) {
      const int trigger = table_.intern(prepare(u.trigger));
      const int implied = table_.intern(u.implied);
      unfold_pairs_.emplace_back(trigger, implied);
    }
    for (const auto& g : theory.global_constraints()) globals_.push_back(table_.intern(g));
    query_ = table_.intern(prepare(query));

    // Every individual in the theory or query gets a root node.
    Signature sig;
    for (const auto& a : theory.tbox()) collect_signature(a, sig);
    collect_signature(query, sig);
    for (const auto& i : sig.individuals) table_.individual_id(i);
    for (const auto& i : sig.individuals) table_.intern(Concept::nominal(i));

    unfold_.assign(table_.size(), {});
    for (auto [t, i] : unfold_pairs_) unfold_[t].push_back(i);
  }

  bool run() {
    Graph g;
    g.representative.assign(table_.individual_count(), -1);
    for (std::size_t id = 0; id < table_.size(); ++id) {
      const Entry& e = table_[static_cast<int>(id)];
      if (e.kind == ConceptKind::Nominals && g.representative[e.individual] < 0) {
        const int n = new_node(g, -1, true, {});
        g.representative[e.individual] = n;
        add(g.nodes[n], static_cast<int>(id), {});
      }
    }
    const int q = new_node(g, -1, true, {});
    add(g.nodes[q], query_, {});
    return solve(std::move(g)).sat;
  }

 private:
  struct Outcome {
    bool sat;
    DepSet clash;
  };

  int new_node(Graph& g, int parent, bool root, const DepSet& origin) {
    Node n;
    n.label.resize(table_.size());
    n.deps.resize(table_.size());
    n.parent = parent;
    n.root = root;
    n.origin = origin;
    for (int c : globals_) {
      n.label.set(c);
      n.deps[c] = origin;
    }
    g.nodes.push_back(std::move(n));
    if (stats_) ++stats_->nodes;
    return static_cast<int>(g.nodes.size()) - 1;
  }

  void step() {
    if (++steps_ > options_.step_limit) {
      throw TableauLimitExceeded("tableau exceeded " + std::to_string(options_.step_limit) + " steps");
    }
    if (stats_) ++stats_->steps;
  }

  bool add(Node& n, int c, const DepSet& dep) {
    if (n.label.test(c)) return false;
    n.label.set(c);
    n.deps[c] = dep;
    step();
    return true;
  }

  void kill(Graph& g, int x) {
    Node& n = g.nodes[x];
    n.alive = false;
    auto edges = std::move(n.edges);
    n.edges.clear();
    for (const auto& e : edges) {
      const Node& t = g.nodes[e.target];
      if (t.alive && !t.root && t.parent == x) kill(g, e.target);
    }
  }

  // Merges node x into node r (the node currently standing for a nominal),
  // because of a nominal in x whose dependencies are `why`.
  void merge(Graph& g, int x, int r, const DepSet& why) {
    step();
    {
      const Node& from = g.nodes[x];
      Node& into = g.nodes[r];
      for (auto c = from.label.find_first(); c != Label::npos; c = from.label.find_next(c)) {
        add(into, static_cast<int>(c), unite(from.deps[c], why));
      }
    }
    for (auto& z : g.nodes) {
      if (!z.alive) continue;
      bool touched = false;
      for (auto& e : z.edges) {
        if (e.target == x) {
          e.target = r;
          e.dep = unite(e.dep, why);
          touched = true;
        }
      }
      if (touched) {
        std::sort(z.edges.begin(), z.edges.end(), [](const Edge& a, const Edge& b) {
          return std::tie(a.role, a.target) < std::tie(b.role, b.target);
        });
        z.edges.erase(std::unique(z.edges.begin(), z.edges.end(),
                                  [](const Edge& a, const Edge& b) {
                                    return a.role == b.role && a.target == b.target;
                                  }),
                      z.edges.end());
      }
    }
    for (auto& rep : g.representative) {
      if (rep == x) rep = r;
    }
    kill(g, x);
  }

  // The concept whose presence refutes disjunct d, if any.
  int refuter(int d) const {
    const Entry& e = table_[d];
    return e.negation >= 0 ? e.negation : e.complement;
  }

  // Applies the deterministic rules everywhere until nothing changes.
  // Returns the dependencies of a clash, or nullopt if none was found.
  std::optional<DepSet> saturate(Graph& g) {
    bool changed = true;
    while (changed) {
      changed = false;
      bool merged = false;
      for (std::size_t xi = 0; xi < g.nodes.size() && !merged; ++xi) {
        const int x = static_cast<int>(xi);
        if (!g.nodes[x].alive) continue;
        for (auto c = g.nodes[x].label.find_first(); c != Label::npos;
             c = g.nodes[x].label.find_next(c)) {
          const Entry& e = table_[static_cast<int>(c)];
          Node& n = g.nodes[x];
          const DepSet dep = n.deps[c];
          if (e.kind == ConceptKind::Bottom) return dep;
          if (e.complement >= 0 && n.label.test(e.complement)) {
            return unite(dep, n.deps[e.complement]);
          }
          switch (e.kind) {
            case ConceptKind::And:
              for (int child : e.children) changed |= add(n, child, dep);
              break;
            case ConceptKind::Or: {
              // Unit propagation: refuted disjuncts drop out.
              if (std::any_of(e.children.begin(), e.children.end(),
                              [&](int d) { return n.label.test(d); })) {
                break;
              }
              DepSet why = dep;
              int open = -1, open_count = 0;
              for (int d : e.children) {
                const int r = refuter(d);
                if (r >= 0 && n.label.test(r)) {
                  why = unite(why, n.deps[r]);
                } else {
                  open = d;
                  ++open_count;
                }
              }
              if (open_count == 0) return why;
              if (open_count == 1) changed |= add(n, open, why);
              break;
            }
            case ConceptKind::Forall:
              for (const auto& edge : n.edges) {
                if (edge.role == e.role && g.nodes[edge.target].alive) {
                  changed |= add(g.nodes[edge.target], e.children[0], unite(dep, edge.dep));
                }
              }
              break;
            case ConceptKind::Nominals: {
              const int r = g.representative[e.individual];
              if (r != x) {
                merge(g, x, r, dep);
                changed = merged = true;
              }
              break;
            }
            default:
              break;
          }
          if (merged) break;
          for (int implied : unfold_[c]) changed |= add(g.nodes[x], implied, dep);
        }
      }
    }
    return std::nullopt;
  }

  // First unsatisfied disjunction, scanning nodes in creation order.
  std::optional<std::pair<int, int>> open_disjunction(const Graph& g) const {
    for (std::size_t x = 0; x < g.nodes.size(); ++x) {
      const Node& n = g.nodes[x];
      if (!n.alive) continue;
      for (auto c = n.label.find_first(); c != Label::npos; c = n.label.find_next(c)) {
        const Entry& e = table_[static_cast<int>(c)];
        if (e.kind != ConceptKind::Or) continue;
        const bool satisfied = std::any_of(e.children.begin(), e.children.end(),
                                           [&](int d) { return n.label.test(d); });
        if (!satisfied) return std::pair{static_cast<int>(x), static_cast<int>(c)};
      }
    }
    return std::nullopt;
  }

  std::vector<bool> blocked(const Graph& g) const {
    std::vector<bool> out(g.nodes.size(), false);
    for (std::size_t x = 0; x < g.nodes.size(); ++x) {
      const Node& n = g.nodes[x];
      if (!n.alive || n.root) continue;
      if (n.parent >= 0 && out[n.parent]) {
        out[x] = true;
        continue;
      }
      for (std::size_t y = 0; y < x; ++y) {
        if (g.nodes[y].alive && !out[y] && n.label.is_subset_of(g.nodes[y].label)) {
          out[x] = true;
          break;
        }
      }
    }
    return out;
  }

  // Creates one missing successor; false if every existential is witnessed.
  bool expand_existential(Graph& g) {
    const auto is_blocked = blocked(g);
    for (std::size_t xi = 0; xi < g.nodes.size(); ++xi) {
      const int x = static_cast<int>(xi);
      if (!g.nodes[x].alive || is_blocked[x]) continue;
      const Label& label = g.nodes[x].label;
      for (auto c = label.find_first(); c != Label::npos; c = label.find_next(c)) {
        const Entry& e = table_[static_cast<int>(c)];
        if (e.kind != ConceptKind::Exists) continue;
        const int filler = e.children[0];
        const bool witnessed =
            std::any_of(g.nodes[x].edges.begin(), g.nodes[x].edges.end(), [&](const Edge& edge) {
              return edge.role == e.role && g.nodes[edge.target].label.test(filler);
            });
        if (witnessed) continue;
        const DepSet dep = g.nodes[x].deps[c];
        const int y = new_node(g, x, false, dep);
        add(g.nodes[y], filler, dep);
        g.nodes[x].edges.push_back({e.role, y, dep});
        return true;
      }
    }
    return false;
  }

  Outcome solve(Graph g) {
    for (;;) {
      if (auto clash = saturate(g)) return {false, std::move(*clash)};
      if (auto open = open_disjunction(g)) {
        const auto [x, c] = *open;
        if (stats_) ++stats_->branches;
        const int level = next_level_++;
        const DepSet or_dep = g.nodes[x].deps[c];
        DepSet failure = or_dep;
        std::vector<std::pair<int, DepSet>> refuted;
        for (int d : table_[c].children) {
          const int neg = refuter(d);
          if (neg >= 0 && g.nodes[x].label.test(neg)) {
            failure = unite(failure, g.nodes[x].deps[neg]);
            continue;
          }
          Graph h = g;
          add(h.nodes[x], d, unite(or_dep, {level}));
          for (const auto& [r, why] : refuted) add(h.nodes[x], r, why);
          Outcome out = solve(std::move(h));
          if (out.sat) return out;
          if (!contains(out.clash, level)) return out;  // the choice was irrelevant
          DepSet why = unite(without(std::move(out.clash), level), or_dep);
          failure = unite(failure, why);
          if (neg >= 0) refuted.emplace_back(neg, std::move(why));
        }
        return {false, std::move(failure)};
      }
      if (!expand_existential(g)) return {true, {}};
    }
  }

  ConceptTable table_;
  std::vector<std::pair<int, int>> unfold_pairs_;
  std::vector<std::vector<int>> unfold_;
  std::vector<int> globals_;
  int query_ = -1;
  TableauStats* stats_;
  TableauOptions options_;
  std::size_t steps_ = 0;
  int next_level_ = 0;
};

}  // namespace

namespace tableau {

bool supports(const Theory& theory, const Concept& c) { return theory.in_alco() && in_alco(c); }

bool is_satisfiable(const Theory& theory, const Concept& c, TableauStats* stats,
                    const TableauOptions& options) {
  if (!supports(theory, c)) {
    throw UnsupportedConstruct(
        "query leaves the ALCO fragment (number restrictions, Self, inverse or universal roles, "
        "or RBox axioms); configure an external oracle");
  }
  Tableau t(theory, c, stats, options);
  return t.run();
}

bool entails(const Theory& theory, const Concept& lhs, const Concept& rhs, TableauStats* stats,
             const TableauOptions& options) {
  return !is_satisfiable(theory, Concept::conjunction({lhs, Concept::negation(rhs)}), stats,
                         options);
}

}  // namespace tableau

bool is_satisfiable(const std::vector<Axiom>& tbox, const Concept& c) {
  return tableau::is_satisfiable(Theory(tbox), c);
}

bool entails(const std::vector<Axiom>& tbox, const Concept& lhs, const Concept& rhs) {
  return tableau::entails(Theory(tbox), lhs, rhs);
}

}  // namespace ddl
