#include "ddl/concept.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ddl {

// ---------------------------------------------------------------------------
// Role

Role Role::named(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty role name");
  return Role(RoleKind::Named, std::move(name), {});
}

Role Role::inverse_of(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty role name");
  return Role(RoleKind::Inverse, std::move(name), {});
}

Role Role::universal() { return Role(RoleKind::Universal, {}, {}); }

Role Role::chain(std::vector<Role> links) {
  if (links.size() < 2) throw std::invalid_argument("role chain needs at least two roles");
  for (const auto& l : links) {
    if (l.kind() == RoleKind::Chain) throw std::invalid_argument("nested role chain");
  }
  return Role(RoleKind::Chain, {}, std::move(links));
}

Role Role::inverse() const {
  switch (kind_) {
    case RoleKind::Named:
      return inverse_of(name_);
    case RoleKind::Inverse:
      return named(name_);
    default:
      throw std::invalid_argument("inverse of " + str() + " is not a role expression");
  }
}

std::string Role::str() const {
  switch (kind_) {
    case RoleKind::Named:
      return name_;
    case RoleKind::Inverse:
      return "inv(" + name_ + ")";
    case RoleKind::Universal:
      return "UNIV";
    case RoleKind::Chain: {
      std::string out;
      for (std::size_t i = 0; i < links_.size(); ++i) {
        if (i) out += " o ";
        out += links_[i].str();
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Concept

struct Concept::Node {
  ConceptKind kind = ConceptKind::Top;
  std::string name;
  std::vector<std::string> individuals;
  std::vector<Concept> children;
  Role role = Role::universal();
  std::size_t n = 0;
  std::string text;
};

namespace {

// Binding strength used for parenthesization: | < & < prefix < primary.
int level(ConceptKind k) {
  switch (k) {
    case ConceptKind::Or:
      return 1;
    case ConceptKind::And:
      return 2;
    case ConceptKind::Not:
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtLeast:
    case ConceptKind::AtMost:
      return 3;
    default:
      return 4;
  }
}

std::string wrap(const Concept& c, int min_level) {
  if (level(c.kind()) < min_level) return "(" + c.str() + ")";
  return c.str();
}

std::string render(const ConceptKind kind, const std::string& name,
                   const std::vector<std::string>& individuals,
                   const std::vector<Concept>& children, const Role& role, std::size_t n) {
  switch (kind) {
    case ConceptKind::Top:
      return "TOP";
    case ConceptKind::Bottom:
      return "BOT";
    case ConceptKind::Atom:
      return name;
    case ConceptKind::Nominals: {
      std::string out = "{";
      for (std::size_t i = 0; i < individuals.size(); ++i) {
        if (i) out += ", ";
        out += individuals[i];
      }
      return out + "}";
    }
    case ConceptKind::Not:
      return "!" + wrap(children[0], 3);
    case ConceptKind::And:
    case ConceptKind::Or: {
      const bool conj = kind == ConceptKind::And;
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += conj ? " & " : " | ";
        out += wrap(children[i], conj ? 3 : 2);
      }
      return out;
    }
    case ConceptKind::Exists:
      return "exists " + role.str() + " . " + wrap(children[0], 3);
    case ConceptKind::Forall:
      return "forall " + role.str() + " . " + wrap(children[0], 3);
    case ConceptKind::AtLeast:
      return ">= " + std::to_string(n) + " " + role.str() + " . " + wrap(children[0], 3);
    case ConceptKind::AtMost:
      return "<= " + std::to_string(n) + " " + role.str() + " . " + wrap(children[0], 3);
    case ConceptKind::Self:
      return "self " + role.str();
  }
  return {};
}

void check_restriction_role(const Role& r) {
  if (r.kind() == RoleKind::Chain) {
    throw std::invalid_argument("role chains may only appear in role inclusions");
  }
}

}  // namespace

Concept Concept::make(Node node) {
  node.text = render(node.kind, node.name, node.individuals, node.children, node.role, node.n);
  return Concept(std::make_shared<const Node>(std::move(node)));
}

Concept::Concept() : Concept(top()) {}

Concept Concept::top() {
  static const Concept t = make(Node{.kind = ConceptKind::Top});
  return t;
}

Concept Concept::bottom() {
  static const Concept b = make(Node{.kind = ConceptKind::Bottom});
  return b;
}

Concept Concept::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty concept name");
  return make(Node{.kind = ConceptKind::Atom, .name = std::move(name)});
}

Concept Concept::nominals(std::vector<std::string> individuals) {
  if (individuals.empty()) throw std::invalid_argument("empty nominal set");
  std::sort(individuals.begin(), individuals.end());
  if (std::adjacent_find(individuals.begin(), individuals.end()) != individuals.end()) {
    throw std::invalid_argument("duplicate individual in nominal set");
  }
  return make(Node{.kind = ConceptKind::Nominals, .individuals = std::move(individuals)});
}

Concept Concept::negation(Concept c) {
  return make(Node{.kind = ConceptKind::Not, .children = {std::move(c)}});
}

Concept Concept::conjunction(std::vector<Concept> children) {
  if (children.size() < 2) throw std::invalid_argument("conjunction needs at least two operands");
  return make(Node{.kind = ConceptKind::And, .children = std::move(children)});
}

Concept Concept::disjunction(std::vector<Concept> children) {
  if (children.size() < 2) throw std::invalid_argument("disjunction needs at least two operands");
  return make(Node{.kind = ConceptKind::Or, .children = std::move(children)});
}

Concept Concept::exists(Role role, Concept filler) {
  check_restriction_role(role);
  return make(Node{.kind = ConceptKind::Exists, .children = {std::move(filler)}, .role = std::move(role)});
}

Concept Concept::forall(Role role, Concept filler) {
  check_restriction_role(role);
  return make(Node{.kind = ConceptKind::Forall, .children = {std::move(filler)}, .role = std::move(role)});
}

Concept Concept::at_least(std::size_t n, Role role, Concept filler) {
  check_restriction_role(role);
  return make(Node{.kind = ConceptKind::AtLeast,
                   .children = {std::move(filler)},
                   .role = std::move(role),
                   .n = n});
}

Concept Concept::at_most(std::size_t n, Role role, Concept filler) {
  check_restriction_role(role);
  return make(Node{.kind = ConceptKind::AtMost,
                   .children = {std::move(filler)},
                   .role = std::move(role),
                   .n = n});
}

Concept Concept::self(Role role) {
  check_restriction_role(role);
  return make(Node{.kind = ConceptKind::Self, .role = std::move(role)});
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const std::vector<std::string>& Concept::individuals() const { return node_->individuals; }
const std::vector<Concept>& Concept::children() const { return node_->children; }
const Concept& Concept::child() const { return node_->children.at(0); }
const Role& Concept::role() const { return node_->role; }
std::size_t Concept::cardinality() const { return node_->n; }
const std::string& Concept::str() const { return node_->text; }

Concept conjunction_of(std::vector<Concept> cs) {
  if (cs.empty()) return Concept::top();
  if (cs.size() == 1) return cs.front();
  return Concept::conjunction(std::move(cs));
}

Concept disjunction_of(std::vector<Concept> cs) {
  if (cs.empty()) return Concept::bottom();
  if (cs.size() == 1) return cs.front();
  return Concept::disjunction(std::move(cs));
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

std::vector<Concept> map_nnf(const std::vector<Concept>& cs, bool negate) {
  std::vector<Concept> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(negate ? negated_nnf(c) : nnf(c));
  return out;
}

}  // namespace

Concept nnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atom:
    case ConceptKind::Nominals:
    case ConceptKind::Self:
      return c;
    case ConceptKind::And:
      return Concept::conjunction(map_nnf(c.children(), false));
    case ConceptKind::Or:
      return Concept::disjunction(map_nnf(c.children(), false));
    case ConceptKind::Exists:
      return Concept::exists(c.role(), nnf(c.child()));
    case ConceptKind::Forall:
      return Concept::forall(c.role(), nnf(c.child()));
    case ConceptKind::AtLeast:
      return Concept::at_least(c.cardinality(), c.role(), nnf(c.child()));
    case ConceptKind::AtMost:
      return Concept::at_most(c.cardinality(), c.role(), nnf(c.child()));
    case ConceptKind::Not:
      break;
  }

  const Concept& x = c.child();
  switch (x.kind()) {
    case ConceptKind::Top:
      return Concept::bottom();
    case ConceptKind::Bottom:
      return Concept::top();
    case ConceptKind::Atom:
    case ConceptKind::Nominals:
    case ConceptKind::Self:
      return c;
    case ConceptKind::Not:
      return nnf(x.child());
    case ConceptKind::And:
      return Concept::disjunction(map_nnf(x.children(), true));
    case ConceptKind::Or:
      return Concept::conjunction(map_nnf(x.children(), true));
    case ConceptKind::Exists:
      return Concept::forall(x.role(), negated_nnf(x.child()));
    case ConceptKind::Forall:
      return Concept::exists(x.role(), negated_nnf(x.child()));
    case ConceptKind::AtLeast:
      if (x.cardinality() == 0) return Concept::bottom();
      return Concept::at_most(x.cardinality() - 1, x.role(), nnf(x.child()));
    case ConceptKind::AtMost:
      return Concept::at_least(x.cardinality() + 1, x.role(), nnf(x.child()));
  }
  return c;
}

Concept simplify(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::And:
    case ConceptKind::Or: {
      const bool conj = c.is(ConceptKind::And);
      const ConceptKind neutral = conj ? ConceptKind::Top : ConceptKind::Bottom;
      const ConceptKind absorbing = conj ? ConceptKind::Bottom : ConceptKind::Top;
      std::vector<Concept> ops;
      for (const auto& child : c.children()) {
        Concept s = simplify(child);
        if (s.kind() == c.kind()) {
          ops.insert(ops.end(), s.children().begin(), s.children().end());
        } else {
          ops.push_back(std::move(s));
        }
      }
      std::vector<Concept> kept;
      for (auto& op : ops) {
        if (op.is(absorbing)) return op;
        if (!op.is(neutral)) kept.push_back(std::move(op));
      }
      std::sort(kept.begin(), kept.end());
      kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
      return conj ? conjunction_of(std::move(kept)) : disjunction_of(std::move(kept));
    }
    case ConceptKind::Exists: {
      Concept f = simplify(c.child());
      if (f.is(ConceptKind::Bottom)) return f;
      return Concept::exists(c.role(), std::move(f));
    }
    case ConceptKind::Forall: {
      Concept f = simplify(c.child());
      if (f.is(ConceptKind::Top)) return f;
      return Concept::forall(c.role(), std::move(f));
    }
    case ConceptKind::AtLeast: {
      if (c.cardinality() == 0) return Concept::top();
      Concept f = simplify(c.child());
      if (f.is(ConceptKind::Bottom)) return f;
      return Concept::at_least(c.cardinality(), c.role(), std::move(f));
    }
    case ConceptKind::AtMost: {
      Concept f = simplify(c.child());
      if (f.is(ConceptKind::Bottom)) return Concept::top();
      return Concept::at_most(c.cardinality(), c.role(), std::move(f));
    }
    default:
      return c;
  }
}

bool is_literal_concept(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return true;
    case ConceptKind::Not:
      return c.child().is(ConceptKind::Atom);
    default:
      return false;
  }
}

bool in_alco(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atom:
    case ConceptKind::Nominals:
      return true;
    case ConceptKind::Not:
    case ConceptKind::And:
    case ConceptKind::Or:
      return std::all_of(c.children().begin(), c.children().end(),
                         [](const Concept& x) { return in_alco(x); });
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      return c.role().kind() == RoleKind::Named && in_alco(c.child());
    default:
      return false;
  }
}

void Signature::merge(const Signature& other) {
  concepts.insert(other.concepts.begin(), other.concepts.end());
  roles.insert(other.roles.begin(), other.roles.end());
  individuals.insert(other.individuals.begin(), other.individuals.end());
}

void collect_signature(const Role& r, Signature& into) {
  switch (r.kind()) {
    case RoleKind::Named:
    case RoleKind::Inverse:
      into.roles.insert(r.name());
      break;
    case RoleKind::Chain:
      for (const auto& l : r.links()) collect_signature(l, into);
      break;
    case RoleKind::Universal:
      break;
  }
}

void collect_signature(const Concept& c, Signature& into) {
  switch (c.kind()) {
    case ConceptKind::Atom:
      into.concepts.insert(c.name());
      return;
    case ConceptKind::Nominals:
      into.individuals.insert(c.individuals().begin(), c.individuals().end());
      return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtLeast:
    case ConceptKind::AtMost:
    case ConceptKind::Self:
      collect_signature(c.role(), into);
      break;
    default:
      break;
  }
  for (const auto& child : c.children()) collect_signature(child, into);
}

}  // namespace ddl
