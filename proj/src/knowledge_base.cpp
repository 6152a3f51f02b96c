#include "ddl/knowledge_base.hpp"

#include <sstream>
#include <stdexcept>

namespace ddl {

void KnowledgeBase::add(const Axiom& a) {
  if (a.is_concept_axiom()) {
    tbox.insert(a);
  } else {
    rbox.insert(a);
  }
}

namespace {

void require_declared(const Signature& used, const Signature& declared, const std::string& where) {
  for (const auto& c : used.concepts) {
    if (!declared.concepts.count(c)) throw std::invalid_argument("undeclared concept " + c + " in " + where);
  }
  for (const auto& r : used.roles) {
    if (!declared.roles.count(r)) throw std::invalid_argument("undeclared role " + r + " in " + where);
  }
  for (const auto& i : used.individuals) {
    if (!declared.individuals.count(i)) {
      throw std::invalid_argument("undeclared individual " + i + " in " + where);
    }
  }
}

}  // namespace

void KnowledgeBase::validate() const {
  for (const auto& a : tbox) {
    if (!a.is_concept_axiom()) throw std::invalid_argument("role axiom in tbox: " + a.line());
    Signature used;
    collect_signature(a, used);
    require_declared(used, signature, a.line());
  }
  for (const auto& a : rbox) {
    if (a.is_concept_axiom()) throw std::invalid_argument("concept axiom in rbox: " + a.line());
    Signature used;
    collect_signature(a, used);
    require_declared(used, signature, a.line());
  }
  for (const auto& d : dbox) {
    Signature used;
    collect_signature(d, used);
    require_declared(used, signature, d.line());
  }
}

KnowledgeBase KnowledgeBase::from_axioms(const std::vector<Axiom>& tbox,
                                         const std::vector<Axiom>& rbox,
                                         const std::vector<DefeasibleAxiom>& dbox) {
  KnowledgeBase kb;
  for (const auto& a : tbox) {
    kb.add(a);
    collect_signature(a, kb.signature);
  }
  for (const auto& a : rbox) {
    kb.add(a);
    collect_signature(a, kb.signature);
  }
  for (const auto& d : dbox) {
    kb.add(d);
    collect_signature(d, kb.signature);
  }
  return kb;
}

namespace {

void declare(std::ostringstream& out, const char* keyword, const std::set<std::string>& names) {
  if (names.empty()) return;
  out << keyword << ' ';
  bool first = true;
  for (const auto& n : names) {
    if (!first) out << ", ";
    out << n;
    first = false;
  }
  out << ".\n";
}

}  // namespace

std::string serialize_kb(const KnowledgeBase& kb) {
  std::ostringstream out;
  declare(out, "concept", kb.signature.concepts);
  declare(out, "role", kb.signature.roles);
  declare(out, "individual", kb.signature.individuals);
  for (const auto& a : kb.tbox) out << a.line() << '\n';
  for (const auto& a : kb.rbox) out << a.line() << '\n';
  for (const auto& d : kb.dbox) out << d.line() << '\n';
  return out.str();
}

}  // namespace ddl
