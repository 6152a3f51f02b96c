#include "ddl/program.hpp"

#include <algorithm>
#include <cctype>

#include "ddl/error.hpp"

namespace ddl {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string terms_str(const std::vector<Term>& terms) {
  std::vector<std::string> names;
  if (terms.empty()) return "";
  for (const auto& t : terms) names.push_back(t.name);
  return "(" + join(names, ", ") + ")";
}

// Program text writes classical negation as `-` on both sides.
std::string dl_text(const Concept& c) {
  std::string s = c.str();
  std::replace(s.begin(), s.end(), '!', '-');
  return s;
}

std::string dl_text(const std::variant<Concept, Role>& side) {
  if (const auto* c = std::get_if<Concept>(&side)) return dl_text(*c);
  return std::get<Role>(side).str();
}

std::string atom_text(const DlAtom& a, const std::vector<UpdateSpec>* shared) {
  std::string head = "DL[";
  if (shared && !shared->empty() && a.updates == *shared) {
    head += "lambda; ";
  } else if (!a.updates.empty()) {
    std::vector<std::string> ups;
    for (const auto& u : a.updates) ups.push_back(u.str());
    head += join(ups, ", ") + "; ";
  }
  return head + a.query_str() + "]" + terms_str(a.terms);
}

std::string item_text(const BodyItem& item, const std::vector<UpdateSpec>* shared) {
  if (const auto* l = std::get_if<Literal>(&item)) return l->str();
  return atom_text(std::get<DlAtom>(item), shared);
}

std::string rule_str(const DlRule& r, const std::vector<UpdateSpec>* shared) {
  std::vector<std::string> body;
  for (const auto& b : r.positive) body.push_back(item_text(b, shared));
  for (const auto& b : r.negative) body.push_back("not " + item_text(b, shared));
  if (body.empty()) return r.head.str() + ".";
  return r.head.str() + " :- " + join(body, ", ") + ".";
}

bool terms_ground(const std::vector<Term>& ts) {
  return std::none_of(ts.begin(), ts.end(), [](const Term& t) { return t.is_variable(); });
}

}  // namespace

bool Literal::is_ground() const { return terms_ground(args); }

std::string Literal::str() const { return (negated ? "-" : "") + predicate + terms_str(args); }

bool LiteralOrder::operator()(const Literal& a, const Literal& b) const {
  const auto by_name = [](const Term& x, const Term& y) { return x.name < y.name; };
  if (std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end(),
                                   by_name)) {
    return true;
  }
  if (std::lexicographical_compare(b.args.begin(), b.args.end(), a.args.begin(), a.args.end(),
                                   by_name)) {
    return false;
  }
  if (a.predicate != b.predicate) return a.predicate < b.predicate;
  return a.negated < b.negated;
}

std::string to_string(const Interpretation& interp) {
  std::vector<std::string> parts;
  for (const auto& l : interp) parts.push_back(l.str());
  return "{" + join(parts, ", ") + "}";
}

bool is_consistent(const Interpretation& interp) {
  return std::none_of(interp.begin(), interp.end(), [&](const Literal& l) {
    return !l.negated && interp.count(l.complement());
  });
}

std::string UpdateSpec::str() const {
  return dl_text(dl_side) + " + " + (negated_predicate ? "-" : "") + predicate;
}

bool DlAtom::is_ground() const { return terms_ground(terms); }

std::string DlAtom::query_str() const { return dl_text(query); }

std::string DlAtom::str() const { return atom_text(*this, nullptr); }

std::string to_string(const BodyItem& item) { return item_text(item, nullptr); }

bool DlRule::is_ground() const {
  auto ground = [](const BodyItem& b) {
    if (const auto* l = std::get_if<Literal>(&b)) return l->is_ground();
    return std::get<DlAtom>(b).is_ground();
  };
  return head.is_ground() && std::all_of(positive.begin(), positive.end(), ground) &&
         std::all_of(negative.begin(), negative.end(), ground);
}

bool DlRule::has_dl_atoms() const {
  auto dl = [](const BodyItem& b) { return std::holds_alternative<DlAtom>(b); };
  return std::any_of(positive.begin(), positive.end(), dl) ||
         std::any_of(negative.begin(), negative.end(), dl);
}

std::string DlRule::str() const { return rule_str(*this, nullptr); }

std::string rule_text(const DlRule& rule, const std::vector<UpdateSpec>& lambda) {
  return rule_str(rule, &lambda);
}

std::string to_string(const DlProgram& program) {
  std::vector<std::string> ups;
  for (const auto& u : program.lambda) ups.push_back(u.str());
  std::string out = "lambda = {" + join(ups, ", ") + "}\n";
  for (const auto& r : program.rules) out += rule_text(r, program.lambda) + "\n";
  return out;
}

Literal parse_literal(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> Literal {
    throw ParseError(ParseError::Kind::Syntax, 1, i + 1, what);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto ident = [&]() -> std::string {
    skip_ws();
    const std::size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      ++i;
    }
    if (start == i || std::isdigit(static_cast<unsigned char>(text[start]))) {
      fail("expected an identifier");
    }
    return std::string(text.substr(start, i - start));
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  };

  Literal lit;
  skip_ws();
  if (i < text.size() && text[i] == '-') {
    lit.negated = true;
    ++i;
  }
  lit.predicate = ident();
  skip_ws();
  if (i == text.size()) return lit;  // propositional
  expect('(');
  for (;;) {
    std::string name = ident();
    const bool var = std::isupper(static_cast<unsigned char>(name[0]));
    lit.args.push_back(var ? Term::variable(std::move(name)) : Term::constant(std::move(name)));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(')');
  skip_ws();
  if (i != text.size()) fail("trailing characters after literal");
  return lit;
}

}  // namespace ddl
