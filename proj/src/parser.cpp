#include "ddl/parser.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ddl/error.hpp"

namespace ddl {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

const std::set<std::string> kReserved = {"TOP", "BOT", "exists", "forall", "self", "inv", "UNIV"};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{.line = line, .column = col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.type = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.type = Tok::Number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else {
      static const char* const kMulti[] = {"~[=", "[=", "==", ">=", "<="};
      t.type = Tok::Symbol;
      for (const char* m : kMulti) {
        if (src.substr(i).starts_with(m)) {
          t.text = m;
          break;
        }
      }
      if (t.text.empty()) {
        if (std::string_view("{}(),.!&|-:").find(c) == std::string_view::npos) {
          throw ParseError(ParseError::Kind::Syntax, line, col,
                           std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
      }
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{.type = Tok::End, .text = "end of input", .line = line, .column = col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, Signature* signature, bool declarations_allowed)
      : tokens_(tokenize(src)), sig_(signature), declarations_allowed_(declarations_allowed) {}

  KnowledgeBase parse_file() {
    KnowledgeBase kb;
    while (!at_end()) statement(kb);
    kb.signature = *sig_;
    return kb;
  }

  Concept parse_only_concept() {
    Concept c = concept_expr();
    expect_end();
    return c;
  }

  InclusionQuery parse_only_query() {
    InclusionQuery q;
    q.lhs = concept_expr();
    if (accept("~[=")) {
      q.defeasible = true;
    } else {
      expect("[=");
    }
    q.rhs = concept_expr();
    expect_end();
    return q;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at_end() const { return peek().type == Tok::End; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.type != Tok::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& what,
                         ParseError::Kind kind = ParseError::Kind::Syntax) const {
    throw ParseError(kind, at.line, at.column, what);
  }

  bool is_symbol(const Token& t, std::string_view s) const {
    return t.type == Tok::Symbol && t.text == s;
  }
  bool accept(std::string_view s) {
    if (is_symbol(peek(), s)) {
      next();
      return true;
    }
    return false;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail(peek(), "expected '" + std::string(s) + "' but found '" + peek().text + "'");
  }
  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected trailing '" + peek().text + "'");
  }
  bool is_keyword(const Token& t, std::string_view kw) const {
    return t.type == Tok::Ident && t.text == kw;
  }

  std::string identifier(const char* what) {
    const Token& t = peek();
    if (t.type != Tok::Ident) fail(t, std::string("expected ") + what + " but found '" + t.text + "'");
    if (kReserved.count(t.text)) fail(t, "'" + t.text + "' is a reserved word");
    next();
    return t.text;
  }

  std::vector<std::string> name_list(const char* what) {
    std::vector<std::string> names{identifier(what)};
    while (accept(",")) names.push_back(identifier(what));
    return names;
  }

  // -- statements -----------------------------------------------------------

  void statement(KnowledgeBase& kb) {
    const Token& head = peek();
    if (head.type != Tok::Ident) fail(head, "expected a declaration or axiom, found '" + head.text + "'");
    if (head.text == "concept" || head.text == "role" || head.text == "individual") {
      if (!declarations_allowed_) fail(head, "declarations are not allowed here");
      next();
      const Token& first = peek();
      auto names = name_list("a name");
      expect(".");
      auto& target = head.text == "concept" ? sig_->concepts
                     : head.text == "role"  ? sig_->roles
                                            : sig_->individuals;
      for (const auto& n : names) {
        if (head.text == "role" && n == "o") fail(first, "'o' is reserved as the role chain operator");
        target.insert(n);
      }
      return;
    }
    if (head.text == "tbox" || head.text == "rbox" || head.text == "dbox" || head.text == "abox") {
      next();
      expect(":");
      if (head.text == "tbox") {
        tbox_axiom(kb);
      } else if (head.text == "rbox") {
        rbox_axiom(kb);
      } else if (head.text == "dbox") {
        dbox_axiom(kb);
      } else {
        abox_assertion(kb);
      }
      expect(".");
      return;
    }
    fail(head, "unknown statement '" + head.text + "'");
  }

  void tbox_axiom(KnowledgeBase& kb) {
    Concept lhs = concept_expr();
    if (accept("[=")) {
      kb.tbox.insert(Axiom::inclusion(std::move(lhs), concept_expr()));
    } else if (accept("==")) {
      kb.tbox.insert(Axiom::equality(std::move(lhs), concept_expr()));
    } else {
      fail(peek(), "expected '[=' or '==' but found '" + peek().text + "'");
    }
  }

  void rbox_axiom(KnowledgeBase& kb) {
    static const std::pair<const char*, RoleProperty> kProps[] = {
        {"trans", RoleProperty::Trans}, {"fun", RoleProperty::Fun}, {"ref", RoleProperty::Ref},
        {"irr", RoleProperty::Irr},     {"sym", RoleProperty::Sym}, {"asy", RoleProperty::Asy}};
    const Token& t = peek();
    if (t.type == Tok::Ident && is_symbol(peek(1), "(")) {
      for (const auto& [kw, prop] : kProps) {
        if (t.text == kw) {
          next();
          expect("(");
          Role r = role_expr();
          expect(")");
          kb.rbox.insert(Axiom::role_property(prop, std::move(r)));
          return;
        }
      }
      if (t.text == "disjoint") {
        next();
        expect("(");
        Role a = role_expr();
        expect(",");
        Role b = role_expr();
        expect(")");
        kb.rbox.insert(Axiom::role_disjointness(std::move(a), std::move(b)));
        return;
      }
    }
    std::vector<Role> chain{role_expr()};
    while (is_keyword(peek(), "o")) {
      next();
      chain.push_back(role_expr());
    }
    expect("[=");
    const Token& rhs_at = peek();
    Role rhs = role_expr();
    if (rhs.kind() == RoleKind::Universal) fail(rhs_at, "universal role on the right of a role inclusion");
    Role lhs = chain.size() == 1 ? chain.front() : Role::chain(std::move(chain));
    kb.rbox.insert(Axiom::role_inclusion(std::move(lhs), std::move(rhs)));
  }

  Concept defeasible_side() {
    const Token& at = peek();
    Concept c = concept_expr();
    if (!is_literal_concept(c)) {
      fail(at, "side '" + c.str() + "' must be a concept name, its negation, TOP or BOT",
           ParseError::Kind::MalformedDefeasible);
    }
    return c;
  }

  void dbox_axiom(KnowledgeBase& kb) {
    Concept lhs = defeasible_side();
    expect("~[=");
    Concept rhs = defeasible_side();
    kb.dbox.insert(DefeasibleAxiom(std::move(lhs), std::move(rhs)));
  }

  void abox_assertion(KnowledgeBase& kb) {
    const Token& t = peek();
    if (t.type == Tok::Ident && is_symbol(peek(1), "(") && sig_->roles.count(t.text) &&
        !sig_->concepts.count(t.text)) {
      next();
      expect("(");
      std::string a = individual();
      expect(",");
      std::string b = individual();
      expect(")");
      kb.tbox.insert(abox_to_tbox(RoleAssertion{Role::named(t.text), a, b}));
      return;
    }
    Concept c = prefix_expr();
    expect("(");
    std::string a = individual();
    expect(")");
    kb.tbox.insert(abox_to_tbox(ConceptAssertion{std::move(c), a}));
  }

  // -- concepts -------------------------------------------------------------

  Concept concept_expr() {
    std::vector<Concept> ops{and_expr()};
    while (accept("|")) ops.push_back(and_expr());
    return ops.size() == 1 ? ops.front() : Concept::disjunction(std::move(ops));
  }

  Concept and_expr() {
    std::vector<Concept> ops{prefix_expr()};
    while (accept("&")) ops.push_back(prefix_expr());
    return ops.size() == 1 ? ops.front() : Concept::conjunction(std::move(ops));
  }

  std::size_t number() {
    const Token& t = peek();
    if (t.type != Tok::Number) fail(t, "expected a number but found '" + t.text + "'");
    next();
    try {
      return std::stoul(t.text);
    } catch (const std::exception&) {
      fail(t, "number out of range");
    }
  }

  Concept prefix_expr() {
    const Token& t = peek();
    if (accept("!") || accept("-")) return Concept::negation(prefix_expr());
    if (accept(">=") || accept("<=")) {
      const bool at_least = t.text == ">=";
      std::size_t n = number();
      Role r = role_expr();
      expect(".");
      Concept f = prefix_expr();
      return at_least ? Concept::at_least(n, std::move(r), std::move(f))
                      : Concept::at_most(n, std::move(r), std::move(f));
    }
    if (is_keyword(t, "exists") || is_keyword(t, "forall")) {
      next();
      Role r = role_expr();
      expect(".");
      Concept f = prefix_expr();
      return t.text == "exists" ? Concept::exists(std::move(r), std::move(f))
                                : Concept::forall(std::move(r), std::move(f));
    }
    if (is_keyword(t, "self")) {
      next();
      return Concept::self(role_expr());
    }
    return primary();
  }

  Concept primary() {
    const Token& t = peek();
    if (accept("(")) {
      Concept c = concept_expr();
      expect(")");
      return c;
    }
    if (accept("{")) {
      std::vector<std::string> names{individual()};
      while (accept(",")) names.push_back(individual());
      expect("}");
      std::set<std::string> seen(names.begin(), names.end());
      if (seen.size() != names.size()) fail(t, "duplicate individual in nominal set");
      return Concept::nominals(std::move(names));
    }
    if (is_keyword(t, "TOP")) {
      next();
      return Concept::top();
    }
    if (is_keyword(t, "BOT")) {
      next();
      return Concept::bottom();
    }
    if (t.type == Tok::Ident && !kReserved.count(t.text)) {
      next();
      if (!sig_->concepts.count(t.text)) {
        fail(t, "concept '" + t.text + "' is not declared", ParseError::Kind::UndeclaredName);
      }
      return Concept::atom(t.text);
    }
    fail(t, "expected a concept but found '" + t.text + "'");
  }

  std::string individual() {
    const Token& t = peek();
    std::string name = identifier("an individual");
    if (!sig_->individuals.count(name)) {
      fail(t, "individual '" + name + "' is not declared", ParseError::Kind::UndeclaredName);
    }
    return name;
  }

  Role role_expr() {
    const Token& t = peek();
    if (is_keyword(t, "UNIV")) {
      next();
      return Role::universal();
    }
    if (is_keyword(t, "inv")) {
      next();
      expect("(");
      Role inner = role_expr();
      expect(")");
      if (inner.kind() == RoleKind::Universal) return inner;
      return inner.inverse();
    }
    std::string name = identifier("a role");
    if (!sig_->roles.count(name)) {
      fail(t, "role '" + name + "' is not declared", ParseError::Kind::UndeclaredName);
    }
    return Role::named(name);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Signature* sig_;
  bool declarations_allowed_;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view text) {
  Signature sig;
  Parser p(text, &sig, true);
  return p.parse_file();
}

Concept parse_concept(std::string_view text, const Signature& signature) {
  Signature sig = signature;
  Parser p(text, &sig, false);
  return p.parse_only_concept();
}

InclusionQuery parse_inclusion_query(std::string_view text, const Signature& signature) {
  Signature sig = signature;
  Parser p(text, &sig, false);
  return p.parse_only_query();
}

}  // namespace ddl
