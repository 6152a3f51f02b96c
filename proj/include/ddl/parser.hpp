#pragma once

#include <string>
#include <string_view>

#include "ddl/knowledge_base.hpp"

namespace ddl {

/// Parses a knowledge base source file.
///
/// Grammar (line comments start with `#`; names must be declared before use):
///
///     concept A, B.   role R.   individual a, b.
///     tbox: C [= D.   tbox: C == D.
///     rbox: R o S [= T.   rbox: trans(R).   rbox: disjoint(R, S).
///     dbox: C ~[= D.
///     abox: C(a).     abox: R(a, b).      (stored as {a} [= C, {a} [= exists R . {b})
///
/// Concepts: TOP, BOT, names, {a, b}, !C (or -C), C & D, C | D,
/// exists R . C, forall R . C, >= n R . C, <= n R . C, self R, with roles
/// R, inv(R) or UNIV. Precedence is ! > & > |.
///
/// Throws ParseError with a 1-based line and column.
KnowledgeBase parse_kb(std::string_view text);

/// Parses a single concept over the given signature.
Concept parse_concept(std::string_view text, const Signature& signature);

/// An inclusion query `C [= D` or `C ~[= D` with arbitrary concepts on both sides.
struct InclusionQuery {
  Concept lhs;
  Concept rhs;
  bool defeasible = false;
};

InclusionQuery parse_inclusion_query(std::string_view text, const Signature& signature);

}  // namespace ddl
