#ifndef ALCOR_PARSER_HPP
#define ALCOR_PARSER_HPP

#include <string_view>

#include "alcor/kb.hpp"

namespace alcor {

// Parses a knowledge-base document.  Grammar (# starts a line comment):
//
//   doc      := vocab tbox? dbox? abox?
//   vocab    := "vocab" "{" "concepts:" names ";" "roles:" names ";"
//               "individuals:" names ";" "}"
//   names    := (IDENT ("," IDENT)*)?
//   tbox     := "tbox" "{" (concept "<=" concept wt? ";")* "}"
//   dbox     := "dbox" "{" (concept ("~<"|"~<all") concept wt? ";")* "}"
//   abox     := "abox" "{" ((IND ":" concept | "(" IND "," IND ")" ":" ROLE)
//               wt? ";")* "}"
//   wt       := "[" (INTEGER | "inf") "]"
//   concept  := conj ("|" conj)*
//   conj     := unary ("&" unary)*
//   unary    := "!" unary | "exists" ROLE "." unary | "forall" ROLE "." unary
//               | atom
//   atom     := "top" | "bot" | CONCEPT | "{" IND "}" | "(" concept ")"
//
// A document with a dbox block (even an empty one) is a defeasible KB; its
// tbox/abox statements are strict, so any weight annotation there must be
// [inf].  A document without a dbox is a weighted KB; omitted weights default
// to [inf].  DBox weights are impact-factor hints and must be positive
// finite integers.
//
// The block and operator words (vocab, concepts, roles, individuals, tbox,
// dbox, abox, top, bot, exists, forall, inf) are reserved and cannot be
// declared as names.
ParsedKb parse_document(std::string_view text);

// Parses a bare concept over a given vocabulary (used by queries).
ConceptExpr parse_concept(std::string_view text, const Vocabulary& vocab);

// Parses one statement: "C <= D", "C ~< D", "C ~<all D", "a : C", or
// "(a, b) : r".
Statement parse_statement(std::string_view text, const Vocabulary& vocab);

}  // namespace alcor

#endif  // ALCOR_PARSER_HPP
