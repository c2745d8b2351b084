#ifndef ALCOR_STATEMENTS_HPP
#define ALCOR_STATEMENTS_HPP

#include <string>
#include <variant>

#include "alcor/concept_expr.hpp"
#include "alcor/vocabulary.hpp"

namespace alcor {

// C <= D: every C is a D.
struct Gci {
  ConceptExpr lhs;
  ConceptExpr rhs;
  bool operator==(const Gci& o) const { return lhs == o.lhs && rhs == o.rhs; }
  bool operator!=(const Gci& o) const { return !(*this == o); }
};

// C ~< D: typical Cs are Ds (open defeasible inclusion).
struct Dci {
  ConceptExpr lhs;
  ConceptExpr rhs;
  bool operator==(const Dci& o) const { return lhs == o.lhs && rhs == o.rhs; }
  bool operator!=(const Dci& o) const { return !(*this == o); }
};

// C ~<all D: the universally quantified defeasible inclusion.
struct Qdci {
  ConceptExpr lhs;
  ConceptExpr rhs;
  bool operator==(const Qdci& o) const { return lhs == o.lhs && rhs == o.rhs; }
  bool operator!=(const Qdci& o) const { return !(*this == o); }
};

// a : C
struct ConceptAssertion {
  std::string individual;
  ConceptExpr expr;
  bool operator==(const ConceptAssertion& o) const {
    return individual == o.individual && expr == o.expr;
  }
  bool operator!=(const ConceptAssertion& o) const { return !(*this == o); }
};

// (a, b) : r
struct RoleAssertion {
  std::string subject;
  std::string object;
  std::string role;
  bool operator==(const RoleAssertion& o) const {
    return subject == o.subject && object == o.object && role == o.role;
  }
  bool operator!=(const RoleAssertion& o) const { return !(*this == o); }
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;
using Statement = std::variant<Gci, Dci, Qdci, ConceptAssertion, RoleAssertion>;

inline bool is_classical(const Statement& s) {
  return !std::holds_alternative<Dci>(s) && !std::holds_alternative<Qdci>(s);
}

std::string to_string(const Gci&);
std::string to_string(const Dci&);
std::string to_string(const Qdci&);
std::string to_string(const ConceptAssertion&);
std::string to_string(const RoleAssertion&);
std::string to_string(const Assertion&);
std::string to_string(const Statement&);

void validate(const Assertion&, const Vocabulary&);
void validate(const Statement&, const Vocabulary&);

}  // namespace alcor

#endif  // ALCOR_STATEMENTS_HPP
