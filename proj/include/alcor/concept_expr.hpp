#ifndef ALCOR_CONCEPT_EXPR_HPP
#define ALCOR_CONCEPT_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "alcor/vocabulary.hpp"

namespace alcor {

// A concept expression: atoms, nominals {o}, Boolean connectives, and role
// restrictions.  Immutable value type with structural equality; subtrees are
// shared, so copies are cheap and safe to pass around concurrently.
class ConceptExpr {
 public:
  enum class Kind : std::uint8_t { Bot, Top, Atom, Nominal, Not, And, Or, Exists, Forall };

  static ConceptExpr bot();
  static ConceptExpr top();
  static ConceptExpr atom(std::string concept_name);
  static ConceptExpr nominal(std::string individual_name);
  static ConceptExpr negation(ConceptExpr c);
  static ConceptExpr conjunction(ConceptExpr lhs, ConceptExpr rhs);
  static ConceptExpr disjunction(ConceptExpr lhs, ConceptExpr rhs);
  static ConceptExpr exists(std::string role_name, ConceptExpr c);
  static ConceptExpr forall(std::string role_name, ConceptExpr c);

  Kind kind() const;

  // Atom: concept name.  Nominal: individual name.  Exists/Forall: role name.
  const std::string& name() const;

  // Not/Exists/Forall: the single child.  And/Or: the left operand.  Returned
  // by value; copies share the node, so this is a pointer copy.
  ConceptExpr left() const;
  ConceptExpr right() const;
  ConceptExpr child() const { return left(); }

  bool operator==(const ConceptExpr& o) const;
  bool operator!=(const ConceptExpr& o) const { return !(*this == o); }
  std::size_t hash() const;

  // Surface syntax with minimal parentheses, e.g. "!A & exists r.(B | C)".
  std::string to_string() const;

  // Throws ValidationError when a referenced name is not declared with the
  // right kind in `vocab`.
  void validate(const Vocabulary& vocab) const;

  struct Node;  // opaque; defined in the implementation file

 private:
  explicit ConceptExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace alcor

#endif  // ALCOR_CONCEPT_EXPR_HPP
