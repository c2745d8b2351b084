#include "alcor/statements.hpp"

#include "alcor/errors.hpp"

namespace alcor {

std::string to_string(const Gci& s) { return s.lhs.to_string() + " <= " + s.rhs.to_string(); }

std::string to_string(const Dci& s) { return s.lhs.to_string() + " ~< " + s.rhs.to_string(); }

std::string to_string(const Qdci& s) { return s.lhs.to_string() + " ~<all " + s.rhs.to_string(); }

std::string to_string(const ConceptAssertion& s) { return s.individual + " : " + s.expr.to_string(); }

std::string to_string(const RoleAssertion& s) {
  return "(" + s.subject + ", " + s.object + ") : " + s.role;
}

std::string to_string(const Assertion& s) {
  return std::visit([](const auto& a) { return to_string(a); }, s);
}

std::string to_string(const Statement& s) {
  return std::visit([](const auto& a) { return to_string(a); }, s);
}

namespace {

void require_individual(const Vocabulary& vocab, const std::string& name) {
  if (!vocab.individual_index(name))
    throw ValidationError("undeclared individual name '" + name + "'");
}

}  // namespace

void validate(const Assertion& s, const Vocabulary& vocab) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&s)) {
    require_individual(vocab, ca->individual);
    ca->expr.validate(vocab);
  } else {
    const auto& ra = std::get<RoleAssertion>(s);
    require_individual(vocab, ra.subject);
    require_individual(vocab, ra.object);
    if (!vocab.role_index(ra.role)) throw ValidationError("undeclared role name '" + ra.role + "'");
  }
}

void validate(const Statement& s, const Vocabulary& vocab) {
  std::visit(
      [&](const auto& stmt) {
        using T = std::decay_t<decltype(stmt)>;
        if constexpr (std::is_same_v<T, Gci> || std::is_same_v<T, Dci> || std::is_same_v<T, Qdci>) {
          stmt.lhs.validate(vocab);
          stmt.rhs.validate(vocab);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          validate(Assertion(stmt), vocab);
        } else {
          validate(Assertion(stmt), vocab);
        }
      },
      s);
}

}  // namespace alcor
