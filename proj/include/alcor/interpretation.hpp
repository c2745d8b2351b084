#ifndef ALCOR_INTERPRETATION_HPP
#define ALCOR_INTERPRETATION_HPP

#include <cstdint>
#include <vector>

#include "alcor/kb.hpp"
#include "alcor/statements.hpp"
#include "alcor/vocabulary.hpp"

namespace alcor {

inline constexpr int kDefaultBitBudget = 24;
inline constexpr int kMaxBitBudget = 62;

// Number of membership bits an interpretation over this vocabulary needs:
// |concepts| * |U| + |roles| * |U|^2.
std::size_t interpretation_bits(const Vocabulary&);

// |Omega_N| = 2^interpretation_bits.  Throws SizeLimitError when the bit
// count exceeds the budget (which is clamped to kMaxBitBudget).
std::uint64_t interpretation_count(const Vocabulary&, int bit_budget = kDefaultBitBudget);

// Mask with one bit per individual, in declaration order.
std::uint64_t universe_mask(const Vocabulary&);

// One Herbrand interpretation: the domain is exactly the individual names and
// every name denotes itself.  All extensions are packed into a single word:
// concept-membership bits in (concept, individual) order first, then role
// bits in (role, subject, object) order, least-significant bit first.  The
// packed word doubles as the interpretation's index, so encoding and decoding
// are the identity on bits.
//
// An Interpretation borrows its vocabulary; keep the Vocabulary alive for as
// long as the interpretation is used.
class Interpretation {
 public:
  Interpretation(const Vocabulary& vocab, std::uint64_t bits);

  const Vocabulary& vocab() const { return *vocab_; }
  std::uint64_t bits() const { return bits_; }

  bool concept_member(std::size_t concept_ix, std::size_t individual_ix) const;
  bool role_member(std::size_t role_ix, std::size_t subject_ix, std::size_t object_ix) const;

  // Extension of a concept name as a mask over U.
  std::uint64_t concept_extension(std::size_t concept_ix) const;
  // Successors of one subject under a role, as a mask over U.
  std::uint64_t role_successors(std::size_t role_ix, std::size_t subject_ix) const;

  bool operator==(const Interpretation& o) const {
    return bits_ == o.bits_ && *vocab_ == *o.vocab_;
  }

 private:
  const Vocabulary* vocab_;
  std::uint64_t bits_;
};

// Index <-> interpretation bijection with range checking.
Interpretation decode(const Vocabulary&, std::uint64_t index, int bit_budget = kDefaultBitBudget);
std::uint64_t encode(const Interpretation&);

// A concept lowered to a postfix program over extension masks, so that
// enumeration loops do not walk the AST per interpretation.
class CompiledConcept {
 public:
  CompiledConcept(const ConceptExpr&, const Vocabulary&);

  std::uint64_t evaluate(const Interpretation&) const;
  std::uint64_t evaluate(const Interpretation&, std::vector<std::uint64_t>& stack) const;

 private:
  enum class OpKind : std::uint8_t { Bot, Top, Concept, Nominal, Not, And, Or, Exists, Forall };
  struct Op {
    OpKind kind;
    std::uint32_t index = 0;  // concept / individual / role index
  };
  std::vector<Op> program_;
  std::size_t max_stack_ = 0;
};

// A classical statement compiled for repeated evaluation across worlds.
class CompiledStatement {
 public:
  // ContractError for defeasible statements.
  CompiledStatement(const Statement&, const Vocabulary&);

  bool holds(const Interpretation&) const;
  bool holds(const Interpretation&, std::vector<std::uint64_t>& stack) const;

 private:
  enum class Kind : std::uint8_t { Gci, ConceptAssert, RoleAssert };
  Kind kind_;
  // Gci: the violator body C n ~D (holds iff empty).  ConceptAssert: the
  // asserted concept.
  std::vector<CompiledConcept> body_;
  std::size_t individual_ = 0;
  std::size_t role_ = 0, subject_ = 0, object_ = 0;
};

// The strict statements (T u A) of a defeasible knowledge base compiled for
// repeated model checks.
class CompiledStrictPart {
 public:
  explicit CompiledStrictPart(const DefeasibleKb&);
  bool holds(const Interpretation&) const;
  bool holds(const Interpretation&, std::vector<std::uint64_t>& stack) const;

 private:
  std::vector<CompiledStatement> statements_;
};

// C^I by structural recursion, as a mask over U.
std::uint64_t extension(const Interpretation&, const ConceptExpr&);

// The members of C^I by name.
std::vector<std::string> extension_names(const Interpretation&, const ConceptExpr&);

bool satisfies(const Interpretation&, const Gci&);
bool satisfies(const Interpretation&, const ConceptAssertion&);
bool satisfies(const Interpretation&, const RoleAssertion&);
bool satisfies(const Interpretation&, const Assertion&);
// Classical statements only; a defeasible statement is a contract violation.
bool satisfies(const Interpretation&, const Statement&);

// I |= T u A for the strict part of a defeasible knowledge base.
bool satisfies_strict_part(const Interpretation&, const DefeasibleKb&);

// The JSON world literal, e.g. {"concepts":{"L":["N"]},"roles":{}}.  Only
// non-empty extensions are emitted; missing names mean empty.
std::string to_literal(const Interpretation&);
Interpretation from_literal(std::string_view json_text, const Vocabulary&);

}  // namespace alcor

#endif  // ALCOR_INTERPRETATION_HPP
