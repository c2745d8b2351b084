#ifndef ALCOR_KB_HPP
#define ALCOR_KB_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "alcor/extended_nat.hpp"
#include "alcor/statements.hpp"
#include "alcor/vocabulary.hpp"

namespace alcor {

struct WeightedGci {
  Gci gci;
  ExtendedNat weight;
  bool operator==(const WeightedGci& o) const { return gci == o.gci && weight == o.weight; }
};

struct WeightedAssertion {
  Assertion assertion;
  ExtendedNat weight;
  bool operator==(const WeightedAssertion& o) const {
    return assertion == o.assertion && weight == o.weight;
  }
};

// A classical TBox/ABox where every statement carries a weight in N u {inf}.
// Statement order is the document order; duplicates are permitted and each
// occurrence contributes its own weight to interpretation costs.
struct WeightedKb {
  Vocabulary vocab;
  std::vector<WeightedGci> tbox;
  std::vector<WeightedAssertion> abox;

  // True iff every ABox weight is infinite.
  bool has_strict_abox() const;

  void validate() const;

  bool operator==(const WeightedKb& o) const {
    return vocab == o.vocab && tbox == o.tbox && abox == o.abox;
  }
  bool operator!=(const WeightedKb& o) const { return !(*this == o); }
};

// One DBox entry.  `quantified` distinguishes C ~<all D from C ~< D.  The
// optional impact factor fixes the eta used when building a c-representation
// from this knowledge base; absent means "to be searched".
struct DboxEntry {
  ConceptExpr lhs;
  ConceptExpr rhs;
  bool quantified = false;
  std::optional<std::uint64_t> impact;  // >= 1 when present

  bool same_statement(const DboxEntry& o) const {
    return quantified == o.quantified && lhs == o.lhs && rhs == o.rhs;
  }
  bool operator==(const DboxEntry& o) const { return same_statement(o) && impact == o.impact; }
  bool operator!=(const DboxEntry& o) const { return !(*this == o); }
};

std::string to_string(const DboxEntry&);

// TBox + DBox + ABox.  The TBox and ABox are strict; DBox order is
// significant (it fixes the index of each impact factor) and stable across
// serialization round trips.
struct DefeasibleKb {
  Vocabulary vocab;
  std::vector<Gci> tbox;
  std::vector<DboxEntry> dbox;  // duplicate-free as statements
  std::vector<Assertion> abox;

  void validate() const;

  bool operator==(const DefeasibleKb& o) const {
    return vocab == o.vocab && tbox == o.tbox && dbox == o.dbox && abox == o.abox;
  }
  bool operator!=(const DefeasibleKb& o) const { return !(*this == o); }
};

using ParsedKb = std::variant<WeightedKb, DefeasibleKb>;

const Vocabulary& vocab_of(const ParsedKb&);

// Order-insensitive comparison of two weighted knowledge bases: same
// vocabulary and the same multiset of weighted statements.  Used by the
// translation round-trip checks.
bool equivalent(const WeightedKb&, const WeightedKb&);

}  // namespace alcor

#endif  // ALCOR_KB_HPP
