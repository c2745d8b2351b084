#include "alcor/kb.hpp"

#include <algorithm>

#include "alcor/errors.hpp"

namespace alcor {

bool WeightedKb::has_strict_abox() const {
  return std::all_of(abox.begin(), abox.end(),
                     [](const WeightedAssertion& a) { return a.weight.is_infinite(); });
}

void WeightedKb::validate() const {
  for (const auto& t : tbox) {
    t.gci.lhs.validate(vocab);
    t.gci.rhs.validate(vocab);
  }
  for (const auto& a : abox) alcor::validate(a.assertion, vocab);
}

std::string to_string(const DboxEntry& e) {
  std::string s = e.lhs.to_string() + (e.quantified ? " ~<all " : " ~< ") + e.rhs.to_string();
  return s;
}

void DefeasibleKb::validate() const {
  for (const auto& t : tbox) {
    t.lhs.validate(vocab);
    t.rhs.validate(vocab);
  }
  for (const auto& e : dbox) {
    e.lhs.validate(vocab);
    e.rhs.validate(vocab);
    if (e.impact && *e.impact == 0)
      throw ValidationError("impact factor must be a positive integer");
  }
  for (std::size_t i = 0; i < dbox.size(); ++i)
    for (std::size_t j = i + 1; j < dbox.size(); ++j)
      if (dbox[i].same_statement(dbox[j]))
        throw ValidationError("duplicate defeasible statement '" + to_string(dbox[i]) + "'");
  for (const auto& a : abox) alcor::validate(a, vocab);
}

const Vocabulary& vocab_of(const ParsedKb& kb) {
  return std::visit([](const auto& k) -> const Vocabulary& { return k.vocab; }, kb);
}

bool equivalent(const WeightedKb& a, const WeightedKb& b) {
  if (a.vocab != b.vocab) return false;
  auto keys = [](const WeightedKb& kb) {
    std::vector<std::string> out;
    out.reserve(kb.tbox.size() + kb.abox.size());
    for (const auto& t : kb.tbox)
      out.push_back("T " + to_string(t.gci) + " [" + t.weight.to_string() + "]");
    for (const auto& x : kb.abox)
      out.push_back("A " + to_string(x.assertion) + " [" + x.weight.to_string() + "]");
    std::sort(out.begin(), out.end());
    return out;
  };
  return keys(a) == keys(b);
}

}  // namespace alcor
