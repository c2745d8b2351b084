#include "alcor/interpretation.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

#include "alcor/errors.hpp"

namespace alcor {

std::size_t interpretation_bits(const Vocabulary& v) {
  const std::size_t u = v.universe_size();
  return v.concept_count() * u + v.role_count() * u * u;
}

std::uint64_t interpretation_count(const Vocabulary& v, int bit_budget) {
  const std::size_t bits = interpretation_bits(v);
  const std::size_t limit =
      static_cast<std::size_t>(std::clamp(bit_budget, 0, kMaxBitBudget));
  if (bits > limit) {
    throw SizeLimitError("interpretation space needs " + std::to_string(bits) +
                         " bits, budget is " + std::to_string(limit));
  }
  return std::uint64_t{1} << bits;
}

std::uint64_t universe_mask(const Vocabulary& v) {
  return (std::uint64_t{1} << v.universe_size()) - 1;
}

Interpretation::Interpretation(const Vocabulary& vocab, std::uint64_t bits)
    : vocab_(&vocab), bits_(bits) {}

bool Interpretation::concept_member(std::size_t concept_ix, std::size_t individual_ix) const {
  const std::size_t u = vocab_->universe_size();
  return (bits_ >> (concept_ix * u + individual_ix)) & 1;
}

bool Interpretation::role_member(std::size_t role_ix, std::size_t subject_ix,
                                 std::size_t object_ix) const {
  const std::size_t u = vocab_->universe_size();
  const std::size_t base = vocab_->concept_count() * u;
  return (bits_ >> (base + role_ix * u * u + subject_ix * u + object_ix)) & 1;
}

std::uint64_t Interpretation::concept_extension(std::size_t concept_ix) const {
  const std::size_t u = vocab_->universe_size();
  return (bits_ >> (concept_ix * u)) & universe_mask(*vocab_);
}

std::uint64_t Interpretation::role_successors(std::size_t role_ix, std::size_t subject_ix) const {
  const std::size_t u = vocab_->universe_size();
  const std::size_t base = vocab_->concept_count() * u;
  return (bits_ >> (base + role_ix * u * u + subject_ix * u)) & universe_mask(*vocab_);
}

Interpretation decode(const Vocabulary& v, std::uint64_t index, int bit_budget) {
  const std::uint64_t count = interpretation_count(v, bit_budget);
  if (index >= count)
    throw ContractError("interpretation index " + std::to_string(index) + " out of range (" +
                        std::to_string(count) + " interpretations)");
  return Interpretation(v, index);
}

std::uint64_t encode(const Interpretation& i) { return i.bits(); }

CompiledConcept::CompiledConcept(const ConceptExpr& c, const Vocabulary& vocab) {
  // Postorder flattening; records the stack high-water mark as it goes.
  std::size_t depth = 0;
  auto emit = [&](const ConceptExpr& e, auto&& self) -> void {
    switch (e.kind()) {
      case ConceptExpr::Kind::Bot:
        program_.push_back({OpKind::Bot});
        max_stack_ = std::max(max_stack_, ++depth);
        return;
      case ConceptExpr::Kind::Top:
        program_.push_back({OpKind::Top});
        max_stack_ = std::max(max_stack_, ++depth);
        return;
      case ConceptExpr::Kind::Atom: {
        auto ix = vocab.concept_index(e.name());
        if (!ix) throw ValidationError("undeclared concept name '" + e.name() + "'");
        program_.push_back({OpKind::Concept, static_cast<std::uint32_t>(*ix)});
        max_stack_ = std::max(max_stack_, ++depth);
        return;
      }
      case ConceptExpr::Kind::Nominal: {
        auto ix = vocab.individual_index(e.name());
        if (!ix) throw ValidationError("undeclared individual name '" + e.name() + "'");
        program_.push_back({OpKind::Nominal, static_cast<std::uint32_t>(*ix)});
        max_stack_ = std::max(max_stack_, ++depth);
        return;
      }
      case ConceptExpr::Kind::Not:
        self(e.child(), self);
        program_.push_back({OpKind::Not});
        return;
      case ConceptExpr::Kind::And:
        self(e.left(), self);
        self(e.right(), self);
        program_.push_back({OpKind::And});
        --depth;
        return;
      case ConceptExpr::Kind::Or:
        self(e.left(), self);
        self(e.right(), self);
        program_.push_back({OpKind::Or});
        --depth;
        return;
      case ConceptExpr::Kind::Exists:
      case ConceptExpr::Kind::Forall: {
        auto ix = vocab.role_index(e.name());
        if (!ix) throw ValidationError("undeclared role name '" + e.name() + "'");
        self(e.child(), self);
        program_.push_back(
            {e.kind() == ConceptExpr::Kind::Exists ? OpKind::Exists : OpKind::Forall,
             static_cast<std::uint32_t>(*ix)});
        return;
      }
    }
  };
  emit(c, emit);
}

std::uint64_t CompiledConcept::evaluate(const Interpretation& i) const {
  std::vector<std::uint64_t> stack;
  return evaluate(i, stack);
}

std::uint64_t CompiledConcept::evaluate(const Interpretation& i,
                                        std::vector<std::uint64_t>& stack) const {
  const Vocabulary& v = i.vocab();
  const std::uint64_t all = universe_mask(v);
  const std::size_t u = v.universe_size();
  stack.clear();
  stack.reserve(max_stack_);
  for (const Op& op : program_) {
    switch (op.kind) {
      case OpKind::Bot:
        stack.push_back(0);
        break;
      case OpKind::Top:
        stack.push_back(all);
        break;
      case OpKind::Concept:
        stack.push_back(i.concept_extension(op.index));
        break;
      case OpKind::Nominal:
        stack.push_back(std::uint64_t{1} << op.index);
        break;
      case OpKind::Not:
        stack.back() = all & ~stack.back();
        break;
      case OpKind::And: {
        const std::uint64_t r = stack.back();
        stack.pop_back();
        stack.back() &= r;
        break;
      }
      case OpKind::Or: {
        const std::uint64_t r = stack.back();
        stack.pop_back();
        stack.back() |= r;
        break;
      }
      case OpKind::Exists: {
        const std::uint64_t member = stack.back();
        std::uint64_t result = 0;
        for (std::size_t x = 0; x < u; ++x)
          if (i.role_successors(op.index, x) & member) result |= std::uint64_t{1} << x;
        stack.back() = result;
        break;
      }
      case OpKind::Forall: {
        const std::uint64_t member = stack.back();
        std::uint64_t result = 0;
        for (std::size_t x = 0; x < u; ++x)
          if ((i.role_successors(op.index, x) & all & ~member) == 0)
            result |= std::uint64_t{1} << x;
        stack.back() = result;
        break;
      }
    }
  }
  return stack.back();
}

CompiledStatement::CompiledStatement(const Statement& s, const Vocabulary& vocab) : kind_(Kind::Gci) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Gci>) {
          kind_ = Kind::Gci;
          body_.emplace_back(ConceptExpr::conjunction(x.lhs, ConceptExpr::negation(x.rhs)), vocab);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          kind_ = Kind::ConceptAssert;
          auto ix = vocab.individual_index(x.individual);
          if (!ix) throw ValidationError("undeclared individual name '" + x.individual + "'");
          individual_ = *ix;
          body_.emplace_back(x.expr, vocab);
        } else if constexpr (std::is_same_v<T, RoleAssertion>) {
          kind_ = Kind::RoleAssert;
          auto rx = vocab.role_index(x.role);
          auto sx = vocab.individual_index(x.subject);
          auto ox = vocab.individual_index(x.object);
          if (!rx || !sx || !ox) throw ValidationError("undeclared name in role assertion");
          role_ = *rx;
          subject_ = *sx;
          object_ = *ox;
        } else {
          throw ContractError(
              "defeasible statements are not evaluated on single interpretations");
        }
      },
      s);
}

bool CompiledStatement::holds(const Interpretation& i) const {
  std::vector<std::uint64_t> stack;
  return holds(i, stack);
}

bool CompiledStatement::holds(const Interpretation& i, std::vector<std::uint64_t>& stack) const {
  switch (kind_) {
    case Kind::Gci:
      return body_.front().evaluate(i, stack) == 0;
    case Kind::ConceptAssert:
      return (body_.front().evaluate(i, stack) >> individual_) & 1;
    case Kind::RoleAssert:
      return i.role_member(role_, subject_, object_);
  }
  return false;
}

CompiledStrictPart::CompiledStrictPart(const DefeasibleKb& kb) {
  for (const auto& g : kb.tbox) statements_.emplace_back(Statement(g), kb.vocab);
  for (const auto& a : kb.abox)
    statements_.emplace_back(std::visit([](const auto& x) { return Statement(x); }, a), kb.vocab);
}

bool CompiledStrictPart::holds(const Interpretation& i) const {
  std::vector<std::uint64_t> stack;
  return holds(i, stack);
}

bool CompiledStrictPart::holds(const Interpretation& i, std::vector<std::uint64_t>& stack) const {
  for (const auto& s : statements_)
    if (!s.holds(i, stack)) return false;
  return true;
}

std::uint64_t extension(const Interpretation& i, const ConceptExpr& c) {
  return CompiledConcept(c, i.vocab()).evaluate(i);
}

std::vector<std::string> extension_names(const Interpretation& i, const ConceptExpr& c) {
  const std::uint64_t mask = extension(i, c);
  std::vector<std::string> out;
  const auto& names = i.vocab().individual_names();
  for (std::size_t a = 0; a < names.size(); ++a)
    if ((mask >> a) & 1) out.push_back(names[a]);
  return out;
}

bool satisfies(const Interpretation& i, const Gci& g) {
  // C^I subseteq D^I  <=>  (C n ~D)^I = empty
  const std::uint64_t lhs = extension(i, g.lhs);
  const std::uint64_t rhs = extension(i, g.rhs);
  return (lhs & ~rhs) == 0;
}

bool satisfies(const Interpretation& i, const ConceptAssertion& a) {
  auto ix = i.vocab().individual_index(a.individual);
  if (!ix) throw ValidationError("undeclared individual name '" + a.individual + "'");
  return (extension(i, a.expr) >> *ix) & 1;
}

bool satisfies(const Interpretation& i, const RoleAssertion& a) {
  auto s = i.vocab().individual_index(a.subject);
  auto o = i.vocab().individual_index(a.object);
  auto r = i.vocab().role_index(a.role);
  if (!s || !o || !r) throw ValidationError("undeclared name in role assertion");
  return i.role_member(*r, *s, *o);
}

bool satisfies(const Interpretation& i, const Assertion& a) {
  return std::visit([&](const auto& x) { return satisfies(i, x); }, a);
}

bool satisfies(const Interpretation& i, const Statement& s) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Dci> || std::is_same_v<T, Qdci>) {
          throw ContractError(
              "defeasible statements are not evaluated on single interpretations");
        } else {
          return satisfies(i, x);
        }
      },
      s);
}

bool satisfies_strict_part(const Interpretation& i, const DefeasibleKb& kb) {
  for (const auto& g : kb.tbox)
    if (!satisfies(i, g)) return false;
  for (const auto& a : kb.abox)
    if (!satisfies(i, a)) return false;
  return true;
}

std::string to_literal(const Interpretation& i) {
  const Vocabulary& v = i.vocab();
  nlohmann::json concepts = nlohmann::json::object();
  for (std::size_t c = 0; c < v.concept_count(); ++c) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t a = 0; a < v.universe_size(); ++a)
      if (i.concept_member(c, a)) members.push_back(v.individual_names()[a]);
    if (!members.empty()) concepts[v.concept_names()[c]] = std::move(members);
  }
  nlohmann::json roles = nlohmann::json::object();
  for (std::size_t r = 0; r < v.role_count(); ++r) {
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t s = 0; s < v.universe_size(); ++s)
      for (std::size_t o = 0; o < v.universe_size(); ++o)
        if (i.role_member(r, s, o))
          pairs.push_back({v.individual_names()[s], v.individual_names()[o]});
    if (!pairs.empty()) roles[v.role_names()[r]] = std::move(pairs);
  }
  nlohmann::json out;
  out["concepts"] = std::move(concepts);
  out["roles"] = std::move(roles);
  return out.dump();
}

Interpretation from_literal(std::string_view json_text, const Vocabulary& v) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid interpretation literal: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("interpretation literal must be a JSON object");
  if (interpretation_bits(v) > static_cast<std::size_t>(kMaxBitBudget))
    throw SizeLimitError("interpretation space needs " + std::to_string(interpretation_bits(v)) +
                         " bits, more than the representable " + std::to_string(kMaxBitBudget));
  const std::size_t u = v.universe_size();
  std::uint64_t bits = 0;
  if (doc.contains("concepts")) {
    for (const auto& [name, members] : doc["concepts"].items()) {
      const auto cx = v.concept_index(name);
      if (!cx) throw ValidationError("undeclared concept name '" + name + "'");
      if (!members.is_array())
        throw ValidationError("extension of '" + name + "' must be an array");
      for (const auto& m : members) {
        const auto ax = v.individual_index(m.get<std::string>());
        if (!ax)
          throw ValidationError("undeclared individual name '" + m.get<std::string>() + "'");
        bits |= std::uint64_t{1} << (*cx * u + *ax);
      }
    }
  }
  if (doc.contains("roles")) {
    const std::size_t base = v.concept_count() * u;
    for (const auto& [name, pairs] : doc["roles"].items()) {
      const auto rx = v.role_index(name);
      if (!rx) throw ValidationError("undeclared role name '" + name + "'");
      if (!pairs.is_array())
        throw ValidationError("extension of '" + name + "' must be an array of pairs");
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2)
          throw ValidationError("role extension entries must be [subject, object] pairs");
        const auto sx = v.individual_index(p[0].get<std::string>());
        const auto ox = v.individual_index(p[1].get<std::string>());
        if (!sx || !ox) throw ValidationError("undeclared individual name in role pair");
        bits |= std::uint64_t{1} << (base + *rx * u * u + *sx * u + *ox);
      }
    }
  }
  return Interpretation(v, bits);
}

}  // namespace alcor
