#include "alcor/vocabulary.hpp"

#include "alcor/errors.hpp"

namespace alcor {

Vocabulary::Vocabulary(std::vector<std::string> concepts, std::vector<std::string> roles,
                       std::vector<std::string> individuals)
    : concepts_(std::move(concepts)), roles_(std::move(roles)), individuals_(std::move(individuals)) {
  if (individuals_.empty()) {
    throw ValidationError("a vocabulary needs at least one individual name");
  }
  if (individuals_.size() > kMaxUniverse) {
    throw ValidationError("at most " + std::to_string(kMaxUniverse) +
                          " individual names are supported");
  }
  auto declare = [this](const std::vector<std::string>& names, NameKind kind) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw ValidationError("empty name in vocabulary");
      auto [it, fresh] = index_.emplace(names[i], std::make_pair(kind, i));
      if (!fresh) throw ValidationError("duplicate declaration of '" + names[i] + "'");
    }
  };
  declare(concepts_, NameKind::Concept);
  declare(roles_, NameKind::Role);
  declare(individuals_, NameKind::Individual);
}

std::optional<std::size_t> Vocabulary::concept_index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end() || it->second.first != NameKind::Concept) return std::nullopt;
  return it->second.second;
}

std::optional<std::size_t> Vocabulary::role_index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end() || it->second.first != NameKind::Role) return std::nullopt;
  return it->second.second;
}

std::optional<std::size_t> Vocabulary::individual_index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end() || it->second.first != NameKind::Individual) return std::nullopt;
  return it->second.second;
}

}  // namespace alcor
