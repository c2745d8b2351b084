#ifndef ALCOR_VOCABULARY_HPP
#define ALCOR_VOCABULARY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace alcor {

// The signature a knowledge base is written over: three pairwise-disjoint,
// duplicate-free name lists.  Individual names double as the universe of
// every Herbrand interpretation, so that list must be non-empty.  Declaration
// order is significant; it fixes the bit layout used when enumerating
// interpretations, so it is preserved by construction and serialization.
//
// Individual sets are manipulated as 64-bit masks throughout the engine,
// which caps the universe at 62 names (comfortably above anything the bit
// budget admits anyway).
class Vocabulary {
 public:
  Vocabulary(std::vector<std::string> concepts, std::vector<std::string> roles,
             std::vector<std::string> individuals);

  const std::vector<std::string>& concept_names() const { return concepts_; }
  const std::vector<std::string>& role_names() const { return roles_; }
  const std::vector<std::string>& individual_names() const { return individuals_; }

  std::size_t concept_count() const { return concepts_.size(); }
  std::size_t role_count() const { return roles_.size(); }
  std::size_t universe_size() const { return individuals_.size(); }

  std::optional<std::size_t> concept_index(std::string_view name) const;
  std::optional<std::size_t> role_index(std::string_view name) const;
  std::optional<std::size_t> individual_index(std::string_view name) const;

  bool operator==(const Vocabulary& o) const {
    return concepts_ == o.concepts_ && roles_ == o.roles_ && individuals_ == o.individuals_;
  }
  bool operator!=(const Vocabulary& o) const { return !(*this == o); }

  static constexpr std::size_t kMaxUniverse = 62;

 private:
  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;
  std::vector<std::string> individuals_;

  enum class NameKind { Concept, Role, Individual };
  std::unordered_map<std::string, std::pair<NameKind, std::size_t>> index_;
};

}  // namespace alcor

#endif  // ALCOR_VOCABULARY_HPP
