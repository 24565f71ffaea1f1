#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schreier {

// A signed generator: label index plus inversion flag.
struct Letter {
  std::uint32_t label = 0;
  bool inverse = false;

  constexpr Letter inverted() const { return Letter{label, !inverse}; }
  constexpr std::uint32_t code() const { return 2 * label + (inverse ? 1u : 0u); }
  static constexpr Letter from_code(std::uint32_t c) { return Letter{c / 2, (c & 1u) != 0}; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::uint32_t label) const { return names_.at(label); }

  std::optional<std::uint32_t> find(std::string_view name) const;
  // Throws InvalidInput for unknown names.
  std::uint32_t index(std::string_view name) const;

  // True when every label is a single lowercase character, so words can be
  // spelled as `aabA`.
  bool compact() const;

  // "a" / "A" for compact alphabets, "alpha" / "alpha^-1" otherwise.
  std::string spell(Letter g) const;

  // All signed letters in traversal order: a, a^-1, b, b^-1, ...
  std::vector<Letter> letters() const;

  Alphabet extended(const std::vector<std::string>& extra) const;
  Alphabet without(const std::vector<std::string>& drop) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace schreier
