#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/alphabet.hpp"

namespace schreier {

// Freely reduced word. Construct through reduce() or the parse helpers.
class Word {
 public:
  Word() = default;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() <=> v.size();
    return u.letters_ <=> v.letters_;
  }

 private:
  friend Word reduce(std::vector<Letter> raw);
  std::vector<Letter> letters_;
};

Word reduce(std::vector<Letter> raw);

// Checks labels against the alphabet before reducing; throws InvalidInput.
Word reduce(std::vector<Letter> raw, const Alphabet& alphabet);

Word power(Letter g, std::uint64_t exponent);

// u w u^-1
Word conjugate(const Word& u, const Word& w);

// Compact alphabets: `aabA`. Otherwise dot-separated names with `^-1`
// suffixes, e.g. `h1.h2^-1`. "" and "1" denote the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace schreier
