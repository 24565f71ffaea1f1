#include "schreier/word.hpp"

#include <cctype>

#include "schreier/errors.hpp"

namespace schreier {

Word reduce(std::vector<Letter> raw) {
  Word out;
  out.letters_.reserve(raw.size());
  for (Letter g : raw) {
    if (!out.letters_.empty() && out.letters_.back() == g.inverted()) out.letters_.pop_back();
    else out.letters_.push_back(g);
  }
  return out;
}

Word reduce(std::vector<Letter> raw, const Alphabet& alphabet) {
  for (Letter g : raw)
    if (g.label >= alphabet.size()) throw InvalidInput("unknown label index " + std::to_string(g.label));
  return reduce(std::move(raw));
}

Word Word::inverse() const {
  std::vector<Letter> raw(letters_.rbegin(), letters_.rend());
  for (Letter& g : raw) g = g.inverted();
  return reduce(std::move(raw));
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> raw = u.letters_;
  raw.insert(raw.end(), v.letters_.begin(), v.letters_.end());
  return reduce(std::move(raw));
}

Word power(Letter g, std::uint64_t exponent) { return reduce(std::vector<Letter>(exponent, g)); }

Word conjugate(const Word& u, const Word& w) { return u * w * u.inverse(); }

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  if (text.empty() || text == "1") return Word{};
  if (alphabet.compact() && text.find('.') == std::string_view::npos) {
    for (char c : text) {
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      auto label = alphabet.find(std::string(1, lower));
      if (!label) throw InvalidInput("unknown letter '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
      raw.push_back(Letter{*label, c != lower});
    }
    return reduce(std::move(raw));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view token = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    bool inverse = token.ends_with("^-1");
    if (inverse) token.remove_suffix(3);
    auto label = alphabet.find(token);
    if (!label) throw InvalidInput("unknown label '" + std::string(token) + "' in word '" + std::string(text) + "'");
    raw.push_back(Letter{*label, inverse});
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return reduce(std::move(raw));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  const bool compact = alphabet.compact();
  for (Letter g : w.letters()) {
    if (!compact && !out.empty()) out += '.';
    out += alphabet.spell(g);
  }
  return out;
}

}  // namespace schreier
