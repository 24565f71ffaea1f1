#include "schreier/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

bool is_compact_name(const std::string& s) {
  return s.size() == 1 && std::islower(static_cast<unsigned char>(s[0]));
}

std::vector<std::string> inverse_spellings(const std::string& s) {
  std::vector<std::string> out{s + "^-1"};
  if (is_compact_name(s)) out.emplace_back(1, static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))));
  return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& s = names_[i];
    if (s.empty()) throw InvalidInput("empty label name");
    if (s.find_first_of(". ") != std::string::npos || s.ends_with("^-1"))
      throw InvalidInput("label name '" + s + "' is not allowed");
    for (std::size_t j = 0; j < names_.size(); ++j) {
      if (i != j && names_[j] == s) throw InvalidInput("duplicate label '" + s + "'");
      for (const auto& inv : inverse_spellings(names_[j]))
        if (inv == s) throw InvalidInput("label '" + s + "' clashes with the inverse of '" + names_[j] + "'");
    }
  }
}

std::optional<std::uint32_t> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names_.begin());
}

std::uint32_t Alphabet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidInput("unknown label '" + std::string(name) + "'");
}

bool Alphabet::compact() const {
  return std::all_of(names_.begin(), names_.end(), is_compact_name);
}

std::string Alphabet::spell(Letter g) const {
  const std::string& s = name(g.label);
  if (!g.inverse) return s;
  if (compact()) return std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))));
  return s + "^-1";
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    out.push_back(Letter{i, false});
    out.push_back(Letter{i, true});
  }
  return out;
}

Alphabet Alphabet::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = names_;
  for (const auto& s : extra) {
    if (find(s)) throw InvalidInput("alphabet clash: label '" + s + "' already present");
    all.push_back(s);
  }
  return Alphabet(std::move(all));
}

Alphabet Alphabet::without(const std::vector<std::string>& drop) const {
  std::vector<std::string> kept;
  for (const auto& s : drop) index(s);
  for (const auto& s : names_)
    if (std::find(drop.begin(), drop.end(), s) == drop.end()) kept.push_back(s);
  return Alphabet(std::move(kept));
}

}  // namespace schreier
