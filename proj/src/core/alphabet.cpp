#include "core/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "core/errors.hpp"

namespace fgc {

namespace {

std::string upcase(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

bool valid_generator_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c) || c == '_';
  });
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> generators) : names_(std::move(generators)) {
  if (names_.empty()) throw AlphabetError("alphabet needs at least one generator");
  for (int i = 0; i < rank(); ++i) {
    const std::string& name = names_[i];
    if (!valid_generator_name(name))
      throw AlphabetError("generator name must be lowercase: '" + name + "'");
    if (!index_.emplace(name, static_cast<Letter>(2 * i)).second)
      throw AlphabetError("duplicate generator '" + name + "'");
    index_.emplace(upcase(name), static_cast<Letter>(2 * i + 1));
  }
}

std::string Alphabet::letter_token(Letter x) const {
  const std::string& base = names_.at(static_cast<std::size_t>(x >> 1));
  return is_inverse_letter(x) ? upcase(base) : base;
}

Letter Alphabet::parse_token(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) throw AlphabetError("unknown symbol '" + token + "'");
  return it->second;
}

bool Alphabet::has_token(const std::string& token) const {
  return index_.find(token) != index_.end();
}

} // namespace fgc
