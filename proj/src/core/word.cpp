#include "core/word.hpp"

#include <sstream>

namespace fgc {

Word reduce(std::span<const Letter> raw) {
  Word out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    if (!out.empty() && out.back() == inverse(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

bool is_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse(w[i - 1])) return false;
  return true;
}

void append_reduced(Word& w, std::span<const Letter> extra) {
  for (Letter x : extra) {
    if (!w.empty() && w.back() == inverse(x))
      w.pop_back();
    else
      w.push_back(x);
  }
}

Word inverse_word(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word concat_reduced(std::span<const Letter> a, std::span<const Letter> b) {
  Word out(a.begin(), a.end());
  append_reduced(out, b);
  return out;
}

std::string format_word(const Alphabet& alphabet, std::span<const Letter> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.letter_token(w[i]);
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(alphabet.parse_token(token));
  return out;
}

} // namespace fgc
