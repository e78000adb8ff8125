#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace fgc {

// Letters of a symmetrized alphabet are dense ids: generator i occupies
// 2*i, its formal inverse 2*i+1, so the involution is id ^ 1.
using Letter = std::int32_t;

inline Letter inverse(Letter x) { return x ^ 1; }
inline bool is_inverse_letter(Letter x) { return (x & 1) != 0; }

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> generators);

  int rank() const { return static_cast<int>(names_.size()); }
  int symmetrized_size() const { return 2 * rank(); }

  const std::string& generator_name(int i) const { return names_[i]; }

  // Token of any letter; inverses are the uppercased generator name.
  std::string letter_token(Letter x) const;

  // Parses a token, throws AlphabetError on unknown symbols.
  Letter parse_token(const std::string& token) const;
  bool has_token(const std::string& token) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
};

} // namespace fgc
