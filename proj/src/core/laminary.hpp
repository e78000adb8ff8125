#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "core/config.hpp"

namespace fgc {

// Finite slice of the laminary language: all words u with |u| <= cap such
// that u or u^{-1} recurs in the stream, closed under factors and inverses.
struct LaminaryLanguage {
  int cap = 0;
  bool stable = true; // recurrence counts stabilized at every length
  std::unordered_set<std::string> members;
  std::vector<std::int64_t> counts; // per length, index 1..cap

  bool contains(std::span<const std::int32_t> word) const;
  static std::string pack(std::span<const std::int32_t> word);
};

std::vector<std::int32_t> inverse_symbols(std::span<const std::int32_t> word);

LaminaryLanguage laminary_language(std::span<const std::int32_t> prefix, int cap,
                                   const Config& config);

} // namespace fgc
