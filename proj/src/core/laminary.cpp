#include "core/laminary.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/factor_index.hpp"
#include "core/profiles.hpp"

namespace fgc {

std::string LaminaryLanguage::pack(std::span<const std::int32_t> word) {
  return std::string(reinterpret_cast<const char*>(word.data()),
                     word.size() * sizeof(std::int32_t));
}

bool LaminaryLanguage::contains(std::span<const std::int32_t> word) const {
  return members.count(pack(word)) > 0;
}

std::vector<std::int32_t> inverse_symbols(std::span<const std::int32_t> word) {
  std::vector<std::int32_t> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(*it ^ 1);
  return out;
}

LaminaryLanguage laminary_language(std::span<const std::int32_t> prefix, int cap,
                                   const Config& config) {
  LaminaryLanguage lang;
  lang.cap = cap;
  lang.counts.assign(static_cast<std::size_t>(cap) + 1, 0);

  // Recurrent factors: factors of the deepest stable truncation.
  ComplexityProfile probe = complexity_profile(prefix, std::min<std::int64_t>(cap, static_cast<std::int64_t>(prefix.size())), 0);
  add_recurrence(probe, prefix, probe.rows.empty() ? 0 : static_cast<int>(probe.rows.size()),
                 config);
  for (const ProfileRow& row : probe.rows)
    if (!row.rec_stable) lang.stable = false;

  std::int64_t len = static_cast<std::int64_t>(prefix.size());
  std::int64_t tail = len / 2;
  FactorIndex index(std::vector<std::int32_t>(prefix.begin() + static_cast<std::ptrdiff_t>(tail),
                                              prefix.end()),
                    cap);

  // Factors of the tail, then closure under inverse. Factor closure holds by
  // construction: every factor of a member is a tail factor or the inverse of
  // one.
  std::vector<std::vector<std::int32_t>> found;
  index.enumerate_factors(cap, [&](const std::int32_t* ptr, int n) {
    found.emplace_back(ptr, ptr + n);
  });
  for (const auto& w : found) {
    if (lang.members.insert(LaminaryLanguage::pack(w)).second)
      ++lang.counts[w.size()];
    std::vector<std::int32_t> winv = inverse_symbols(w);
    if (lang.members.insert(LaminaryLanguage::pack(winv)).second)
      ++lang.counts[winv.size()];
  }
  return lang;
}

} // namespace fgc
