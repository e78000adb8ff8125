#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/graph_map.hpp"

namespace fgc {

struct ProfileRow {
  std::int64_t n = 0;
  std::int64_t p = 0;
  bool exact = false;
  std::int64_t p_rec = -1; // -1 when not computed
  bool rec_stable = false;
};

struct ComplexityProfile {
  std::vector<ProfileRow> rows; // n = 1..nmax
  std::int64_t prefix_length = 0;
  bool has_recurrence = false;

  const ProfileRow& row(int n) const { return rows[static_cast<std::size_t>(n - 1)]; }
  std::string to_csv() const; // header n,p,exact,p_rec,rec_stable
};

// Exact distinct-factor counts of the prefix; samples with n <= exact_upto
// are marked exact for the underlying infinite word.
ComplexityProfile complexity_profile(std::span<const std::int32_t> prefix, int nmax,
                                     std::int64_t exact_upto);

// Recurrence estimates: distinct factor counts of doubled truncations,
// rec_stable when the last `rec_doublings` truncations agree.
void add_recurrence(ComplexityProfile& profile, std::span<const std::int32_t> prefix, int nmax,
                    const Config& config);

// Total complexity of a path: factors over the union of f#^k(gamma),
// k = 0..iterate_cap, subject to the symbol budget.
ComplexityProfile total_complexity(const GraphSelfMap& f, const EdgePath& gamma, int nmax,
                                   int iterate_cap, std::int64_t budget);

} // namespace fgc
