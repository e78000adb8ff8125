#include "core/profiles.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"
#include "core/factor_index.hpp"

namespace fgc {

std::string ComplexityProfile::to_csv() const {
  std::ostringstream out;
  out << "n,p,exact,p_rec,rec_stable\n";
  for (const ProfileRow& r : rows)
    out << r.n << ',' << r.p << ',' << (r.exact ? 1 : 0) << ',' << r.p_rec << ','
        << (r.rec_stable ? 1 : 0) << '\n';
  return out.str();
}

ComplexityProfile complexity_profile(std::span<const std::int32_t> prefix, int nmax,
                                     std::int64_t exact_upto) {
  if (nmax > static_cast<std::int64_t>(prefix.size()))
    throw PreconditionError("nmax exceeds the prefix length");
  ComplexityProfile profile;
  profile.prefix_length = static_cast<std::int64_t>(prefix.size());
  FactorIndex index(std::vector<std::int32_t>(prefix.begin(), prefix.end()), nmax);
  profile.rows.reserve(static_cast<std::size_t>(nmax));
  for (int n = 1; n <= nmax; ++n) {
    ProfileRow row;
    row.n = n;
    row.p = index.count(n);
    row.exact = n <= exact_upto;
    profile.rows.push_back(row);
  }
  return profile;
}

void add_recurrence(ComplexityProfile& profile, std::span<const std::int32_t> prefix, int nmax,
                    const Config& config) {
  std::int64_t len = static_cast<std::int64_t>(prefix.size());
  int doublings = std::max(1, config.rec_doublings);
  // Truncation points L/2, L/4, ..., smallest first.
  std::vector<std::int64_t> cuts;
  std::int64_t cut = len / 2;
  for (int i = 0; i <= doublings && cut >= 16; ++i) {
    cuts.push_back(cut);
    cut /= 2;
  }
  std::reverse(cuts.begin(), cuts.end());
  if (cuts.empty()) cuts.push_back(0);

  std::vector<std::vector<std::int64_t>> counts;
  for (std::int64_t t : cuts) {
    FactorIndex index(std::vector<std::int32_t>(prefix.begin() + static_cast<std::ptrdiff_t>(t),
                                                prefix.end()),
                      nmax);
    std::vector<std::int64_t> c(static_cast<std::size_t>(nmax) + 1, 0);
    for (int n = 1; n <= nmax; ++n) c[static_cast<std::size_t>(n)] = index.count(n);
    counts.push_back(std::move(c));
  }

  profile.has_recurrence = true;
  std::int64_t deepest_window = len - cuts.back();
  for (int n = 1; n <= nmax && n <= static_cast<int>(profile.rows.size()); ++n) {
    ProfileRow& row = profile.rows[static_cast<std::size_t>(n - 1)];
    row.p_rec = counts.back()[static_cast<std::size_t>(n)];
    bool stable = static_cast<int>(counts.size()) >= doublings;
    for (std::size_t j = counts.size() >= static_cast<std::size_t>(doublings)
                             ? counts.size() - static_cast<std::size_t>(doublings)
                             : 0;
         j + 1 < counts.size() && stable; ++j)
      if (counts[j][static_cast<std::size_t>(n)] != counts[j + 1][static_cast<std::size_t>(n)])
        stable = false;
    if (deepest_window < 4 * static_cast<std::int64_t>(n)) stable = false;
    row.rec_stable = stable;
  }
}

ComplexityProfile total_complexity(const GraphSelfMap& f, const EdgePath& gamma, int nmax,
                                   int iterate_cap, std::int64_t budget) {
  if (gamma.empty()) throw PreconditionError("total complexity needs a non-trivial path");
  std::vector<std::int32_t> text;
  EdgePath cur = gamma;
  std::int32_t separator = -1;
  for (int k = 0; k <= iterate_cap; ++k) {
    if (k > 0) {
      cur = f.tighten(cur);
      if (cur.empty()) break;
      text.push_back(separator--);
    }
    if (static_cast<std::int64_t>(text.size() + cur.size()) > budget) break;
    text.insert(text.end(), cur.begin(), cur.end());
  }
  ComplexityProfile profile;
  profile.prefix_length = static_cast<std::int64_t>(text.size());
  int effective = static_cast<int>(std::min<std::int64_t>(nmax, static_cast<std::int64_t>(text.size())));
  FactorIndex index(std::move(text), effective);
  for (int n = 1; n <= effective; ++n) {
    ProfileRow row;
    row.n = n;
    row.p = index.count(n);
    row.exact = true; // exact counts of the materialized union
    profile.rows.push_back(row);
  }
  return profile;
}

} // namespace fgc
