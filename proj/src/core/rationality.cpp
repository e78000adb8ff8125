#include "core/rationality.hpp"

#include <vector>

#include "core/errors.hpp"

namespace fgc {

RationalityVerdict rationality_check(std::span<const std::int32_t> prefix) {
  std::int64_t len = static_cast<std::int64_t>(prefix.size());
  if (len < 4) throw PreconditionError("rationality check needs at least 4 symbols");

  // KMP failure function of the second half gives its minimal period.
  std::int64_t start = len / 2;
  std::int64_t m = len - start;
  std::vector<std::int64_t> fail(static_cast<std::size_t>(m), 0);
  for (std::int64_t i = 1; i < m; ++i) {
    std::int64_t k = fail[static_cast<std::size_t>(i - 1)];
    while (k > 0 && prefix[static_cast<std::size_t>(start + i)] !=
                        prefix[static_cast<std::size_t>(start + k)])
      k = fail[static_cast<std::size_t>(k - 1)];
    if (prefix[static_cast<std::size_t>(start + i)] == prefix[static_cast<std::size_t>(start + k)])
      ++k;
    fail[static_cast<std::size_t>(i)] = k;
  }
  std::int64_t period = m - fail[static_cast<std::size_t>(m - 1)];

  RationalityVerdict verdict;
  if (period > m / 2) return verdict; // fewer than two periods in the tail

  // Extend the periodicity to the left.
  std::int64_t q = start;
  while (q > 0 && prefix[static_cast<std::size_t>(q - 1)] ==
                      prefix[static_cast<std::size_t>(q - 1 + period)])
    --q;
  if (q > len / 2) return verdict;
  if (len - q < 2 * period) return verdict;

  verdict.status = RationalityVerdict::Status::PeriodicCandidate;
  verdict.period = period;
  verdict.preperiod = q;
  return verdict;
}

} // namespace fgc
