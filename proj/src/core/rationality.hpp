#pragma once

#include <cstdint>
#include <span>

namespace fgc {

struct RationalityVerdict {
  enum class Status { AperiodicSoFar, PeriodicCandidate };
  Status status = Status::AperiodicSoFar;
  std::int64_t period = 0;
  std::int64_t preperiod = 0;
};

// Border analysis of the prefix: minimal period of the second half, extended
// left as far as it holds. A candidate is reported only when the periodic
// tail covers at least half the prefix and at least two full periods.
// Semi-decision: AperiodicSoFar never certifies aperiodicity.
RationalityVerdict rationality_check(std::span<const std::int32_t> prefix);

} // namespace fgc
