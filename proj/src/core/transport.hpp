#pragma once

#include <cstdint>
#include <span>

#include "core/config.hpp"
#include "core/endo.hpp"

namespace fgc {

struct TransportResult {
  Word symbols;
  std::int64_t margin = 0;
  int margin_doublings = 0; // restarts after a committed symbol would cancel
};

// Image of a boundary-word prefix under a verified automorphism. Symbols are
// committed once they sit more than `margin` behind the write head; a
// cancellation reaching a committed symbol doubles the margin and restarts.
// The default margin is 4 * maxImageLength * alphabetSize.
TransportResult transport_prefix(const GroupEndo& phi, std::span<const Letter> input,
                                 const Config& config);

} // namespace fgc
