#include "core/transport.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace fgc {

TransportResult transport_prefix(const GroupEndo& phi, std::span<const Letter> input,
                                 const Config& config) {
  TransportResult result;
  std::int64_t margin = config.transport_margin > 0
                            ? config.transport_margin
                            : 4 * static_cast<std::int64_t>(phi.max_image_length()) *
                                  phi.alphabet().symmetrized_size();
  margin = std::max<std::int64_t>(margin, 2);

  while (true) {
    Word out;
    out.reserve(input.size());
    std::int64_t frozen = 0;
    bool violated = false;
    for (Letter x : input) {
      const Word& img = phi.generator_image(x >> 1);
      auto push = [&](Letter y) {
        if (!out.empty() && out.back() == inverse(y)) {
          out.pop_back();
          if (static_cast<std::int64_t>(out.size()) < frozen) violated = true;
        } else {
          out.push_back(y);
        }
      };
      if (!is_inverse_letter(x))
        for (Letter y : img) push(y);
      else
        for (auto it = img.rbegin(); it != img.rend(); ++it) push(inverse(*it));
      if (violated) break;
      frozen = std::max(frozen, static_cast<std::int64_t>(out.size()) - margin);
    }
    if (!violated) {
      result.symbols = std::move(out);
      result.margin = margin;
      return result;
    }
    margin *= 2;
    ++result.margin_doublings;
    if (margin > (1LL << 40)) throw BudgetError("transport margin grew without bound");
  }
}

} // namespace fgc
