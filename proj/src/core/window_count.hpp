#pragma once

#include <cstdint>
#include <string>

namespace fgc {

// Window counting for the three divergence regimes: P_n is the number of
// integers p with c1 * p^d1 * l1^p <= n <= c2 * p^d2 * l2^p.
struct WindowParams {
  double c1 = 1.0, c2 = 1.0;
  int d1 = 1, d2 = 1;
  double l1 = 2.0, l2 = 2.0;
};

enum class WindowClass { One, LogLog, Log };

std::string window_class_name(WindowClass c);

// Throws PreconditionError unless d1,d2 >= 1, c1,c2 > 0, 1 < l1 <= l2, and
// c1 < c2 in the fully non-divergent case.
void validate_window_params(const WindowParams& p);

std::int64_t window_count(const WindowParams& p, std::int64_t n); // exact scan
WindowClass window_class(const WindowParams& p);
double phi_value(WindowClass c, std::int64_t n);

} // namespace fgc
