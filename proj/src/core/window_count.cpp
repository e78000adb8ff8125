#include "core/window_count.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace fgc {

std::string window_class_name(WindowClass c) {
  switch (c) {
    case WindowClass::One: return "1";
    case WindowClass::LogLog: return "loglog";
    case WindowClass::Log: return "log";
  }
  return "?";
}

void validate_window_params(const WindowParams& p) {
  if (p.d1 < 1 || p.d2 < 1) throw PreconditionError("window exponents must be >= 1");
  if (!(p.c1 > 0.0) || !(p.c2 > 0.0)) throw PreconditionError("window constants must be positive");
  if (!(p.l1 > 1.0) || !(p.l1 <= p.l2)) throw PreconditionError("rates must satisfy 1 < l1 <= l2");
  if (p.l1 == p.l2 && p.d1 == p.d2 && !(p.c1 < p.c2))
    throw PreconditionError("the non-divergent case needs c1 < c2");
}

namespace {
// c * p^d * l^p in long double, saturating well above any queried n.
long double bound(double c, int d, double l, std::int64_t p) {
  long double v = static_cast<long double>(c);
  for (int i = 0; i < d; ++i) {
    v *= static_cast<long double>(p);
    if (v > 1e300L) return 1e300L;
  }
  v *= std::pow(static_cast<long double>(l), static_cast<long double>(p));
  return v > 1e300L ? 1e300L : v;
}
} // namespace

std::int64_t window_count(const WindowParams& params, std::int64_t n) {
  validate_window_params(params);
  std::int64_t count = 0;
  for (std::int64_t p = 1;; ++p) {
    long double lower = bound(params.c1, params.d1, params.l1, p);
    if (lower > static_cast<long double>(n)) break;
    long double upper = bound(params.c2, params.d2, params.l2, p);
    if (upper >= static_cast<long double>(n)) ++count;
  }
  return count;
}

WindowClass window_class(const WindowParams& p) {
  validate_window_params(p);
  if (p.l1 < p.l2) return WindowClass::Log;
  if (p.d1 < p.d2) return WindowClass::LogLog;
  return WindowClass::One;
}

double phi_value(WindowClass c, std::int64_t n) {
  double x = static_cast<double>(n);
  switch (c) {
    case WindowClass::One: return 1.0;
    case WindowClass::LogLog: return std::log(std::log(x));
    case WindowClass::Log: return std::log(x);
  }
  return 1.0;
}

} // namespace fgc
