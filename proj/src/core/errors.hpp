#pragma once

#include <stdexcept>
#include <string>

namespace fgc {

// Error taxonomy mirrored by the C API status codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  using Error::Error;
};
struct AlphabetError : Error {
  using Error::Error;
};
struct InvalidMapError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct NoStabilizationError : Error {
  using Error::Error;
};
struct BudgetError : Error {
  using Error::Error;
};
struct TermAlphabetError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

} // namespace fgc
