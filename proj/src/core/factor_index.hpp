#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fgc {

// Linear-size factor index: suffix array plus LCP over an int32 text.
// Separator symbols must be distinct negative values; factors never cross
// them, which makes multi-string indexing (total complexity) uniform.
class FactorIndex {
 public:
  FactorIndex(std::vector<std::int32_t> text, int nmax);

  // Number of distinct length-n factors, 1 <= n <= nmax.
  std::int64_t count(int n) const { return counts_[static_cast<std::size_t>(n)]; }
  int nmax() const { return nmax_; }

  // Visits every distinct factor of length <= cap exactly once.
  void enumerate_factors(int cap,
                         const std::function<void(const std::int32_t*, int)>& fn) const;

  std::int64_t text_size() const { return static_cast<std::int64_t>(text_.size()); }

 private:
  void build();

  std::vector<std::int32_t> text_;
  int nmax_;
  std::vector<std::int32_t> sa_, lcp_, reach_;
  std::vector<std::int64_t> counts_; // index 1..nmax
};

// Brute-force oracle used by the tests and the acceptance suite.
std::vector<std::int64_t> brute_force_factor_counts(std::span<const std::int32_t> text, int nmax);

} // namespace fgc
