#include "core/factor_index.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "core/errors.hpp"

namespace fgc {

FactorIndex::FactorIndex(std::vector<std::int32_t> text, int nmax)
    : text_(std::move(text)), nmax_(std::max(0, nmax)) {
  build();
}

void FactorIndex::build() {
  std::int64_t n = static_cast<std::int64_t>(text_.size());
  counts_.assign(static_cast<std::size_t>(nmax_) + 1, 0);
  if (n == 0) return;

  // Distance to the next separator (exclusive); factors live inside segments.
  reach_.assign(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = n - 1; i >= 0; --i) {
    if (text_[static_cast<std::size_t>(i)] < 0)
      reach_[static_cast<std::size_t>(i)] = 0;
    else
      reach_[static_cast<std::size_t>(i)] =
          (i + 1 < n ? reach_[static_cast<std::size_t>(i + 1)] : 0) + 1;
  }

  // Suffix array by prefix doubling with counting sorts.
  std::vector<std::int32_t> rank(static_cast<std::size_t>(n)), tmp(static_cast<std::size_t>(n));
  sa_.resize(static_cast<std::size_t>(n));
  {
    // Initial ranks from sorted symbols.
    std::vector<std::int64_t> order(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
      return text_[static_cast<std::size_t>(a)] < text_[static_cast<std::size_t>(b)];
    });
    std::int32_t r = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      if (i > 0 && text_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] !=
                       text_[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])])
        ++r;
      rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = r;
      sa_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(order[static_cast<std::size_t>(i)]);
    }
  }

  std::vector<std::int32_t> cnt, sa2(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k < n; k <<= 1) {
    // Sort by second key: suffixes with i + k >= n first.
    std::int64_t p = 0;
    for (std::int64_t i = n - k; i < n; ++i) sa2[static_cast<std::size_t>(p++)] = static_cast<std::int32_t>(i);
    for (std::int64_t i = 0; i < n; ++i) {
      std::int32_t s = sa_[static_cast<std::size_t>(i)];
      if (s >= k) sa2[static_cast<std::size_t>(p++)] = s - static_cast<std::int32_t>(k);
    }
    // Stable counting sort by first key.
    std::int32_t classes = rank[static_cast<std::size_t>(sa_[static_cast<std::size_t>(n - 1)])] + 1;
    cnt.assign(static_cast<std::size_t>(classes), 0);
    for (std::int64_t i = 0; i < n; ++i) ++cnt[static_cast<std::size_t>(rank[static_cast<std::size_t>(i)])];
    for (std::int32_t i = 1; i < classes; ++i) cnt[static_cast<std::size_t>(i)] += cnt[static_cast<std::size_t>(i - 1)];
    for (std::int64_t i = n - 1; i >= 0; --i) {
      std::int32_t s = sa2[static_cast<std::size_t>(i)];
      sa_[static_cast<std::size_t>(--cnt[static_cast<std::size_t>(rank[static_cast<std::size_t>(s)])])] = s;
    }
    // Re-rank.
    tmp[static_cast<std::size_t>(sa_[0])] = 0;
    std::int32_t r = 0;
    for (std::int64_t i = 1; i < n; ++i) {
      std::int32_t a = sa_[static_cast<std::size_t>(i)], b = sa_[static_cast<std::size_t>(i - 1)];
      bool same = rank[static_cast<std::size_t>(a)] == rank[static_cast<std::size_t>(b)];
      if (same) {
        std::int32_t ra = a + k < n ? rank[static_cast<std::size_t>(a + k)] : -1;
        std::int32_t rb = b + k < n ? rank[static_cast<std::size_t>(b + k)] : -1;
        same = ra == rb;
      }
      tmp[static_cast<std::size_t>(a)] = same ? r : ++r;
    }
    rank.swap(tmp);
    if (rank[static_cast<std::size_t>(sa_[static_cast<std::size_t>(n - 1)])] == n - 1) break;
  }

  // Kasai LCP: lcp_[i] = lcp(sa_[i-1], sa_[i]).
  std::vector<std::int32_t> inv(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(sa_[static_cast<std::size_t>(i)])] = static_cast<std::int32_t>(i);
  lcp_.assign(static_cast<std::size_t>(n), 0);
  std::int64_t h = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t r = inv[static_cast<std::size_t>(i)];
    if (r > 0) {
      std::int64_t j = sa_[static_cast<std::size_t>(r - 1)];
      while (i + h < n && j + h < n &&
             text_[static_cast<std::size_t>(i + h)] == text_[static_cast<std::size_t>(j + h)])
        ++h;
      lcp_[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(h);
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }

  // Per-length distinct counts via a difference array clipped to nmax: the
  // suffix at rank r contributes the lengths (lcp[r], reach(sa[r])].
  std::vector<std::int64_t> diff(static_cast<std::size_t>(nmax_) + 2, 0);
  for (std::int64_t r = 0; r < n; ++r) {
    std::int64_t lo = lcp_[static_cast<std::size_t>(r)];
    std::int64_t hi = reach_[static_cast<std::size_t>(sa_[static_cast<std::size_t>(r)])];
    lo = std::min<std::int64_t>(lo, nmax_);
    hi = std::min<std::int64_t>(hi, nmax_);
    if (hi > lo) {
      ++diff[static_cast<std::size_t>(lo + 1)];
      --diff[static_cast<std::size_t>(hi + 1)];
    }
  }
  std::int64_t acc = 0;
  for (int len = 1; len <= nmax_; ++len) {
    acc += diff[static_cast<std::size_t>(len)];
    counts_[static_cast<std::size_t>(len)] = acc;
  }
}

void FactorIndex::enumerate_factors(int cap,
                                    const std::function<void(const std::int32_t*, int)>& fn) const {
  std::int64_t n = static_cast<std::int64_t>(text_.size());
  for (std::int64_t r = 0; r < n; ++r) {
    std::int32_t start = sa_[static_cast<std::size_t>(r)];
    std::int64_t lo = lcp_[static_cast<std::size_t>(r)];
    std::int64_t hi = std::min<std::int64_t>(reach_[static_cast<std::size_t>(start)], cap);
    for (std::int64_t len = lo + 1; len <= hi; ++len)
      fn(text_.data() + start, static_cast<int>(len));
  }
}

std::vector<std::int64_t> brute_force_factor_counts(std::span<const std::int32_t> text, int nmax) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(nmax) + 1, 0);
  std::int64_t n = static_cast<std::int64_t>(text.size());
  for (int len = 1; len <= nmax; ++len) {
    std::unordered_set<std::string> seen;
    for (std::int64_t i = 0; i + len <= n; ++i) {
      bool ok = true;
      for (int j = 0; j < len; ++j)
        if (text[static_cast<std::size_t>(i + j)] < 0) ok = false;
      if (!ok) continue;
      seen.emplace(reinterpret_cast<const char*>(text.data() + i),
                   static_cast<std::size_t>(len) * sizeof(std::int32_t));
    }
    counts[static_cast<std::size_t>(len)] = static_cast<std::int64_t>(seen.size());
  }
  return counts;
}

} // namespace fgc
