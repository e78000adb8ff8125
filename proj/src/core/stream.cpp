#include "core/stream.hpp"

#include <algorithm>
#include <ostream>

#include "core/errors.hpp"

namespace fgc {

PrefixStream PrefixStream::from_endo(GroupEndo alpha, Word seed, const Config& config) {
  PrefixStream s(config);
  if (seed.empty()) throw PreconditionError("empty seed");
  if (!is_reduced(seed)) throw PreconditionError("seed word must be reduced");
  Word first = alpha.apply(seed);
  s.endo_ = std::move(alpha);
  s.seed_ = seed;
  if (first.size() > seed.size() && std::equal(seed.begin(), seed.end(), first.begin())) {
    s.nested_ = true;
    s.committed_.assign(first.begin(), first.end());
    s.block_.assign(first.begin() + static_cast<std::ptrdiff_t>(seed.size()), first.end());
    s.iterations_ = 1;
  } else {
    s.nested_ = false;
    s.current_ = seed;
  }
  return s;
}

PrefixStream PrefixStream::from_graph_map(GraphSelfMap f, EdgeId seed, const Config& config) {
  PrefixStream s(config);
  const EdgePath& img = f.edge_image(seed);
  if (img.size() < 2 || img.front() != seed)
    throw PreconditionError("ray seed must satisfy f(e) = e.sigma with sigma non-trivial");
  s.map_ = std::move(f);
  s.nested_ = true;
  s.committed_.assign(img.begin(), img.end());
  s.block_.assign(img.begin() + 1, img.end());
  s.seed_ = Word{seed};
  s.iterations_ = 1;
  return s;
}

Word PrefixStream::apply_source(const Word& w) const {
  if (endo_) return endo_->apply(w);
  return map_->tighten(w);
}

void PrefixStream::extend(std::int64_t n) {
  if (n > config_.symbol_cap) throw BudgetError("requested length exceeds the symbol cap");
  if (nested_)
    extend_nested(n);
  else
    extend_general(n);
}

void PrefixStream::extend_nested(std::int64_t n) {
  while (committed_length() < n) {
    if (committed_length() >= config_.symbol_cap)
      throw BudgetError("symbol cap reached while extending");
    Word next = apply_source(block_);
    ++iterations_;
    if (next.empty())
      throw NoStabilizationError("iterated block vanished; the seed does not define a ray");
    // Exact nesting requires no cancellation where the new block meets the
    // committed word; both sides are reduced, so one letter decides.
    if (!committed_.empty() && next.front() == inverse(committed_.back())) {
      if (map_) throw InvalidMapError("ray nesting violated: block cancels into the prefix");
      // Group sources fall back to the general iterate-and-compare mode.
      nested_ = false;
      current_ = seed_;
      committed_.clear();
      block_.clear();
      iterations_ = 0;
      extend_general(n);
      return;
    }
    committed_.insert(committed_.end(), next.begin(), next.end());
    block_ = std::move(next);
  }
}

void PrefixStream::extend_general(std::int64_t n) {
  const int window = std::max(1, config_.stability_window);
  while (true) {
    std::int64_t certified = 0;
    if (static_cast<int>(prefix_runs_.size()) >= window) {
      certified = *std::min_element(prefix_runs_.end() - window, prefix_runs_.end());
      certified = std::min(certified, static_cast<std::int64_t>(current_.size()) / 2);
    }
    if (certified >= n) {
      committed_.assign(current_.begin(), current_.begin() + static_cast<std::ptrdiff_t>(certified));
      return;
    }
    if (iterations_ >= config_.iterate_cap)
      throw NoStabilizationError("no stabilization within the iterate cap");
    if (static_cast<std::int64_t>(current_.size()) > config_.symbol_cap)
      throw BudgetError("symbol cap reached in general mode");
    Word next = apply_source(current_);
    ++iterations_;
    std::int64_t common = 0;
    while (common < static_cast<std::int64_t>(std::min(next.size(), current_.size())) &&
           next[static_cast<std::size_t>(common)] == current_[static_cast<std::size_t>(common)])
      ++common;
    prefix_runs_.push_back(common);
    current_ = std::move(next);
  }
}

std::int64_t PrefixStream::exact_upto() const {
  if (!nested_) return 0;
  return committed_length() / std::max(1, config_.exact_fraction);
}

std::string PrefixStream::symbol_token(std::int32_t symbol) const {
  if (endo_) return endo_->alphabet().letter_token(symbol);
  return map_->graph().edge_token(symbol);
}

void PrefixStream::write_symbols(std::ostream& out, std::int64_t count) const {
  count = std::min(count, committed_length());
  for (std::int64_t i = 0; i < count; ++i) {
    if (i) out << ' ';
    out << symbol_token(committed_[static_cast<std::size_t>(i)]);
  }
  out << '\n';
}

} // namespace fgc
