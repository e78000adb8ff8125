#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/endo.hpp"
#include "core/graph_map.hpp"

namespace fgc {

// Lazily extended, certification-aware prefix of a fixed infinite word
//   X = lim alpha^p(g)   or   rho = e sigma f#(sigma) f#^2(sigma) ...
//
// Nested mode (alpha(g) = g.w with no junction cancellation, detected
// syntactically and re-checked at every block append) commits symbols
// exactly: each iterate extends the previous one. General mode re-applies
// alpha to the full word and certifies a prefix once it has survived
// `stability_window` consecutive iterates and the word is twice as long.
class PrefixStream {
 public:
  static PrefixStream from_endo(GroupEndo alpha, Word seed, const Config& config);
  static PrefixStream from_graph_map(GraphSelfMap f, EdgeId seed, const Config& config);

  // Grows the committed prefix to at least n symbols.
  // Throws NoStabilizationError / BudgetError.
  void extend(std::int64_t n);

  const std::vector<std::int32_t>& committed() const { return committed_; }
  std::int64_t committed_length() const { return static_cast<std::int64_t>(committed_.size()); }

  bool nested() const { return nested_; }
  std::int64_t iterations() const { return iterations_; }

  // Largest n for which per-length factor counts are marked exact for X.
  std::int64_t exact_upto() const;

  std::string symbol_token(std::int32_t symbol) const;
  void write_symbols(std::ostream& out, std::int64_t count) const;

  const GroupEndo* endo() const { return endo_ ? &*endo_ : nullptr; }
  const GraphSelfMap* graph_map() const { return map_ ? &*map_ : nullptr; }
  const Config& config() const { return config_; }

 private:
  PrefixStream(const Config& config) : config_(config) {}
  void extend_nested(std::int64_t n);
  void extend_general(std::int64_t n);
  Word apply_source(const Word& w) const;

  Config config_;
  std::optional<GroupEndo> endo_;
  std::optional<GraphSelfMap> map_;
  Word seed_;

  bool nested_ = false;
  std::vector<std::int32_t> committed_;
  Word block_;              // nested mode: next block is the image of this
  std::int64_t iterations_ = 0;

  // General mode state.
  Word current_;
  std::vector<std::int64_t> prefix_runs_; // common-prefix lengths of recent iterates
};

} // namespace fgc
