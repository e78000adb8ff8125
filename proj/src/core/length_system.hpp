#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <unordered_map>
#include <vector>

#include "core/graph_map.hpp"

namespace fgc {

using BigInt = boost::multiprecision::cpp_int;

// Exact |f#^n(e)| for every oriented edge, without materializing the paths.
//
// The state tracks lengths of the iterated images of all single edges and of
// all 2-edge blocks that ever appear. Writing c_k(x,y) for the cancellation
// between f#^k(x) and f#^k(y) across a junction,
//   |f#^k(w)| = sum_i |f#^k(w_i)| - 2 sum_i c_k(w_i, w_{i+1}),
// which is exact as long as no junction ever consumes a whole middle image;
// that condition is monitored at every step. Train track maps have all
// cancellations zero and the recursion degenerates to the transition matrix.
class LengthSystem {
 public:
  explicit LengthSystem(const GraphSelfMap& f);

  // Lengths after n applications; n of a few hundred is cheap.
  BigInt edge_length(EdgeId e, int n);
  double edge_length_log(EdgeId e, int n); // natural log, for ratio fits

  // False once the pairwise-cancellation model was caught interfering; all
  // values up to the recorded step stay exact.
  bool exact() const { return exact_; }
  int exact_steps() const { return exact_steps_; }

 private:
  struct Tracked {
    std::vector<EdgeId> image;        // f#(word) for this letter/block
    std::vector<int> image_letters;   // indices into tracked_ (length-1 entries)
    std::vector<int> image_blocks;    // indices into tracked_ (adjacent pairs)
  };

  int block_index(EdgeId x, EdgeId y);
  int letter_index(EdgeId x) const { return static_cast<int>(x); }
  void ensure_steps(int n);
  BigInt eval_word(const std::vector<int>& letters, const std::vector<int>& blocks,
                   const std::vector<BigInt>& state, bool check, bool& ok,
                   const std::vector<EdgeId>& word);

  const GraphSelfMap& f_;
  std::vector<Tracked> tracked_;                    // letters first, then blocks
  std::unordered_map<std::int64_t, int> block_ids_;
  std::vector<std::vector<BigInt>> levels_;         // levels_[k][i] = |f#^k(item i)|
  bool exact_ = true;
  int exact_steps_ = 0;
};

} // namespace fgc
