#include "core/length_system.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>

#include "core/errors.hpp"

namespace fgc {

namespace {
std::int64_t key_of(EdgeId x, EdgeId y) {
  return (static_cast<std::int64_t>(x) << 32) | static_cast<std::uint32_t>(y);
}
} // namespace

LengthSystem::LengthSystem(const GraphSelfMap& f) : f_(f) {
  int oriented = f.graph().oriented_edge_count();
  tracked_.resize(static_cast<std::size_t>(oriented));
  for (EdgeId e = 0; e < oriented; ++e)
    tracked_[static_cast<std::size_t>(e)].image = f.edge_image(e);

  std::vector<int> pending;
  for (EdgeId e = 0; e < oriented; ++e) pending.push_back(e);
  while (!pending.empty()) {
    int idx = pending.back();
    pending.pop_back();
    std::vector<EdgeId> img = tracked_[static_cast<std::size_t>(idx)].image;
    std::vector<int> letters, blocks;
    for (std::size_t i = 0; i < img.size(); ++i) {
      letters.push_back(letter_index(img[i]));
      if (i > 0) {
        std::size_t before = tracked_.size();
        int b = block_index(img[i - 1], img[i]);
        blocks.push_back(b);
        if (tracked_.size() > before) pending.push_back(b);
      }
    }
    tracked_[static_cast<std::size_t>(idx)].image_letters = std::move(letters);
    tracked_[static_cast<std::size_t>(idx)].image_blocks = std::move(blocks);
  }

  levels_.emplace_back();
  std::vector<BigInt>& base = levels_.back();
  base.resize(tracked_.size());
  for (std::size_t i = 0; i < tracked_.size(); ++i)
    base[i] = i < static_cast<std::size_t>(oriented) ? 1 : 2;
}

int LengthSystem::block_index(EdgeId x, EdgeId y) {
  auto it = block_ids_.find(key_of(x, y));
  if (it != block_ids_.end()) return it->second;
  if (y == reverse_edge(x)) throw PreconditionError("blocks must be reduced");
  int idx = static_cast<int>(tracked_.size());
  block_ids_.emplace(key_of(x, y), idx);
  Tracked t;
  t.image = f_.tighten(EdgePath{x, y});
  if (t.image.empty())
    throw InvalidMapError("image of a reduced pair vanished; map is not injective");
  tracked_.push_back(std::move(t));
  return idx;
}

BigInt LengthSystem::eval_word(const std::vector<int>& letters, const std::vector<int>& blocks,
                               const std::vector<BigInt>& state, bool check, bool& ok,
                               const std::vector<EdgeId>& word) {
  BigInt total = 0;
  for (int li : letters) total += state[static_cast<std::size_t>(li)];
  std::vector<BigInt> cans;
  cans.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const BigInt& lu = state[static_cast<std::size_t>(letters[i])];
    const BigInt& lv = state[static_cast<std::size_t>(letters[i + 1])];
    BigInt c = (lu + lv - state[static_cast<std::size_t>(blocks[i])]) / 2;
    if (c < 0) ok = false;
    total -= 2 * c;
    cans.push_back(std::move(c));
  }
  if (check && !cans.empty()) {
    for (std::size_t i = 1; i + 1 < word.size(); ++i)
      if (cans[i - 1] + cans[i] > state[static_cast<std::size_t>(letters[i])]) ok = false;
    if (cans.front() > state[static_cast<std::size_t>(letters.front())]) ok = false;
    if (cans.back() > state[static_cast<std::size_t>(letters.back())]) ok = false;
  }
  if (total < 0) ok = false;
  return total;
}

void LengthSystem::ensure_steps(int n) {
  while (static_cast<int>(levels_.size()) <= n) {
    const std::vector<BigInt>& prev = levels_.back();
    std::vector<BigInt> next(tracked_.size());
    bool ok = true;
    for (std::size_t i = 0; i < tracked_.size(); ++i) {
      const Tracked& t = tracked_[i];
      next[i] = eval_word(t.image_letters, t.image_blocks, prev, /*check=*/true, ok, t.image);
      if (next[i] < 1) ok = false;
    }
    if (!ok && exact_) {
      exact_ = false;
      exact_steps_ = static_cast<int>(levels_.size()) - 1;
    }
    levels_.push_back(std::move(next));
  }
}

BigInt LengthSystem::edge_length(EdgeId e, int n) {
  ensure_steps(n);
  return levels_[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)];
}

double LengthSystem::edge_length_log(EdgeId e, int n) {
  boost::multiprecision::cpp_dec_float_100 v(edge_length(e, n));
  return static_cast<double>(boost::multiprecision::log(v));
}

} // namespace fgc
