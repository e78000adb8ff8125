#include "core/endo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace fgc {

GroupEndo::GroupEndo(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_.rank())
    throw PreconditionError("endomorphism needs one image per generator");
  for (const Word& w : images_) {
    if (w.empty()) throw PreconditionError("erasing images are not supported");
    if (!is_reduced(w)) throw PreconditionError("generator image must be reduced");
    for (Letter x : w)
      if (x < 0 || x >= alphabet_.symmetrized_size())
        throw AlphabetError("image letter outside alphabet");
  }
}

void GroupEndo::append_image(Word& out, Letter x) const {
  const Word& img = images_[static_cast<std::size_t>(x >> 1)];
  if (!is_inverse_letter(x)) {
    append_reduced(out, img);
  } else {
    for (auto it = img.rbegin(); it != img.rend(); ++it) {
      Letter y = inverse(*it);
      if (!out.empty() && out.back() == inverse(y))
        out.pop_back();
      else
        out.push_back(y);
    }
  }
}

Word GroupEndo::apply(std::span<const Letter> w) const {
  Word out;
  out.reserve(w.size() * std::max<std::size_t>(1, max_image_length()));
  for (Letter x : w) {
    if (x < 0 || x >= alphabet_.symmetrized_size()) throw AlphabetError("letter outside alphabet");
    append_image(out, x);
  }
  return out;
}

bool GroupEndo::is_positive() const {
  for (const Word& w : images_)
    for (Letter x : w)
      if (is_inverse_letter(x)) return false;
  return true;
}

bool GroupEndo::is_identity() const {
  for (int i = 0; i < alphabet_.rank(); ++i) {
    const Word& w = images_[static_cast<std::size_t>(i)];
    if (w.size() != 1 || w[0] != static_cast<Letter>(2 * i)) return false;
  }
  return true;
}

std::size_t GroupEndo::max_image_length() const {
  std::size_t best = 0;
  for (const Word& w : images_) best = std::max(best, w.size());
  return best;
}

GroupEndo GroupEndo::inverse_endo() const {
  if (!inverse_images_) throw PreconditionError("no inverse images available");
  return GroupEndo(alphabet_, *inverse_images_);
}

GroupEndo compose(const GroupEndo& outer, const GroupEndo& inner) {
  if (!(outer.alphabet() == inner.alphabet()))
    throw AlphabetError("composing endomorphisms over different alphabets");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(inner.alphabet().rank()));
  for (int i = 0; i < inner.alphabet().rank(); ++i)
    images.push_back(outer.apply(inner.generator_image(i)));
  return GroupEndo(outer.alphabet(), std::move(images));
}

GroupEndo power(const GroupEndo& phi, int k) {
  if (k < 1) throw PreconditionError("power expects k >= 1");
  GroupEndo acc = phi;
  for (int i = 1; i < k; ++i) acc = compose(phi, acc);
  return acc;
}

GroupEndo identity_endo(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (int i = 0; i < alphabet.rank(); ++i) images.push_back(Word{static_cast<Letter>(2 * i)});
  return GroupEndo(alphabet, std::move(images));
}

std::vector<std::vector<long long>> abelianization_matrix(const GroupEndo& phi) {
  int n = phi.alphabet().rank();
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (Letter x : phi.generator_image(i))
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(x >> 1)] +=
          is_inverse_letter(x) ? -1 : 1;
  return m;
}

// Fraction-free Bareiss elimination; ranks here are tiny.
long long integer_determinant(std::vector<std::vector<long long>> m) {
  std::size_t n = m.size();
  long long sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

bool fixes_generators(const GroupEndo& phi) {
  for (int i = 0; i < phi.alphabet().rank(); ++i) {
    Word w{static_cast<Letter>(2 * i)};
    if (phi.apply(w) != w) return false;
  }
  return true;
}

std::size_t total_length(const std::vector<Word>& tuple) {
  return std::accumulate(tuple.begin(), tuple.end(), std::size_t{0},
                         [](std::size_t acc, const Word& w) { return acc + w.size(); });
}

// Greedy Nielsen reduction of the image tuple. Each strictly shortening move
// U[i] <- U[i] * U[j]^eps (or the left-sided variant) is the right-composition
// of phi with an elementary automorphism; if the tuple reduces to signed
// generators, replaying the moves on a letter permutation yields phi^{-1}.
std::optional<std::vector<Word>> search_inverse(const GroupEndo& phi, int cap) {
  const Alphabet& alphabet = phi.alphabet();
  int n = alphabet.rank();
  std::vector<Word> tuple;
  for (int i = 0; i < n; ++i) tuple.push_back(phi.generator_image(i));

  struct Move {
    int i, j, eps;
    bool left;
  };
  std::vector<Move> moves;

  for (int step = 0; step < cap; ++step) {
    std::size_t base = total_length(tuple);
    std::size_t best_len = base;
    Move best{};
    Word best_word;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int eps : {+1, -1}) {
          Word uj = eps > 0 ? tuple[static_cast<std::size_t>(j)]
                            : inverse_word(tuple[static_cast<std::size_t>(j)]);
          Word right = concat_reduced(tuple[static_cast<std::size_t>(i)], uj);
          std::size_t len = base - tuple[static_cast<std::size_t>(i)].size() + right.size();
          if (len < best_len) {
            best_len = len;
            best = Move{i, j, eps, false};
            best_word = right;
          }
          Word left = concat_reduced(uj, tuple[static_cast<std::size_t>(i)]);
          len = base - tuple[static_cast<std::size_t>(i)].size() + left.size();
          if (len < best_len) {
            best_len = len;
            best = Move{i, j, eps, true};
            best_word = left;
          }
        }
      }
    }
    if (best_len == base) break;
    tuple[static_cast<std::size_t>(best.i)] = best_word;
    moves.push_back(best);
  }

  // Want a signed permutation of the generators.
  std::vector<int> image_of(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const Word& w = tuple[static_cast<std::size_t>(i)];
    if (w.size() != 1) return std::nullopt;
    int g = w[0] >> 1;
    if (used[static_cast<std::size_t>(g)]) return std::nullopt;
    used[static_cast<std::size_t>(g)] = true;
    image_of[static_cast<std::size_t>(i)] = w[0];
  }

  // tau: a_i -> image_of[i]; its inverse is another letter permutation.
  std::vector<Word> tau_inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Letter x = image_of[static_cast<std::size_t>(i)];
    Letter target = static_cast<Letter>(2 * i);
    if (is_inverse_letter(x)) target = inverse(target);
    tau_inv[static_cast<std::size_t>(x >> 1)] = Word{target};
  }

  // phi o nu_1 o ... o nu_m = tau, hence phi^{-1} = nu_1 o ... o nu_m o tau^{-1}.
  GroupEndo acc(alphabet, tau_inv);
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    std::vector<Word> imgs;
    for (int g = 0; g < n; ++g) imgs.push_back(Word{static_cast<Letter>(2 * g)});
    Letter a_j = static_cast<Letter>(2 * it->j);
    if (it->eps < 0) a_j = inverse(a_j);
    Word& wi = imgs[static_cast<std::size_t>(it->i)];
    wi = it->left ? Word{a_j, static_cast<Letter>(2 * it->i)}
                  : Word{static_cast<Letter>(2 * it->i), a_j};
    acc = compose(GroupEndo(alphabet, imgs), acc);
  }
  std::vector<Word> result;
  for (int i = 0; i < n; ++i) result.push_back(acc.generator_image(i));
  return result;
}

} // namespace

AutReport verify_automorphism(GroupEndo& phi, const Config& config) {
  AutReport report;
  report.determinant = integer_determinant(abelianization_matrix(phi));

  if (!phi.inverse_images() && config.inverse_search) {
    if (auto found = search_inverse(phi, config.inverse_search_cap)) {
      phi.inverse_images() = std::move(*found);
      report.inverse_from_search = true;
    }
  }

  if (std::abs(report.determinant) != 1) {
    report.verdict = AutVerdict::NotAutomorphism;
    report.detail = "abelianization determinant is " + std::to_string(report.determinant);
    return report;
  }

  if (!phi.inverse_images()) {
    report.verdict = AutVerdict::Unverifiable;
    report.detail = "no inverse images supplied";
    return report;
  }

  GroupEndo inv = phi.inverse_endo();
  bool ok = fixes_generators(compose(phi, inv)) && fixes_generators(compose(inv, phi));
  report.verdict = ok ? AutVerdict::Verified : AutVerdict::NotAutomorphism;
  if (!ok) report.detail = "supplied inverse does not round-trip";
  return report;
}

} // namespace fgc
