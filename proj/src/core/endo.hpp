#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/alphabet.hpp"
#include "core/config.hpp"
#include "core/word.hpp"

namespace fgc {

// Endomorphism of the free group, given by one reduced word per generator.
// The image of an inverse letter is derived on the fly.
class GroupEndo {
 public:
  GroupEndo(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& generator_image(int i) const { return images_[static_cast<std::size_t>(i)]; }

  // Appends the image of one letter onto `out`, cancelling across junctions.
  void append_image(Word& out, Letter x) const;

  Word apply(std::span<const Letter> w) const;

  bool is_positive() const;   // no inverse letters in any image
  bool is_identity() const;
  std::size_t max_image_length() const;

  std::optional<std::vector<Word>>& inverse_images() { return inverse_images_; }
  const std::optional<std::vector<Word>>& inverse_images() const { return inverse_images_; }

  GroupEndo inverse_endo() const; // requires inverse images

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_images_;
};

GroupEndo compose(const GroupEndo& outer, const GroupEndo& inner);
GroupEndo power(const GroupEndo& phi, int k);
GroupEndo identity_endo(const Alphabet& alphabet);

// Signed letter counts in the abelianization, images along rows.
std::vector<std::vector<long long>> abelianization_matrix(const GroupEndo& phi);
long long integer_determinant(std::vector<std::vector<long long>> m);

enum class AutVerdict { Verified, NotAutomorphism, Unverifiable };

struct AutReport {
  AutVerdict verdict = AutVerdict::Unverifiable;
  long long determinant = 0;
  bool inverse_from_search = false;
  std::string detail;
};

// Round-trips supplied inverse images over the generators; without them,
// optionally runs a bounded greedy Nielsen reduction to look for an inverse.
AutReport verify_automorphism(GroupEndo& phi, const Config& config);

} // namespace fgc
