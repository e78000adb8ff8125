#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/alphabet.hpp"

namespace fgc {

// A freely reduced word. Construction goes through reduce(); code that
// already guarantees reducedness uses Word directly.
using Word = std::vector<Letter>;

// Single left-to-right pass with pop-on-cancel; linear time, and correct for
// any cancellation order since reduction is confluent.
Word reduce(std::span<const Letter> raw);

bool is_reduced(std::span<const Letter> w);

// Appends `extra` to `w` in place, cancelling across the junction.
void append_reduced(Word& w, std::span<const Letter> extra);

Word inverse_word(std::span<const Letter> w);

Word concat_reduced(std::span<const Letter> a, std::span<const Letter> b);

std::string format_word(const Alphabet& alphabet, std::span<const Letter> w);
Word parse_word(const Alphabet& alphabet, const std::string& text);

} // namespace fgc
