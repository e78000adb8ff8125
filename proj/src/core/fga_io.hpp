#pragma once

#include <iosfwd>
#include <string>

#include "core/endo.hpp"

namespace fgc {

// .fga format, line oriented:
//   # comment
//   letters: a b c
//   a -> a b
//   inverse:
//   a -> ...
// Inverse letters are written uppercase; tokens are whitespace separated.
GroupEndo parse_fga(std::istream& in);
GroupEndo parse_fga_text(const std::string& text);
GroupEndo load_fga(const std::string& path);

std::string format_fga(const GroupEndo& phi);

} // namespace fgc
