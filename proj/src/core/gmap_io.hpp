#pragma once

#include <iosfwd>
#include <string>

#include "core/graph_map.hpp"

namespace fgc {

// .gmap format, line oriented:
//   vertex v0 v1
//   edge a v0 v1          # declares a and its reverse A
//   map a -> a b
//   split a -> [a][b]     # optional term boundaries
// A .fga file is accepted anywhere a .gmap is and denotes the rose map.
GraphSelfMap parse_gmap(std::istream& in);
GraphSelfMap parse_gmap_text(const std::string& text);
GraphSelfMap load_gmap(const std::string& path);

// Dispatch on extension: .fga -> rose map, anything else -> .gmap.
GraphSelfMap load_graph_map(const std::string& path);

} // namespace fgc
