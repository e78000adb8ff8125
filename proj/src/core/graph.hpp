#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/alphabet.hpp"

namespace fgc {

// Oriented edges are dense ids paired by the involution id ^ 1, like letters.
// On a rose the edge ids coincide with the letters of the marking alphabet,
// so words and edge paths share representation.
using EdgeId = std::int32_t;
using VertexId = std::int32_t;

inline EdgeId reverse_edge(EdgeId e) { return e ^ 1; }

using EdgePath = std::vector<EdgeId>;

class Graph {
 public:
  Graph() = default;

  VertexId add_vertex(const std::string& name);
  // Declares the pair (name, NAME); returns the forward edge id.
  EdgeId add_edge(const std::string& name, VertexId from, VertexId to);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int oriented_edge_count() const { return static_cast<int>(origin_.size()); }
  int edge_pair_count() const { return oriented_edge_count() / 2; }

  VertexId origin(EdgeId e) const { return origin_[static_cast<std::size_t>(e)]; }
  VertexId terminus(EdgeId e) const { return origin_[static_cast<std::size_t>(reverse_edge(e))]; }

  const std::string& vertex_name(VertexId v) const {
    return vertex_names_[static_cast<std::size_t>(v)];
  }
  std::string edge_token(EdgeId e) const;
  EdgeId parse_edge_token(const std::string& token) const;
  bool has_vertex(const std::string& name) const;
  VertexId vertex_id(const std::string& name) const;

  bool is_connected() const;
  int first_betti_number() const; // edge pairs - vertices + 1 on connected graphs

  // One-vertex rose whose edges mirror the alphabet letters.
  static Graph rose(const Alphabet& alphabet);

 private:
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::vector<std::string> edge_names_; // per pair
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<VertexId> origin_;
};

bool is_edge_path(const Graph& g, const EdgePath& p);
EdgePath reverse_path(const EdgePath& p);
std::string format_path(const Graph& g, const EdgePath& p);
EdgePath parse_path(const Graph& g, const std::string& text);

struct CollapseResult {
  Graph graph;
  // Old oriented edge id -> new oriented edge id, or -1 for the collapsed pair.
  std::vector<EdgeId> edge_map;
};

// Collapses an edge with distinct endpoints; Betti number is preserved.
CollapseResult collapse_edge(const Graph& g, EdgeId e);

// Projection of a path under a collapse: erase the collapsed letters.
EdgePath project_path(const CollapseResult& c, const EdgePath& p);

} // namespace fgc
