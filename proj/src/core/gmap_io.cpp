#include "core/gmap_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "core/errors.hpp"
#include "core/fga_io.hpp"

namespace fgc {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

} // namespace

GraphSelfMap parse_gmap(std::istream& in) {
  Graph graph;
  struct PendingEdge {
    std::string name, from, to;
  };
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  // Pass 1: vertices and edges.
  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto toks = tokens_of(strip_comment(lines[li]));
    if (toks.empty()) continue;
    if (toks[0] == "vertex") {
      for (std::size_t i = 1; i < toks.size(); ++i) graph.add_vertex(toks[i]);
    } else if (toks[0] == "edge") {
      if (toks.size() != 4)
        throw ParseError("line " + std::to_string(li + 1) + ": expected 'edge name from to'");
      graph.add_edge(toks[1], graph.vertex_id(toks[2]), graph.vertex_id(toks[3]));
    } else if (toks[0] != "map" && toks[0] != "split") {
      throw ParseError("line " + std::to_string(li + 1) + ": unknown directive '" + toks[0] + "'");
    }
  }
  if (graph.vertex_count() == 0) throw ParseError("no vertices declared");

  // Pass 2: images and splits.
  std::vector<EdgePath> images(static_cast<std::size_t>(graph.oriented_edge_count()));
  std::vector<char> seen(static_cast<std::size_t>(graph.edge_pair_count()), 0);
  std::map<EdgeId, std::vector<int>> splits;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto toks = tokens_of(strip_comment(lines[li]));
    if (toks.empty() || (toks[0] != "map" && toks[0] != "split")) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(li + 1) + ": " + msg);
    };
    if (toks.size() < 3 || toks[2] != "->") fail("expected '" + toks[0] + " <edge> -> ...'");
    EdgeId e = graph.parse_edge_token(toks[1]);
    if (e & 1) fail("state rules for forward edges, not reverses");
    if (toks[0] == "map") {
      EdgePath img;
      for (std::size_t i = 3; i < toks.size(); ++i) img.push_back(graph.parse_edge_token(toks[i]));
      if (img.empty()) fail("empty image");
      if (seen[static_cast<std::size_t>(e >> 1)]) fail("duplicate map rule");
      seen[static_cast<std::size_t>(e >> 1)] = 1;
      images[static_cast<std::size_t>(e)] = img;
      images[static_cast<std::size_t>(reverse_edge(e))] = reverse_path(img);
    } else {
      // split a -> [a][b c]...  Boundaries are cumulative term lengths.
      std::string rest;
      for (std::size_t i = 3; i < toks.size(); ++i) rest += toks[i] + " ";
      std::vector<int> cuts{0};
      int depth = 0;
      int count = 0;
      std::istringstream groups(rest);
      std::string tok;
      // Re-tokenize allowing brackets glued to names.
      std::string buffered;
      for (char c : rest) {
        if (c == '[') {
          if (depth != 0) fail("nested '[' in split");
          depth = 1;
        } else if (c == ']') {
          if (depth != 1) fail("unbalanced ']' in split");
          depth = 0;
          std::istringstream term(buffered);
          int term_len = 0;
          while (term >> tok) {
            graph.parse_edge_token(tok);
            ++term_len;
          }
          if (term_len == 0) fail("empty term in split");
          count += term_len;
          cuts.push_back(count);
          buffered.clear();
        } else {
          if (depth == 1)
            buffered += c;
          else if (!std::isspace(static_cast<unsigned char>(c)))
            fail("split terms must be bracketed");
        }
      }
      if (depth != 0) fail("unbalanced '[' in split");
      splits[e] = std::move(cuts);
    }
  }
  for (int p = 0; p < graph.edge_pair_count(); ++p)
    if (!seen[static_cast<std::size_t>(p)])
      throw ParseError("missing map rule for edge '" + graph.edge_token(2 * p) + "'");

  // Vertex images are forced by the edge images.
  std::vector<VertexId> vimg(static_cast<std::size_t>(graph.vertex_count()), -1);
  for (EdgeId e = 0; e < graph.oriented_edge_count(); ++e) {
    VertexId v = graph.origin(e);
    VertexId target = graph.origin(images[static_cast<std::size_t>(e)].front());
    if (vimg[static_cast<std::size_t>(v)] == -1)
      vimg[static_cast<std::size_t>(v)] = target;
    else if (vimg[static_cast<std::size_t>(v)] != target)
      throw InvalidMapError("edge images disagree on the image of vertex '" +
                            graph.vertex_name(v) + "'");
  }
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    if (vimg[static_cast<std::size_t>(v)] == -1)
      throw InvalidMapError("isolated vertex '" + graph.vertex_name(v) + "'");

  GraphSelfMap f(std::move(graph), std::move(vimg), std::move(images));
  for (auto& [e, cuts] : splits) f.set_annotation(e, cuts);
  return f;
}

GraphSelfMap parse_gmap_text(const std::string& text) {
  std::istringstream in(text);
  return parse_gmap(in);
}

GraphSelfMap load_gmap(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_gmap(in);
}

GraphSelfMap load_graph_map(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".fga")
    return GraphSelfMap::rose_map(load_fga(path));
  return load_gmap(path);
}

} // namespace fgc
