#include "core/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "core/errors.hpp"

namespace fgc {

namespace {

std::string upcase(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

} // namespace

VertexId Graph::add_vertex(const std::string& name) {
  if (vertex_index_.count(name)) throw ParseError("duplicate vertex '" + name + "'");
  VertexId v = static_cast<VertexId>(vertex_names_.size());
  vertex_names_.push_back(name);
  vertex_index_.emplace(name, v);
  return v;
}

EdgeId Graph::add_edge(const std::string& name, VertexId from, VertexId to) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    throw ParseError("edge name must be lowercase: '" + name + "'");
  if (edge_index_.count(name)) throw ParseError("duplicate edge '" + name + "'");
  EdgeId e = static_cast<EdgeId>(origin_.size());
  edge_names_.push_back(name);
  edge_index_.emplace(name, e);
  edge_index_.emplace(upcase(name), reverse_edge(e));
  origin_.push_back(from);
  origin_.push_back(to); // origin of the reverse
  return e;
}

std::string Graph::edge_token(EdgeId e) const {
  const std::string& base = edge_names_[static_cast<std::size_t>(e >> 1)];
  return (e & 1) ? upcase(base) : base;
}

EdgeId Graph::parse_edge_token(const std::string& token) const {
  auto it = edge_index_.find(token);
  if (it == edge_index_.end()) throw ParseError("unknown edge '" + token + "'");
  return it->second;
}

bool Graph::has_vertex(const std::string& name) const { return vertex_index_.count(name) > 0; }

VertexId Graph::vertex_id(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw ParseError("unknown vertex '" + name + "'");
  return it->second;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e = 0; e < oriented_edge_count(); ++e) {
      if (origin(e) != v) continue;
      VertexId w = terminus(e);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int Graph::first_betti_number() const { return edge_pair_count() - vertex_count() + 1; }

Graph Graph::rose(const Alphabet& alphabet) {
  Graph g;
  VertexId v = g.add_vertex("v0");
  for (int i = 0; i < alphabet.rank(); ++i) g.add_edge(alphabet.generator_name(i), v, v);
  return g;
}

bool is_edge_path(const Graph& g, const EdgePath& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.oriented_edge_count()) return false;
    if (i > 0) {
      if (p[i] == reverse_edge(p[i - 1])) return false;
      if (g.origin(p[i]) != g.terminus(p[i - 1])) return false;
    }
  }
  return true;
}

EdgePath reverse_path(const EdgePath& p) {
  EdgePath out;
  out.reserve(p.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(reverse_edge(*it));
  return out;
}

std::string format_path(const Graph& g, const EdgePath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += g.edge_token(p[i]);
  }
  return out;
}

EdgePath parse_path(const Graph& g, const std::string& text) {
  EdgePath out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(g.parse_edge_token(token));
  return out;
}

CollapseResult collapse_edge(const Graph& g, EdgeId e) {
  VertexId a = g.origin(e), b = g.terminus(e);
  if (a == b) throw PreconditionError("cannot collapse a loop edge");

  CollapseResult result;
  result.edge_map.assign(static_cast<std::size_t>(g.oriented_edge_count()), -1);

  std::vector<VertexId> vmap(static_cast<std::size_t>(g.vertex_count()), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == b) continue; // b merges into a
    vmap[static_cast<std::size_t>(v)] = result.graph.add_vertex(g.vertex_name(v));
  }
  vmap[static_cast<std::size_t>(b)] = vmap[static_cast<std::size_t>(a)];

  for (EdgeId f = 0; f < g.oriented_edge_count(); f += 2) {
    if (f == (e & ~1)) continue;
    EdgeId nf = result.graph.add_edge(g.edge_token(f), vmap[static_cast<std::size_t>(g.origin(f))],
                                      vmap[static_cast<std::size_t>(g.terminus(f))]);
    result.edge_map[static_cast<std::size_t>(f)] = nf;
    result.edge_map[static_cast<std::size_t>(f) + 1] = reverse_edge(nf);
  }
  return result;
}

EdgePath project_path(const CollapseResult& c, const EdgePath& p) {
  EdgePath out;
  out.reserve(p.size());
  for (EdgeId e : p) {
    EdgeId mapped = c.edge_map[static_cast<std::size_t>(e)];
    if (mapped >= 0) out.push_back(mapped);
  }
  return out;
}

} // namespace fgc
