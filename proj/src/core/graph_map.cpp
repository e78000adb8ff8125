#include "core/graph_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "core/errors.hpp"
#include "core/length_system.hpp"

namespace fgc {

GraphSelfMap::GraphSelfMap(Graph graph, std::vector<VertexId> vertex_image,
                           std::vector<EdgePath> edge_images)
    : graph_(std::move(graph)),
      vertex_image_(std::move(vertex_image)),
      edge_images_(std::move(edge_images)) {
  if (static_cast<int>(vertex_image_.size()) != graph_.vertex_count())
    throw InvalidMapError("vertex image size mismatch");
  if (static_cast<int>(edge_images_.size()) != graph_.oriented_edge_count())
    throw InvalidMapError("edge image size mismatch");
  for (EdgeId e = 0; e < graph_.oriented_edge_count(); ++e) {
    const EdgePath& img = edge_images_[static_cast<std::size_t>(e)];
    if (img.empty()) throw InvalidMapError("edge '" + graph_.edge_token(e) + "' has trivial image");
    if (!is_edge_path(graph_, img))
      throw InvalidMapError("image of '" + graph_.edge_token(e) + "' is not an edge path");
    if (graph_.origin(img.front()) !=
            vertex_image_[static_cast<std::size_t>(graph_.origin(e))] ||
        graph_.terminus(img.back()) !=
            vertex_image_[static_cast<std::size_t>(graph_.terminus(e))])
      throw InvalidMapError("image of '" + graph_.edge_token(e) +
                            "' is inconsistent with the vertex map");
    if (edge_images_[static_cast<std::size_t>(reverse_edge(e))] !=
        reverse_path(edge_images_[static_cast<std::size_t>(e)]))
      throw InvalidMapError("image of reversed edge must be the reversed image");
  }
}

GraphSelfMap GraphSelfMap::rose_map(const GroupEndo& phi) {
  Graph rose = Graph::rose(phi.alphabet());
  std::vector<EdgePath> images(static_cast<std::size_t>(rose.oriented_edge_count()));
  for (int i = 0; i < phi.alphabet().rank(); ++i) {
    EdgePath img(phi.generator_image(i).begin(), phi.generator_image(i).end());
    images[static_cast<std::size_t>(2 * i)] = img;
    images[static_cast<std::size_t>(2 * i + 1)] = reverse_path(img);
  }
  GraphSelfMap f(std::move(rose), {0}, std::move(images));
  if (f.is_positive()) {
    // Positive roses: each edge is a term of the complete splitting.
    for (EdgeId e = 0; e < f.graph().oriented_edge_count(); e += 2) {
      std::vector<int> cuts(f.edge_image(e).size() + 1);
      std::iota(cuts.begin(), cuts.end(), 0);
      f.set_annotation(e, std::move(cuts));
    }
  }
  return f;
}

void GraphSelfMap::set_annotation(EdgeId even_edge, std::vector<int> boundaries) {
  if (even_edge & 1) throw PreconditionError("annotations attach to forward edges");
  if (!annotations_)
    annotations_.emplace(static_cast<std::size_t>(graph_.oriented_edge_count() / 2));
  const EdgePath& img = edge_image(even_edge);
  if (boundaries.size() < 2 || boundaries.front() != 0 ||
      boundaries.back() != static_cast<int>(img.size()) ||
      !std::is_sorted(boundaries.begin(), boundaries.end()))
    throw InvalidMapError("bad split boundaries for '" + graph_.edge_token(even_edge) + "'");
  (*annotations_)[static_cast<std::size_t>(even_edge >> 1)] = std::move(boundaries);
}

EdgePath GraphSelfMap::tighten(const EdgePath& p) const {
  EdgePath out;
  for (EdgeId e : p) {
    const EdgePath& img = edge_images_[static_cast<std::size_t>(e)];
    for (EdgeId y : img) {
      if (!out.empty() && out.back() == reverse_edge(y))
        out.pop_back();
      else
        out.push_back(y);
    }
  }
  return out;
}

EdgePath GraphSelfMap::iterate_tighten(EdgePath p, int k) const {
  for (int i = 0; i < k; ++i) p = tighten(p);
  return p;
}

bool GraphSelfMap::is_positive() const {
  for (EdgeId e = 0; e < graph_.oriented_edge_count(); e += 2)
    for (EdgeId y : edge_images_[static_cast<std::size_t>(e)])
      if (y & 1) return false;
  return true;
}

bool GraphSelfMap::train_track_verified() const {
  // Blocks are ordered pairs (x, y) of oriented edges adjacent somewhere in an
  // iterated image. The image of block (x, y) contributes the interior blocks
  // of f(x), f(y) (already present) and the junction block; cancellation at
  // any junction of the closure refutes the train track property.
  auto block_key = [](EdgeId x, EdgeId y) {
    return (static_cast<std::int64_t>(x) << 32) | static_cast<std::uint32_t>(y);
  };
  std::set<std::int64_t> blocks;
  std::vector<std::pair<EdgeId, EdgeId>> work;
  auto add_block = [&](EdgeId x, EdgeId y) {
    if (blocks.insert(block_key(x, y)).second) work.emplace_back(x, y);
  };
  for (EdgeId e = 0; e < graph_.oriented_edge_count(); ++e) {
    const EdgePath& img = edge_images_[static_cast<std::size_t>(e)];
    for (std::size_t i = 1; i < img.size(); ++i) add_block(img[i - 1], img[i]);
  }
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    EdgeId last = edge_images_[static_cast<std::size_t>(x)].back();
    EdgeId first = edge_images_[static_cast<std::size_t>(y)].front();
    if (last == reverse_edge(first)) return false;
    add_block(last, first);
  }
  return true;
}

NielsenResult GraphSelfMap::detect_nielsen(const EdgePath& p, const Config& config) const {
  NielsenResult result;
  if (p.empty()) {
    result.verdict = NielsenVerdict::PreTrivial;
    return result;
  }
  std::int64_t length_cap =
      std::max<std::int64_t>(16, config.nielsen_length_factor * static_cast<std::int64_t>(p.size()));
  std::map<EdgePath, int> seen;
  EdgePath cur = p;
  for (int step = 0; step <= config.nielsen_iter_cap; ++step) {
    auto [it, fresh] = seen.emplace(cur, step);
    if (!fresh) {
      int period = step - it->second;
      if (period == 1) { // fixed path reached at it->second
        result.verdict = it->second == 0 ? NielsenVerdict::Nielsen : NielsenVerdict::PreNielsen;
        result.steps = it->second;
        return result;
      }
      result.verdict = NielsenVerdict::PreNielsen;
      result.steps = it->second;
      result.period = period;
      return result;
    }
    EdgePath next = tighten(cur);
    if (next.empty()) {
      result.verdict = NielsenVerdict::PreTrivial;
      result.steps = step + 1;
      return result;
    }
    if (static_cast<std::int64_t>(next.size()) > length_cap) {
      result.verdict = NielsenVerdict::Growing;
      result.steps = step + 1;
      return result;
    }
    cur = std::move(next);
  }
  result.verdict = NielsenVerdict::Unknown;
  result.steps = config.nielsen_iter_cap;
  return result;
}

GraphSelfMap GraphSelfMap::power(int k) const {
  if (k < 1) throw PreconditionError("power expects k >= 1");
  std::vector<VertexId> vimg(vertex_image_);
  for (int i = 1; i < k; ++i)
    for (VertexId& v : vimg) v = vertex_image(v);
  std::vector<EdgePath> imgs(edge_images_);
  for (int i = 1; i < k; ++i)
    for (EdgePath& p : imgs) p = tighten(p);
  GraphSelfMap g(graph_, std::move(vimg), std::move(imgs));
  return g;
}

GroupEndo GraphSelfMap::as_endo() const {
  if (!is_rose()) throw PreconditionError("as_endo requires a rose");
  std::vector<std::string> names;
  for (EdgeId e = 0; e < graph_.oriented_edge_count(); e += 2)
    names.push_back(graph_.edge_token(e));
  Alphabet alphabet(names);
  std::vector<Word> images;
  for (EdgeId e = 0; e < graph_.oriented_edge_count(); e += 2)
    images.push_back(Word(edge_image(e).begin(), edge_image(e).end()));
  return GroupEndo(alphabet, images);
}

std::string stratum_kind_name(StratumKind k) {
  switch (k) {
    case StratumKind::Zero: return "Zero";
    case StratumKind::EG: return "EG";
    case StratumKind::NegFixed: return "NEG-fixed";
    case StratumKind::NegLinear: return "NEG-linear";
    case StratumKind::NegGeneral: return "NEG-general";
  }
  return "?";
}

bool same_rate(double a, double b, double rate_tol) {
  return std::abs(a - b) <= rate_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

GrowthType combine_growth(const GrowthType& a, const GrowthType& b, double rate_tol) {
  if (!a.growing && !b.growing)
    return GrowthType{false, 0, 1.0, a.confirmed && b.confirmed};
  if (!a.growing) return b;
  if (!b.growing) return a;
  GrowthType out;
  out.growing = true;
  out.confirmed = a.confirmed && b.confirmed;
  if (same_rate(a.rate, b.rate, rate_tol)) {
    out.rate = std::max(a.rate, b.rate);
    out.degree = std::max(a.degree, b.degree);
  } else if (a.rate > b.rate) {
    out.rate = a.rate;
    out.degree = a.degree;
  } else {
    out.rate = b.rate;
    out.degree = b.degree;
  }
  return out;
}

double perron_value(const std::vector<std::vector<long long>>& m, double tol, int iter_cap) {
  std::size_t n = m.size();
  if (n == 0) return 0.0;
  std::vector<double> v(n, 1.0);
  double lambda = 1.0;
  for (int it = 0; it < iter_cap; ++it) {
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += static_cast<double>(m[i][j]) * v[j];
    double norm = 0.0;
    for (double x : w) norm = std::max(norm, std::abs(x));
    if (norm == 0.0) return 0.0;
    for (double& x : w) x /= norm;
    double prev = lambda;
    lambda = norm;
    v = std::move(w);
    if (it > 2 && std::abs(lambda - prev) <= tol * std::max(1.0, std::abs(lambda))) break;
  }
  return lambda;
}

namespace {

// Tarjan over edge pairs; emits SCCs sinks-first, which is exactly the
// filtration order (images live in the same or lower strata).
struct SccResult {
  std::vector<int> component; // per pair
  std::vector<std::vector<int>> members;
};

SccResult tarjan_sccs(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  SccResult out;
  out.component.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int counter = 0;

  struct Frame {
    int v;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[static_cast<std::size_t>(f.v)].size()) {
        int w = adj[static_cast<std::size_t>(f.v)][f.next++];
        if (index[static_cast<std::size_t>(w)] == -1) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[static_cast<std::size_t>(frames.back().v)] =
              std::min(low[static_cast<std::size_t>(frames.back().v)],
                       low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
          std::vector<int> members;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = 0;
            out.component[static_cast<std::size_t>(w)] = static_cast<int>(out.members.size());
            members.push_back(w);
            if (w == v) break;
          }
          std::sort(members.begin(), members.end());
          out.members.push_back(std::move(members));
        }
      }
    }
  }
  return out;
}

// Primitive root of a word under plain string periodicity.
EdgePath primitive_root(const EdgePath& u, int& exponent) {
  std::size_t n = u.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i) ok = u[i] == u[i - len];
    if (ok) {
      exponent = static_cast<int>(n / len);
      return EdgePath(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(len));
    }
  }
  exponent = 1;
  return u;
}

} // namespace

StrataAnalysis::StrataAnalysis(const GraphSelfMap& f, const Config& config)
    : config_(config), stable_(f) {
  for (int k = 1; k <= std::max(1, config.power_cap); ++k) {
    power_ = k;
    stable_ = k == 1 ? f : f.power(k);
    strata_.clear();
    stratum_of_.clear();
    warnings_.clear();
    attributes_stable_ = true;
    analyze();
    if (attributes_stable_) check_eg_stability();
    if (attributes_stable_) break;
  }
  if (!attributes_stable_)
    warnings_.push_back("stratum attributes did not stabilize within the power cap");
  compute_growth();
  if (!stable_.train_track_verified()) measure_growth_override();
}

void StrataAnalysis::analyze() {
  const Graph& g = stable_.graph();
  int pairs = g.edge_pair_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(pairs));
  for (int p = 0; p < pairs; ++p) {
    std::set<int> deps;
    for (EdgeId y : stable_.edge_image(static_cast<EdgeId>(2 * p))) deps.insert(y >> 1);
    adj[static_cast<std::size_t>(p)].assign(deps.begin(), deps.end());
  }
  SccResult scc = tarjan_sccs(adj);

  stratum_of_.assign(static_cast<std::size_t>(pairs), -1);
  for (std::size_t s = 0; s < scc.members.size(); ++s) {
    Stratum st;
    for (int p : scc.members[s]) {
      st.edges.push_back(static_cast<EdgeId>(2 * p));
      stratum_of_[static_cast<std::size_t>(p)] = static_cast<int>(s);
    }
    classify_stratum(st);
    strata_.push_back(std::move(st));
  }
}

void StrataAnalysis::classify_stratum(Stratum& s) {
  const Graph& g = stable_.graph();
  auto occurrences = [&](EdgeId source, int target_pair) {
    long long count = 0;
    for (EdgeId y : stable_.edge_image(source))
      if ((y >> 1) == target_pair) ++count;
    return count;
  };

  if (s.edges.size() == 1) {
    EdgeId e = s.edges[0];
    long long self = occurrences(e, e >> 1);
    if (self == 0) {
      s.kind = StratumKind::Zero;
      return;
    }
    if (self >= 2) {
      s.kind = StratumKind::EG;
      s.matrix = {{self}};
      s.perron = static_cast<double>(self);
      return;
    }
    // NEG: canonical orientation has the image starting with the edge itself.
    const EdgePath& img = stable_.edge_image(e);
    EdgeId canon = -1;
    if (img.front() == e)
      canon = e;
    else if (img.back() == reverse_edge(e))
      canon = reverse_edge(e);
    if (canon < 0) {
      s.kind = StratumKind::NegGeneral;
      s.standard_shape = false;
      s.neg_edge = e;
      warnings_.push_back("NEG edge '" + g.edge_token(e) + "' lacks the e.u image shape");
      return;
    }
    s.neg_edge = canon;
    const EdgePath& cimg = stable_.edge_image(canon);
    s.neg_suffix.assign(cimg.begin() + 1, cimg.end());
    if (s.neg_suffix.empty()) {
      s.kind = StratumKind::NegFixed;
      return;
    }
    NielsenResult nres = stable_.detect_nielsen(s.neg_suffix, config_);
    if (nres.verdict == NielsenVerdict::Nielsen || nres.verdict == NielsenVerdict::PreNielsen) {
      s.kind = StratumKind::NegLinear;
      if (nres.verdict == NielsenVerdict::Nielsen) {
        int d = 1;
        EdgePath root = primitive_root(s.neg_suffix, d);
        if (stable_.tighten(root) == root) {
          s.linear_root = root;
          s.linear_exponent = d;
        } else {
          s.linear_root = s.neg_suffix;
          s.linear_exponent = 1;
        }
      }
      // Pre-Nielsen suffixes leave the twist data empty: the edge is linear
      // but cannot join an exceptional family.
      return;
    }
    if (nres.verdict == NielsenVerdict::PreTrivial) {
      s.kind = StratumKind::NegGeneral;
      warnings_.push_back("NEG edge '" + g.edge_token(canon) + "' has a pre-trivial suffix");
      return;
    }
    s.kind = StratumKind::NegGeneral;
    if (nres.verdict == NielsenVerdict::Unknown) {
      warnings_.push_back("Nielsen detection inconclusive for suffix of '" + g.edge_token(canon) +
                          "'");
      s.growth.confirmed = false;
    }
    return;
  }

  // Multi-edge component: EG, with the orientation-blind transition matrix.
  s.kind = StratumKind::EG;
  std::size_t n = s.edges.size();
  s.matrix.assign(n, std::vector<long long>(n, 0));
  std::unordered_map<int, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[s.edges[i] >> 1] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (EdgeId y : stable_.edge_image(s.edges[i]))
      if (auto it = pos.find(y >> 1); it != pos.end()) ++s.matrix[i][it->second];
  s.perron = perron_value(s.matrix, config_.perron_tol, config_.perron_iter_cap);
  if (s.perron <= 1.0 + config_.rate_eq_tol) {
    // Permutation-like component; a further power of f splits it.
    attributes_stable_ = false;
  }
}

void StrataAnalysis::check_eg_stability() {
  // A power is acceptable once each EG edge image revisits its stratum at
  // least twice (the e1.u.e2 shape) and iterated images keep their first
  // edge, which is what prefix stabilization leans on.
  for (const Stratum& s : strata_) {
    if (s.kind != StratumKind::EG) continue;
    for (EdgeId even : s.edges) {
      for (EdgeId e : {even, reverse_edge(even)}) {
        const EdgePath& img = stable_.edge_image(e);
        int own = 0;
        for (EdgeId y : img)
          if (stratum_of(y) == stratum_of(e)) ++own;
        if (own < 2) {
          attributes_stable_ = false;
          return;
        }
        EdgeId first = img.front();
        if (stable_.edge_image(first).front() != first) {
          attributes_stable_ = false;
          return;
        }
      }
    }
  }
}

void StrataAnalysis::compute_growth() {
  // Strata are listed sinks-first, so children are already processed.
  for (std::size_t si = 0; si < strata_.size(); ++si) {
    Stratum& s = strata_[si];
    auto child_growth = [&](const EdgePath& p) {
      GrowthType acc{false, 0, 1.0, true};
      for (EdgeId y : p) {
        int t = stratum_of(y);
        if (t == static_cast<int>(si)) continue;
        acc = combine_growth(acc, strata_[static_cast<std::size_t>(t)].growth,
                             config_.rate_eq_tol);
      }
      return acc;
    };

    switch (s.kind) {
      case StratumKind::NegFixed:
        s.growth = GrowthType{false, 0, 1.0, true};
        break;
      case StratumKind::NegLinear:
        s.growth = GrowthType{true, 1, 1.0, true};
        break;
      case StratumKind::Zero:
        s.growth = child_growth(stable_.edge_image(s.edges[0]));
        break;
      case StratumKind::NegGeneral: {
        if (!s.standard_shape) {
          s.growth = child_growth(stable_.edge_image(s.edges[0]));
          s.growth.growing = true;
          s.growth.confirmed = false;
          break;
        }
        bool confirmed = s.growth.confirmed;
        GrowthType gu = child_growth(s.neg_suffix);
        if (!gu.growing) {
          // Suffix letters do not grow but the suffix was not seen to fix:
          // linear is the conservative reading.
          s.growth = GrowthType{true, 1, 1.0, false};
        } else if (gu.rate > 1.0 + config_.rate_eq_tol) {
          s.growth = GrowthType{true, gu.degree, gu.rate, gu.confirmed && confirmed};
        } else {
          s.growth = GrowthType{true, gu.degree + 1, 1.0, gu.confirmed && confirmed};
        }
        break;
      }
      case StratumKind::EG: {
        GrowthType acc{true, 0, s.perron, true};
        for (EdgeId e : s.edges) {
          GrowthType lower = child_growth(stable_.edge_image(e));
          if (!lower.growing) continue;
          GrowthType candidate;
          if (same_rate(lower.rate, s.perron, config_.rate_eq_tol))
            candidate = GrowthType{true, lower.degree + 1, s.perron, lower.confirmed};
          else
            candidate = lower;
          acc = combine_growth(acc, candidate, config_.rate_eq_tol);
        }
        s.growth = acc;
        break;
      }
    }
  }

  if (power_ > 1) {
    // Report rates per application of the original map.
    double inv = 1.0 / static_cast<double>(power_);
    for (Stratum& s : strata_) {
      if (s.growth.rate > 1.0) s.growth.rate = std::pow(s.growth.rate, inv);
      if (s.perron > 0.0) s.perron = std::pow(s.perron, inv);
    }
  }
}

void StrataAnalysis::measure_growth_override() {
  // The transition matrices overcount when iteration cancels, so rates come
  // from the exact length recursion instead: log L_n ~ c + d log n + n log r.
  measured_growth_ = true;
  warnings_.push_back("cancellation under iteration: growth measured from exact lengths");
  LengthSystem lengths(stable_);
  const int n_lo = 20, n_hi = 80;
  for (Stratum& s : strata_) {
    if (s.kind == StratumKind::NegFixed) continue;
    EdgeId e = s.edges[0];
    if (lengths.edge_length(e, n_hi) == lengths.edge_length(e, n_lo)) {
      s.growth = GrowthType{false, 0, 1.0, true};
      continue;
    }
    // Successive log-ratios r_n = log L_{n+1} - log L_n ~ log(rate) + d*log(1+1/n):
    // a two-parameter line fit in x = log(1+1/n), well conditioned.
    double sx = 0, sy = 0, sxx = 0, sxy = 0, s1 = 0;
    double prev = lengths.edge_length_log(e, n_lo);
    for (int n = n_lo; n < n_hi; ++n) {
      double next = lengths.edge_length_log(e, n + 1);
      double x = std::log1p(1.0 / static_cast<double>(n));
      double y = next - prev;
      prev = next;
      s1 += 1; sx += x; sxx += x * x; sy += y; sxy += x * y;
    }
    double det = s1 * sxx - sx * sx;
    double degree = det != 0.0 ? (s1 * sxy - sx * sy) / det : 0.0;
    double log_rate = det != 0.0 ? (sxx * sy - sx * sxy) / det : 0.0;
    double rate = std::exp(log_rate / static_cast<double>(power_));
    GrowthType g;
    g.growing = true;
    g.degree = std::clamp(static_cast<int>(std::lround(degree)), 0, 8);
    g.rate = rate < 1.0 + config_.rate_eq_tol ? 1.0 : rate;
    g.confirmed = lengths.exact();
    s.growth = g;
    if (s.kind == StratumKind::EG) s.perron = g.rate;
  }
  if (!lengths.exact())
    warnings_.push_back("length recursion lost exactness at step " +
                        std::to_string(lengths.exact_steps()));
}

GrowthType StrataAnalysis::path_growth(const EdgePath& p) const {
  if (p.empty()) return GrowthType{false, 0, 1.0, true};
  NielsenResult nres = stable_.detect_nielsen(p, config_);
  if (nres.non_growing()) return GrowthType{false, 0, 1.0, true};
  GrowthType acc{false, 0, 1.0, true};
  for (EdgeId e : p) acc = combine_growth(acc, edge_growth(e), config_.rate_eq_tol);
  if (nres.verdict == NielsenVerdict::Unknown) acc.confirmed = false;
  return acc;
}

std::vector<ExceptionalFamily> StrataAnalysis::families(bool distinct_exponents) const {
  std::vector<ExceptionalFamily> out;
  std::vector<const Stratum*> linear;
  for (const Stratum& s : strata_)
    if (s.kind == StratumKind::NegLinear && !s.linear_root.empty()) linear.push_back(&s);
  for (std::size_t i = 0; i < linear.size(); ++i) {
    for (std::size_t j = i + 1; j < linear.size(); ++j) {
      const Stratum* a = linear[i];
      const Stratum* b = linear[j];
      if (a->linear_root != b->linear_root) continue;
      bool distinct = a->linear_exponent != b->linear_exponent;
      if (distinct != distinct_exponents) continue;
      ExceptionalFamily fam;
      fam.e1 = a->neg_edge;
      fam.e2 = b->neg_edge;
      fam.root = a->linear_root;
      fam.d1 = a->linear_exponent;
      fam.d2 = b->linear_exponent;
      if (fam.d1 > fam.d2) {
        std::swap(fam.e1, fam.e2);
        std::swap(fam.d1, fam.d2);
      }
      out.push_back(std::move(fam));
    }
  }
  return out;
}

std::vector<ExceptionalFamily> StrataAnalysis::exceptional_families() const {
  return families(true);
}

std::vector<ExceptionalFamily> StrataAnalysis::inp_families() const { return families(false); }

std::string StrataAnalysis::describe() const {
  const Graph& g = stable_.graph();
  std::ostringstream out;
  out << "power=" << power_ << "\n";
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    const Stratum& s = strata_[i];
    out << "H" << (i + 1) << " " << stratum_kind_name(s.kind) << " {";
    for (std::size_t j = 0; j < s.edges.size(); ++j) {
      if (j) out << ' ';
      out << g.edge_token(s.edges[j]);
    }
    out << "}";
    if (s.kind == StratumKind::EG) out << " lambda=" << s.perron;
    if (s.growth.growing)
      out << " growth=n^" << s.growth.degree << "*" << s.growth.rate << "^n";
    else
      out << " growth=bounded";
    out << "\n";
  }
  return out.str();
}

} // namespace fgc
