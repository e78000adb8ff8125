#include "core/splitting.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "core/errors.hpp"

namespace fgc {

std::string term_kind_name(TermKind k) {
  switch (k) {
    case TermKind::FixedEdge: return "FixedEdge";
    case TermKind::EGEdge: return "EGEdge";
    case TermKind::NEGEdge: return "NEGEdge";
    case TermKind::INP: return "INP";
    case TermKind::ExceptionalPath: return "ExceptionalPath";
    case TermKind::ConnectingPath: return "ConnectingPath";
  }
  return "?";
}

std::string Term::key(const Graph& g) const {
  std::ostringstream out;
  if (kind == TermKind::ExceptionalPath) {
    EdgeId a = exc_e1, b = exc_e2;
    EdgePath root = exc_root;
    if ((a >> 1) > (b >> 1)) {
      std::swap(a, b);
      root = reverse_path(root);
    }
    out << "X:" << g.edge_token(a) << ":" << g.edge_token(b) << ":";
    for (EdgeId e : root) out << g.edge_token(e) << ' ';
  } else {
    out << "P:";
    for (EdgeId e : path) out << g.edge_token(e) << ' ';
  }
  return out.str();
}

TermTable::TermTable(const GraphSelfMap& f, const StrataAnalysis& analysis)
    : f_(f), analysis_(analysis) {
  if (!f_.has_annotations())
    throw PreconditionError("splitting annotations are required for term analysis");
}

namespace {

// Matches path = e1 root^p reverse(e2) with p possibly negative (powers of the
// reversed root). Returns false if the middle is not a clean power.
bool match_power_middle(const EdgePath& middle, const EdgePath& root, long long& p) {
  if (middle.empty()) {
    p = 0;
    return true;
  }
  auto try_root = [&](const EdgePath& r, long long sign) {
    if (r.empty() || middle.size() % r.size() != 0) return false;
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (middle[i] != r[i % r.size()]) return false;
    p = sign * static_cast<long long>(middle.size() / r.size());
    return true;
  };
  return try_root(root, +1) || try_root(reverse_path(root), -1);
}

} // namespace

Term TermTable::classify_term_path(const EdgePath& path) const {
  if (path.empty()) throw InvalidMapError("empty splitting term");
  Term t;
  t.path = path;
  const Graph& g = f_.graph();

  if (path.size() == 1) {
    const Stratum& s = analysis_.stratum_of_edge(path[0]);
    switch (s.kind) {
      case StratumKind::NegFixed: t.kind = TermKind::FixedEdge; return t;
      case StratumKind::EG: t.kind = TermKind::EGEdge; return t;
      case StratumKind::NegLinear:
      case StratumKind::NegGeneral: t.kind = TermKind::NEGEdge; return t;
      case StratumKind::Zero:
        t.kind = TermKind::ConnectingPath;
        return t;
    }
  }

  // Exceptional / twist families: e1 root^p reverse(e2) over linear edges.
  {
    const Stratum& s1 = analysis_.stratum_of_edge(path.front());
    const Stratum& s2 = analysis_.stratum_of_edge(path.back());
    if (s1.kind == StratumKind::NegLinear && s2.kind == StratumKind::NegLinear &&
        path.front() == s1.neg_edge && path.back() == reverse_edge(s2.neg_edge) &&
        (path.front() >> 1) != (path.back() >> 1)) {
      bool same_root = s1.linear_root == s2.linear_root;
      bool reversed_root = s1.linear_root == reverse_path(s2.linear_root);
      if (!s1.linear_root.empty() && (same_root || reversed_root)) {
        EdgePath middle(path.begin() + 1, path.end() - 1);
        long long p = 0;
        if (match_power_middle(middle, s1.linear_root, p)) {
          t.exc_e1 = path.front();
          t.exc_e2 = s2.neg_edge;
          t.exc_root = s1.linear_root;
          t.exc_d1 = s1.linear_exponent;
          t.exc_d2 = s2.linear_exponent;
          t.exc_p = p;
          t.kind = t.exc_d1 != t.exc_d2 ? TermKind::ExceptionalPath : TermKind::INP;
          return t;
        }
      }
    }
  }

  NielsenResult nres = f_.detect_nielsen(path, analysis_.config());
  if (nres.verdict == NielsenVerdict::Nielsen) {
    t.kind = TermKind::INP;
    return t;
  }

  bool all_zero = true;
  for (EdgeId e : path)
    if (analysis_.stratum_of_edge(e).kind != StratumKind::Zero) all_zero = false;
  if (all_zero) {
    t.kind = TermKind::ConnectingPath;
    return t;
  }

  throw InvalidMapError("'" + format_path(g, path) + "' is not a valid splitting term");
}

std::vector<Term> TermTable::parse_terms(EdgeId even_edge) const {
  const auto& annotations = *f_.annotations();
  const std::vector<int>& cuts = annotations[static_cast<std::size_t>(even_edge >> 1)];
  if (cuts.empty())
    throw PreconditionError("no splitting annotation for edge '" +
                            f_.graph().edge_token(even_edge) + "'");
  const EdgePath& img = f_.edge_image(even_edge);
  std::vector<Term> out;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    EdgePath piece(img.begin() + cuts[i - 1], img.begin() + cuts[i]);
    out.push_back(classify_term_path(piece));
  }
  return out;
}

const std::vector<Term>& TermTable::terms_of_edge(EdgeId e) {
  auto it = cache_.find(e);
  if (it != cache_.end()) return it->second;
  std::vector<Term> terms;
  if ((e & 1) == 0) {
    terms = parse_terms(e);
  } else {
    std::vector<Term> fwd = terms_of_edge(reverse_edge(e));
    for (auto rit = fwd.rbegin(); rit != fwd.rend(); ++rit) {
      Term t = *rit;
      t.path = reverse_path(t.path);
      if (t.kind == TermKind::ExceptionalPath || (t.kind == TermKind::INP && t.exc_e1 >= 0)) {
        std::swap(t.exc_e1, t.exc_e2);
        std::swap(t.exc_d1, t.exc_d2);
        t.exc_root = reverse_path(t.exc_root);
        t.exc_e1 = t.path.front();
        t.exc_e2 = reverse_edge(t.path.back());
      }
      terms.push_back(std::move(t));
    }
  }
  return cache_.emplace(e, std::move(terms)).first->second;
}

std::vector<Term> TermTable::term_image(const Term& t) {
  switch (t.kind) {
    case TermKind::FixedEdge:
    case TermKind::INP:
      return {t};
    case TermKind::ExceptionalPath: {
      Term next = t;
      next.exc_p = t.exc_p + t.exc_d1 - t.exc_d2;
      next.path.assign(1, t.exc_e1);
      const EdgePath root = next.exc_p >= 0 ? t.exc_root : reverse_path(t.exc_root);
      for (long long i = 0; i < std::llabs(next.exc_p); ++i)
        next.path.insert(next.path.end(), root.begin(), root.end());
      next.path.push_back(reverse_edge(t.exc_e2));
      return {next};
    }
    case TermKind::EGEdge:
    case TermKind::NEGEdge:
      return terms_of_edge(t.path[0]);
    case TermKind::ConnectingPath: {
      EdgePath image = f_.tighten(t.path);
      if (image.empty()) return {};
      return {classify_term_path(image)};
    }
  }
  return {};
}

void TermTable::verify_annotations(int depth) {
  const Graph& g = f_.graph();
  for (EdgeId e = 0; e < g.oriented_edge_count(); e += 2) {
    std::vector<Term> terms = parse_terms(e);
    std::vector<EdgePath> pieces;
    pieces.reserve(terms.size());
    for (const Term& t : terms) pieces.push_back(t.path);
    for (int k = 0; k < depth; ++k) {
      for (std::size_t i = 1; i < pieces.size(); ++i) {
        if (pieces[i - 1].empty() || pieces[i].empty())
          throw InvalidMapError("splitting term of '" + g.edge_token(e) +
                                "' collapsed under iteration");
        if (pieces[i - 1].back() == reverse_edge(pieces[i].front()))
          throw InvalidMapError("annotated terms of '" + g.edge_token(e) +
                                "' cancel at iteration " + std::to_string(k + 1));
      }
      for (EdgePath& p : pieces) p = f_.tighten(p);
    }
  }
}

GrowthType TermTable::term_growth(const Term& t) const {
  switch (t.kind) {
    case TermKind::FixedEdge:
    case TermKind::INP:
      return GrowthType{false, 0, 1.0, true};
    case TermKind::ExceptionalPath:
      return GrowthType{true, 1, 1.0, true};
    case TermKind::EGEdge:
    case TermKind::NEGEdge:
      return analysis_.edge_growth(t.path[0]);
    case TermKind::ConnectingPath:
      return analysis_.path_growth(t.path);
  }
  return GrowthType{};
}

TermClosure close_terms(TermTable& table, const std::vector<Term>& seed_terms, std::int64_t cap) {
  TermClosure closure;
  const Graph& g = table.map().graph();
  std::deque<int> work;

  auto intern = [&](const Term& t) {
    std::string key = t.key(g);
    auto it = closure.index.find(key);
    if (it != closure.index.end()) return it->second;
    int idx = static_cast<int>(closure.terms.size());
    closure.terms.push_back(t);
    closure.index.emplace(std::move(key), idx);
    closure.images.emplace_back();
    work.push_back(idx);
    if (t.kind == TermKind::ExceptionalPath) closure.has_exceptional = true;
    return idx;
  };

  for (const Term& t : seed_terms) closure.seed_terms.push_back(intern(t));
  while (!work.empty()) {
    int idx = work.front();
    work.pop_front();
    if (static_cast<std::int64_t>(closure.terms.size()) > cap)
      throw TermAlphabetError("term alphabet exceeded the closure cap");
    Term t = closure.terms[static_cast<std::size_t>(idx)];
    std::vector<int> image;
    for (const Term& u : table.term_image(t)) image.push_back(intern(u));
    closure.images[static_cast<std::size_t>(idx)] = std::move(image);
  }
  return closure;
}

Substitution extract_substitution(TermTable& table, EdgeId seed, std::int64_t cap) {
  const Graph& g = table.map().graph();
  const EdgePath& img = table.map().edge_image(seed);
  if (img.size() < 2 || img.front() != seed)
    throw PreconditionError("seed edge must satisfy f(e) = e.gamma with gamma non-trivial");
  if (!table.analysis().exceptional_families().empty())
    throw TermAlphabetError("exceptional paths present: the term alphabet is infinite");

  std::vector<Term> seeds = table.terms_of_edge(seed);
  if (seeds.empty() || seeds.front().path != EdgePath{seed})
    throw PreconditionError("splitting of the seed image must start with the seed edge");

  TermClosure closure = close_terms(table, seeds, cap);
  if (closure.has_exceptional)
    throw TermAlphabetError("exceptional paths present: the term alphabet is infinite");

  Substitution sub;
  sub.alphabet = closure.terms;
  sub.images = closure.images;
  for (const Term& t : sub.alphabet) sub.spelled.push_back(t.path);
  sub.seed = closure.seed_terms.front();
  return sub;
}

std::vector<bool> recurrent_terms(const TermClosure& closure) {
  std::size_t n = closure.terms.size();
  // Reachability from the seed terms.
  std::vector<bool> from_seed(n, false);
  std::deque<int> work(closure.seed_terms.begin(), closure.seed_terms.end());
  for (int s : closure.seed_terms) from_seed[static_cast<std::size_t>(s)] = true;
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    for (int w : closure.images[static_cast<std::size_t>(v)])
      if (!from_seed[static_cast<std::size_t>(w)]) {
        from_seed[static_cast<std::size_t>(w)] = true;
        work.push_back(w);
      }
  }
  // A letter recurs iff it has a cyclic ancestor within the reachable part:
  // peeling in-degree-0 vertices leaves exactly those.
  std::vector<int> indeg(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!from_seed[v]) continue;
    for (int w : closure.images[v])
      if (from_seed[static_cast<std::size_t>(w)]) ++indeg[static_cast<std::size_t>(w)];
  }
  std::deque<int> trim;
  std::vector<bool> alive = from_seed;
  for (std::size_t v = 0; v < n; ++v)
    if (from_seed[v] && indeg[v] == 0) trim.push_back(static_cast<int>(v));
  while (!trim.empty()) {
    int v = trim.front();
    trim.pop_front();
    alive[static_cast<std::size_t>(v)] = false;
    for (int w : closure.images[static_cast<std::size_t>(v)]) {
      if (!from_seed[static_cast<std::size_t>(w)]) continue;
      if (--indeg[static_cast<std::size_t>(w)] == 0 && alive[static_cast<std::size_t>(w)])
        trim.push_back(w);
    }
  }
  return alive;
}

} // namespace fgc
