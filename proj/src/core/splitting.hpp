#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/graph_map.hpp"

namespace fgc {

enum class TermKind { FixedEdge, EGEdge, NEGEdge, INP, ExceptionalPath, ConnectingPath };

std::string term_kind_name(TermKind k);

struct Term {
  TermKind kind = TermKind::FixedEdge;
  EdgePath path;
  // Exceptional family data: path = e1 root^p reverse(e2). The family key
  // drops the exponent, which is what keeps the term alphabet finite.
  EdgeId exc_e1 = -1, exc_e2 = -1;
  EdgePath exc_root;
  int exc_d1 = 0, exc_d2 = 0;
  long long exc_p = 0;

  std::string key(const Graph& g) const;
  bool non_growing() const { return kind == TermKind::FixedEdge || kind == TermKind::INP; }
};

// Term view of an annotated graph map: parses splitting annotations, checks
// the no-cancellation property of consecutive terms under iteration, and maps
// terms to the term sequence of their tightened images.
class TermTable {
 public:
  // `f` is the map the annotations belong to; `analysis` its strata.
  TermTable(const GraphSelfMap& f, const StrataAnalysis& analysis);

  // Splitting of f(e); the leading term of an NEG/seed edge is the edge.
  const std::vector<Term>& terms_of_edge(EdgeId e);

  Term classify_term_path(const EdgePath& path) const;
  std::vector<Term> term_image(const Term& t);

  // Verifies, up to `depth` iterations, that consecutive annotated terms never
  // cancel into each other. Throws InvalidMapError on violation.
  void verify_annotations(int depth);

  GrowthType term_growth(const Term& t) const;

  const GraphSelfMap& map() const { return f_; }
  const StrataAnalysis& analysis() const { return analysis_; }

 private:
  std::vector<Term> parse_terms(EdgeId even_edge) const;

  const GraphSelfMap& f_;
  const StrataAnalysis& analysis_;
  std::map<EdgeId, std::vector<Term>> cache_;
};

struct TermClosure {
  std::vector<Term> terms;                // closure alphabet, discovery order
  std::map<std::string, int> index;       // key -> position
  std::vector<std::vector<int>> images;   // tau
  std::vector<int> seed_terms;            // positions of the seed path's terms
  bool has_exceptional = false;
  bool unknown = false;                   // some attribute was undecidable
};

// Closes the term alphabet of `seed_path` under tau. Never throws on
// exceptional families; callers that need a finite substitution check the
// flag.
TermClosure close_terms(TermTable& table, const std::vector<Term>& seed_terms,
                        std::int64_t cap);

struct Substitution {
  std::vector<Term> alphabet;
  std::vector<std::vector<int>> images; // tau, indices into alphabet
  std::vector<EdgePath> spelled;        // path of each letter
  int seed = 0;                         // index of the seed edge letter
};

// The substitution induced by f on the term alphabet of the ray from `seed`
// (requires f(seed) = seed . gamma). Exceptional families make the alphabet
// infinite and raise TermAlphabetError.
Substitution extract_substitution(TermTable& table, EdgeId seed, std::int64_t cap);

// Recurrent letters: those appearing in tau^k(seed terms) for arbitrarily
// large k, i.e. reachable from a cycle that is reachable from the seed terms.
std::vector<bool> recurrent_terms(const TermClosure& closure);

} // namespace fgc
