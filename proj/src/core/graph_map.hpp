#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/endo.hpp"
#include "core/graph.hpp"

namespace fgc {

enum class NielsenVerdict { Nielsen, PreNielsen, PreTrivial, Growing, Unknown };

struct NielsenResult {
  NielsenVerdict verdict = NielsenVerdict::Unknown;
  int steps = 0;   // first step at which the orbit is fixed (PreNielsen)
  int period = 1;  // >1 when the orbit cycles without fixing; a power of f fixes it
  bool non_growing() const {
    return verdict == NielsenVerdict::Nielsen || verdict == NielsenVerdict::PreNielsen ||
           verdict == NielsenVerdict::PreTrivial;
  }
};

// Self-map of a finite graph: vertices to vertices, edges to non-trivial
// edge paths, with the tightening operator f#.
class GraphSelfMap {
 public:
  GraphSelfMap(Graph graph, std::vector<VertexId> vertex_image, std::vector<EdgePath> edge_images);

  // Rose realization of an endomorphism; edge ids coincide with letters.
  static GraphSelfMap rose_map(const GroupEndo& phi);

  const Graph& graph() const { return graph_; }
  VertexId vertex_image(VertexId v) const { return vertex_image_[static_cast<std::size_t>(v)]; }
  const EdgePath& edge_image(EdgeId e) const { return edge_images_[static_cast<std::size_t>(e)]; }

  // Splitting annotations: term boundary offsets into edge_image(e), for even
  // e. Auto-derived for positive roses, user-supplied otherwise.
  const std::optional<std::vector<std::vector<int>>>& annotations() const { return annotations_; }
  void set_annotation(EdgeId even_edge, std::vector<int> boundaries);
  bool has_annotations() const { return annotations_.has_value(); }

  EdgePath tighten(const EdgePath& p) const;
  EdgePath iterate_tighten(EdgePath p, int k) const;

  bool is_rose() const { return graph_.vertex_count() == 1; }
  bool is_positive() const; // no reversed letters in any image

  // No cancellation ever occurs when iterating f on edge images; decided by
  // closing the set of 2-edge blocks under the induced block map.
  bool train_track_verified() const;

  // Orbit of p under f#, capped by iterations and length growth. Cycles of
  // period > 1 are reported as PreNielsen with the period set: a power of f
  // fixes the path, and attribute powering makes that the relevant question.
  NielsenResult detect_nielsen(const EdgePath& p, const Config& config) const;

  GraphSelfMap power(int k) const;

  GroupEndo as_endo() const; // rose maps only

 private:
  Graph graph_;
  std::vector<VertexId> vertex_image_;
  std::vector<EdgePath> edge_images_; // indexed by oriented edge id
  std::optional<std::vector<std::vector<int>>> annotations_;
};

enum class StratumKind { Zero, EG, NegFixed, NegLinear, NegGeneral };

std::string stratum_kind_name(StratumKind k);

struct GrowthType {
  bool growing = false;
  int degree = 0;    // d in n^d lambda^n
  double rate = 1.0; // lambda, per application of the original map
  bool confirmed = true;
};

GrowthType combine_growth(const GrowthType& a, const GrowthType& b, double rate_tol);
bool same_rate(double a, double b, double rate_tol);

struct Stratum {
  StratumKind kind = StratumKind::Zero;
  std::vector<EdgeId> edges; // even representatives, ascending
  // EG data.
  std::vector<std::vector<long long>> matrix;
  double perron = 1.0;
  // NEG data (canonical orientation: image of neg_edge starts with it).
  EdgeId neg_edge = -1;
  EdgePath neg_suffix;       // u in f(e) = e u
  bool standard_shape = true;
  EdgePath linear_root;      // primitive Nielsen path w with u = w^d
  int linear_exponent = 0;   // d
  GrowthType growth;
};

struct ExceptionalFamily {
  EdgeId e1 = -1, e2 = -1; // linear edges, canonical orientation
  EdgePath root;           // common Nielsen path u
  int d1 = 0, d2 = 0;      // twist exponents
};

// Strata, growth types and linear/exceptional structure of a graph map,
// computed after replacing f by the smallest power f^k (k <= power_cap) whose
// stratum attributes are stable.
class StrataAnalysis {
 public:
  StrataAnalysis(const GraphSelfMap& f, const Config& config);

  int chosen_power() const { return power_; }
  const GraphSelfMap& stable() const { return stable_; }
  const Config& config() const { return config_; }

  const std::vector<Stratum>& strata() const { return strata_; }
  int stratum_of(EdgeId e) const { return stratum_of_[static_cast<std::size_t>(e >> 1)]; }
  const Stratum& stratum_of_edge(EdgeId e) const {
    return strata_[static_cast<std::size_t>(stratum_of(e))];
  }

  GrowthType edge_growth(EdgeId e) const { return stratum_of_edge(e).growth; }
  // growth_type of a path: (0,1) for detected non-growing paths, else the
  // maximal growth over the strata reachable from its edges.
  GrowthType path_growth(const EdgePath& p) const;

  std::vector<ExceptionalFamily> exceptional_families() const; // d1 != d2
  std::vector<ExceptionalFamily> inp_families() const;         // d1 == d2

  bool attributes_stable() const { return attributes_stable_; }
  bool measured_growth() const { return measured_growth_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::string describe() const;

 private:
  void analyze();
  void classify_stratum(Stratum& s);
  void check_eg_stability();
  void compute_growth();
  void measure_growth_override();
  std::vector<ExceptionalFamily> families(bool distinct_exponents) const;

  Config config_;
  GraphSelfMap stable_;
  int power_ = 1;
  bool attributes_stable_ = true;
  bool measured_growth_ = false;
  std::vector<Stratum> strata_;
  std::vector<int> stratum_of_; // per edge pair
  std::vector<std::string> warnings_;
};

// Perron value of a non-negative irreducible matrix by power iteration.
double perron_value(const std::vector<std::vector<long long>>& m, double tol, int iter_cap);

} // namespace fgc
