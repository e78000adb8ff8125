#pragma once

#include <array>
#include <optional>
#include <string>

#include "core/config.hpp"
#include "core/endo.hpp"
#include "core/graph_map.hpp"
#include "core/profiles.hpp"
#include "core/splitting.hpp"
#include "core/stream.hpp"

namespace fgc {

enum class ComplexityClass { Bounded, Linear, NLogLogN, NLogN, Quadratic, Unknown };
enum class RouteKind { Structural, Empirical, BothAgree, Conflict };
enum class Divergence { NonDivergent, Polynomial, Exponential, NotApplicable, Unknown };
enum class RecSource { None, TermAnalysis, Empirical, Compar3 };

std::string class_name(ComplexityClass c);
std::string route_name(RouteKind r);
std::string divergence_name(Divergence d);

struct StructuralVerdict {
  ComplexityClass cls = ComplexityClass::Unknown;
  Divergence divergence = Divergence::NotApplicable;
  std::string witnesses;
  bool via_proxy = false;
  bool unknown_flags = false;
  ComplexityClass rec_cls = ComplexityClass::Unknown;
  bool rec_from_terms = false;
  std::string notes;
};

struct SpecialCaseInfo {
  bool single_eg_rose = false;          // fully-irreducible proxy
  bool no_linear_no_exceptional = false; // atoroidal proxy
  bool all_polynomial = false;          // every stratum has rate 1
};

SpecialCaseInfo special_cases(const StrataAnalysis& analysis);

// Structural route of Proposition-comptot: pre-Nielsen seed path => Bounded;
// a growing term of polynomial rate (linear edge, exceptional path, higher
// NEG) => Quadratic; otherwise the divergence trichotomy over the growing
// terms of the splitting closure.
StructuralVerdict classify_structural(const GraphSelfMap& f, const StrataAnalysis& analysis,
                                      EdgeId seed, const Config& config);

struct EmpiricalVerdict {
  ComplexityClass cls = ComplexityClass::Unknown;
  std::array<double, 5> residuals{}; // Bounded..Quadratic order
  double confidence = 0.0;           // residual gap between best and runner-up
  bool low_confidence = false;
  std::string notes;
};

// Least-squares on log p against log g(n) over the top decade of exact
// samples, with hard gates: Morse-Hedlund bounds, flat p/n ratios, and
// p/n^2 retention.
EmpiricalVerdict classify_empirical_rows(const ComplexityProfile& profile, bool use_rec,
                                         const Config& config);

struct ClassVerdict {
  ComplexityClass cls = ComplexityClass::Unknown;
  RouteKind route = RouteKind::Structural;
  Divergence divergence = Divergence::NotApplicable;
  std::string witnesses;
  std::string residual_text;
  ComplexityClass rec_cls = ComplexityClass::Unknown;
  RecSource rec_source = RecSource::None;
  bool poly_rule = false; // class constrained to {Bounded, Quadratic}
  bool fully_irreducible_proxy = false;
  bool atoroidal_proxy = false;
  bool rational = false;
  std::int64_t period = 0, preperiod = 0;
  int chosen_power = 1;
  std::string notes;

  std::string record() const; // "class=..; route=..; divergence=..; witnesses=..; residuals=.."
};

// Full pipeline for a graph-map input and a seed edge.
ClassVerdict classify_graph_map(const GraphSelfMap& f, EdgeId seed, const Config& config);

// Full pipeline for an automorphism and a seed word: rationality check, then
// the structural route on the rose realization when annotatable (or the
// special-case proxies), and the empirical route always.
ClassVerdict classify_fixed_point(GroupEndo alpha, const Word& seed, const Config& config);

} // namespace fgc
