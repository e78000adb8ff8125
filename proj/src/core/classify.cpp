#include "core/classify.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>

#include "core/errors.hpp"
#include "core/rationality.hpp"

namespace fgc {

std::string class_name(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::Bounded: return "Bounded";
    case ComplexityClass::Linear: return "Linear";
    case ComplexityClass::NLogLogN: return "NLogLogN";
    case ComplexityClass::NLogN: return "NLogN";
    case ComplexityClass::Quadratic: return "Quadratic";
    case ComplexityClass::Unknown: return "Unknown";
  }
  return "?";
}

std::string route_name(RouteKind r) {
  switch (r) {
    case RouteKind::Structural: return "Structural";
    case RouteKind::Empirical: return "Empirical";
    case RouteKind::BothAgree: return "Both-agree";
    case RouteKind::Conflict: return "Conflict";
  }
  return "?";
}

std::string divergence_name(Divergence d) {
  switch (d) {
    case Divergence::NonDivergent: return "non-divergent";
    case Divergence::Polynomial: return "polynomial";
    case Divergence::Exponential: return "exponential";
    case Divergence::NotApplicable: return "n/a";
    case Divergence::Unknown: return "unknown";
  }
  return "?";
}

SpecialCaseInfo special_cases(const StrataAnalysis& analysis) {
  SpecialCaseInfo info;
  const auto& strata = analysis.strata();
  info.single_eg_rose = analysis.stable().is_rose() && strata.size() == 1 &&
                        strata[0].kind == StratumKind::EG;
  bool any_linear = false;
  bool all_poly = true;
  for (const Stratum& s : strata) {
    if (s.kind == StratumKind::NegLinear) any_linear = true;
    if (s.kind == StratumKind::EG) all_poly = false;
  }
  info.no_linear_no_exceptional = !any_linear && analysis.exceptional_families().empty();
  info.all_polynomial = all_poly;
  return info;
}

namespace {

struct DivergenceData {
  Divergence divergence = Divergence::NonDivergent;
  ComplexityClass cls = ComplexityClass::Unknown;
  std::string witness;
};

// Maps the growth types of growing terms onto the trichotomy of classes.
DivergenceData divergence_of(const std::vector<GrowthType>& growing, double rate_tol) {
  DivergenceData out;
  double min_rate = growing.front().rate, max_rate = growing.front().rate;
  int min_deg = growing.front().degree, max_deg = growing.front().degree;
  for (const GrowthType& g : growing) {
    min_rate = std::min(min_rate, g.rate);
    max_rate = std::max(max_rate, g.rate);
    min_deg = std::min(min_deg, g.degree);
    max_deg = std::max(max_deg, g.degree);
  }
  std::ostringstream w;
  if (!same_rate(min_rate, max_rate, rate_tol)) {
    out.divergence = Divergence::Exponential;
    out.cls = ComplexityClass::NLogN;
    w << "rates " << min_rate << " vs " << max_rate;
  } else if (min_deg != max_deg) {
    out.divergence = Divergence::Polynomial;
    out.cls = ComplexityClass::NLogLogN;
    w << "degrees " << min_deg << " vs " << max_deg << " at rate " << max_rate;
  } else {
    out.divergence = Divergence::NonDivergent;
    out.cls = ComplexityClass::Linear;
    w << "single growth type n^" << max_deg << "*" << max_rate << "^n";
  }
  out.witness = w.str();
  return out;
}

// Recurrence class over the recurrent letters of the term closure, following
// the comprec analysis: bounded-recurrence terms only => Linear, a recurrent
// polynomially growing term => Quadratic, else the trichotomy again.
ComplexityClass rec_class_from_terms(TermTable& table, const TermClosure& closure,
                                     const std::vector<bool>& recurrent, double rate_tol) {
  std::vector<GrowthType> growing;
  for (std::size_t i = 0; i < closure.terms.size(); ++i) {
    if (!recurrent[i]) continue;
    const Term& t = closure.terms[i];
    if (t.kind == TermKind::ExceptionalPath) return ComplexityClass::Quadratic;
    if (t.kind == TermKind::FixedEdge || t.kind == TermKind::INP) continue;
    GrowthType g = table.term_growth(t);
    if (!g.growing) continue;
    if (t.kind == TermKind::NEGEdge &&
        table.analysis().stratum_of_edge(t.path[0]).kind == StratumKind::NegLinear)
      continue; // linear edges have bounded recurrence complexity
    if (g.rate <= 1.0 + rate_tol) return ComplexityClass::Quadratic;
    growing.push_back(g);
  }
  if (growing.empty()) return ComplexityClass::Linear;
  return divergence_of(growing, rate_tol).cls;
}

} // namespace

StructuralVerdict classify_structural(const GraphSelfMap& f, const StrataAnalysis& analysis,
                                      EdgeId seed, const Config& config) {
  StructuralVerdict verdict;
  const EdgePath& img = f.edge_image(seed);
  if (img.empty() || img.front() != seed || img.size() < 2)
    throw PreconditionError("structural route needs f(e) = e.gamma with gamma non-trivial");
  EdgePath gamma(img.begin() + 1, img.end());

  NielsenResult gamma_orbit = analysis.stable().detect_nielsen(gamma, config);
  if (gamma_orbit.non_growing()) {
    verdict.cls = ComplexityClass::Bounded;
    verdict.rec_cls = ComplexityClass::Bounded;
    verdict.rec_from_terms = true;
    verdict.witnesses = "seed path is pre-Nielsen";
    return verdict;
  }
  if (gamma_orbit.verdict == NielsenVerdict::Unknown) verdict.unknown_flags = true;

  if (!f.has_annotations()) {
    verdict.notes = "no splitting annotations: structural trichotomy unavailable";
    return verdict;
  }

  TermTable table(f, analysis);
  table.verify_annotations(config.split_check_depth);
  std::vector<Term> seed_terms = table.terms_of_edge(seed);
  if (seed_terms.empty() || seed_terms.front().path != EdgePath{seed})
    throw PreconditionError("the splitting of the seed image must start with the seed edge");
  std::vector<Term> gamma_terms(seed_terms.begin() + 1, seed_terms.end());

  TermClosure closure = close_terms(table, gamma_terms, config.term_closure_cap);
  if (closure.unknown) verdict.unknown_flags = true;

  std::vector<GrowthType> growing;
  std::string poly_witness;
  for (const Term& t : closure.terms) {
    if (t.kind == TermKind::ExceptionalPath) {
      poly_witness = "exceptional path " + t.key(f.graph());
      break;
    }
    GrowthType g = table.term_growth(t);
    if (!g.confirmed) verdict.unknown_flags = true;
    if (!g.growing) continue;
    if (g.rate <= 1.0 + config.rate_eq_tol) {
      poly_witness = "polynomially growing term " + format_path(f.graph(), t.path) + " (n^" +
                     std::to_string(g.degree) + ")";
      break;
    }
    growing.push_back(g);
  }

  std::vector<bool> recurrent = recurrent_terms(closure);
  verdict.rec_cls = rec_class_from_terms(table, closure, recurrent, config.rate_eq_tol);
  verdict.rec_from_terms = true;

  if (!poly_witness.empty()) {
    verdict.cls = ComplexityClass::Quadratic;
    verdict.witnesses = poly_witness;
    return verdict;
  }
  if (growing.empty()) {
    // Nielsen detection said growing but no growing terms surfaced.
    verdict.cls = ComplexityClass::Unknown;
    verdict.unknown_flags = true;
    verdict.notes = "no growing terms found for a growing seed path";
    return verdict;
  }
  DivergenceData dd = divergence_of(growing, config.rate_eq_tol);
  verdict.cls = dd.cls;
  verdict.divergence = dd.divergence;
  verdict.witnesses = dd.witness;
  if (verdict.unknown_flags && verdict.cls != ComplexityClass::Quadratic)
    verdict.notes += "; capped sub-decision left Unknown flags";
  return verdict;
}

namespace {

double fit_residual(const std::vector<std::pair<double, double>>& pts) {
  // pts: (log g(n), log p(n)); free additive constant.
  double mean = 0.0;
  for (auto& [x, y] : pts) mean += y - x;
  mean /= static_cast<double>(pts.size());
  double rss = 0.0;
  for (auto& [x, y] : pts) {
    double r = y - x - mean;
    rss += r * r;
  }
  return std::sqrt(rss / static_cast<double>(pts.size()));
}

double model_log(int model, double n) {
  switch (model) {
    case 0: return 0.0;                               // bounded
    case 1: return std::log(n);                       // n
    case 2: return std::log(n * std::log(std::log(n))); // n log log n
    case 3: return std::log(n * std::log(n));         // n log n
    default: return 2.0 * std::log(n);                // n^2
  }
}

} // namespace

EmpiricalVerdict classify_empirical_rows(const ComplexityProfile& profile, bool use_rec,
                                         const Config& config) {
  EmpiricalVerdict verdict;
  std::vector<std::pair<std::int64_t, std::int64_t>> samples; // (n, value)
  for (const ProfileRow& row : profile.rows) {
    bool usable = use_rec ? (row.rec_stable && row.p_rec >= 0) : row.exact;
    if (!usable) continue;
    samples.emplace_back(row.n, use_rec ? row.p_rec : row.p);
  }
  if (samples.empty()) {
    verdict.notes = "no usable samples";
    return verdict;
  }
  std::int64_t n_max = samples.back().first;
  std::int64_t n_min_fit = std::max<std::int64_t>(3, n_max / 10);
  std::vector<std::pair<std::int64_t, std::int64_t>> window;
  for (auto& s : samples)
    if (s.first >= n_min_fit) window.push_back(s);
  if (static_cast<int>(window.size()) < config.fit_min_samples || n_max < 10 * n_min_fit / 3) {
    verdict.notes = "too few exact samples";
    return verdict;
  }

  // Morse-Hedlund: p(n) <= n at any exact sample forces eventual periodicity.
  for (auto& [n, p] : samples)
    if (p <= n) {
      verdict.cls = ComplexityClass::Bounded;
      verdict.notes = "p(" + std::to_string(n) + ") = " + std::to_string(p) + " <= n";
      return verdict;
    }

  // Ratio gates over the window thirds.
  auto avg_ratio = [&](std::size_t from, std::size_t to, int power) {
    double acc = 0.0;
    for (std::size_t i = from; i < to; ++i)
      acc += static_cast<double>(window[i].second) /
             std::pow(static_cast<double>(window[i].first), power);
    return acc / static_cast<double>(to - from);
  };
  std::size_t third = window.size() / 3;
  double r_start = avg_ratio(0, third, 1);
  double r_end = avg_ratio(window.size() - third, window.size(), 1);
  double q_start = avg_ratio(0, third, 2);
  double q_end = avg_ratio(window.size() - third, window.size(), 2);

  bool allowed[5] = {false, true, true, true, true};
  std::string gates;
  if (r_end / r_start <= config.gate_linear_flat) {
    allowed[2] = allowed[3] = allowed[4] = false;
    gates += "p/n flat; ";
  }
  if (q_end / q_start >= config.gate_quadratic_floor && r_end / r_start >= 2.0) {
    allowed[1] = allowed[2] = allowed[3] = false;
    gates += "p/n^2 retained; ";
  }

  for (int model = 0; model < 5; ++model) {
    std::vector<std::pair<double, double>> pts;
    for (auto& [n, p] : window)
      pts.emplace_back(model_log(model, static_cast<double>(n)),
                       std::log(static_cast<double>(p)));
    verdict.residuals[static_cast<std::size_t>(model)] = fit_residual(pts);
  }

  int best = -1;
  for (int model = 1; model < 5; ++model) {
    if (!allowed[model]) continue;
    if (best < 0 || verdict.residuals[static_cast<std::size_t>(model)] <
                        verdict.residuals[static_cast<std::size_t>(best)])
      best = model;
  }
  if (best < 0) {
    verdict.notes = "gates excluded every model";
    return verdict;
  }
  double best_res = verdict.residuals[static_cast<std::size_t>(best)];
  double runner = 1e300;
  for (int model = 1; model < 5; ++model)
    if (model != best && allowed[model])
      runner = std::min(runner, verdict.residuals[static_cast<std::size_t>(model)]);
  verdict.confidence = runner >= 1e300 ? 1.0 : (runner - best_res) / std::max(1e-12, runner);
  verdict.low_confidence = verdict.confidence < config.fit_margin;
  static const ComplexityClass order[5] = {ComplexityClass::Bounded, ComplexityClass::Linear,
                                           ComplexityClass::NLogLogN, ComplexityClass::NLogN,
                                           ComplexityClass::Quadratic};
  verdict.cls = order[static_cast<std::size_t>(best)];
  if (verdict.low_confidence) {
    int second = -1;
    for (int model = 1; model < 5; ++model)
      if (model != best && allowed[model] &&
          (second < 0 || verdict.residuals[static_cast<std::size_t>(model)] <
                             verdict.residuals[static_cast<std::size_t>(second)]))
        second = model;
    if (second >= 0)
      verdict.notes = "inconclusive between " + class_name(order[static_cast<std::size_t>(best)]) +
                      " and " + class_name(order[static_cast<std::size_t>(second)]);
  }
  if (!gates.empty()) verdict.notes += (verdict.notes.empty() ? "" : "; ") + gates;
  return verdict;
}

std::string ClassVerdict::record() const {
  std::ostringstream out;
  out << "class=" << class_name(cls) << "; route=" << route_name(route)
      << "; divergence=" << divergence_name(divergence) << "; witnesses=" << witnesses
      << "; residuals=" << residual_text;
  out << "; rec_class=" << class_name(rec_cls);
  if (poly_rule) out << "; poly_rule={Bounded,Quadratic}";
  if (fully_irreducible_proxy) out << "; proxy=fully-irreducible";
  if (rational) out << "; rational(period=" << period << ",preperiod=" << preperiod << ")";
  if (!notes.empty()) out << "; notes=" << notes;
  return out.str();
}

namespace {

std::string residual_summary(const EmpiricalVerdict& e) {
  std::ostringstream out;
  const char* names[5] = {"1", "n", "nloglogn", "nlogn", "n^2"};
  out.precision(4);
  for (int i = 0; i < 5; ++i) {
    if (i) out << ',';
    out << names[i] << ':' << e.residuals[static_cast<std::size_t>(i)];
  }
  return out.str();
}

ClassVerdict combine(const StructuralVerdict& s, const EmpiricalVerdict& e,
                     const EmpiricalVerdict& rec_e, const SpecialCaseInfo& info,
                     const Config& config) {
  ClassVerdict v;
  v.divergence = s.divergence;
  v.witnesses = s.witnesses;
  v.residual_text = residual_summary(e);
  v.poly_rule = info.all_polynomial;
  v.atoroidal_proxy = info.no_linear_no_exceptional;

  StructuralVerdict st = s;
  if (st.cls == ComplexityClass::Unknown && info.single_eg_rose) {
    st.cls = ComplexityClass::Linear;
    v.fully_irreducible_proxy = true;
    v.witnesses = "single EG stratum spanning the rose";
  }

  bool logs = (st.cls == ComplexityClass::NLogLogN || st.cls == ComplexityClass::NLogN) &&
              (e.cls == ComplexityClass::NLogLogN || e.cls == ComplexityClass::NLogN);
  if (st.cls != ComplexityClass::Unknown && e.cls != ComplexityClass::Unknown) {
    if (st.cls == e.cls) {
      v.cls = st.cls;
      v.route = RouteKind::BothAgree;
    } else if (logs) {
      v.cls = st.cls;
      v.route = RouteKind::BothAgree;
      v.notes = "log-class discrimination: structural authoritative, empirical suggested " +
                class_name(e.cls);
    } else if (!st.unknown_flags) {
      v.cls = st.cls;
      v.route = RouteKind::Structural;
      v.notes = "empirical disagreed: " + class_name(e.cls);
    } else {
      v.cls = st.cls;
      v.route = RouteKind::Conflict;
      v.notes = "structural " + class_name(st.cls) + " (with Unknown flags) vs empirical " +
                class_name(e.cls);
    }
  } else if (st.cls != ComplexityClass::Unknown) {
    v.cls = st.cls;
    v.route = RouteKind::Structural;
  } else if (e.cls != ComplexityClass::Unknown) {
    v.cls = e.cls;
    v.route = RouteKind::Empirical;
  } else {
    v.cls = ComplexityClass::Unknown;
    v.route = RouteKind::Conflict;
  }
  if (v.fully_irreducible_proxy) v.route = RouteKind::Structural;

  // Recurrence class: term analysis first, then empirical, then compar3.
  if (st.rec_from_terms && st.rec_cls != ComplexityClass::Unknown) {
    v.rec_cls = st.rec_cls;
    v.rec_source = RecSource::TermAnalysis;
    if (rec_e.cls != ComplexityClass::Unknown && rec_e.cls != v.rec_cls) {
      bool rec_logs =
          (v.rec_cls == ComplexityClass::NLogLogN || v.rec_cls == ComplexityClass::NLogN) &&
          (rec_e.cls == ComplexityClass::NLogLogN || rec_e.cls == ComplexityClass::NLogN);
      if (!rec_logs) v.notes += "; empirical rec disagreed: " + class_name(rec_e.cls);
    }
  } else if (rec_e.cls != ComplexityClass::Unknown) {
    v.rec_cls = rec_e.cls;
    v.rec_source = RecSource::Empirical;
  } else if (v.cls != ComplexityClass::Quadratic && v.cls != ComplexityClass::Unknown) {
    v.rec_cls = v.cls; // p_rec ~ p away from the quadratic case
    v.rec_source = RecSource::Compar3;
  }

  if (v.poly_rule && v.cls != ComplexityClass::Bounded && v.cls != ComplexityClass::Quadratic &&
      v.cls != ComplexityClass::Unknown) {
    v.route = RouteKind::Conflict;
    v.notes += "; polynomial rule violated by class " + class_name(v.cls);
  }
  if (v.atoroidal_proxy && v.cls == ComplexityClass::Quadratic) {
    v.route = RouteKind::Conflict;
    v.notes += "; atoroidal proxy excludes Quadratic";
  }
  (void)config;
  return v;
}

} // namespace

namespace {

ClassVerdict classify_with_stream(PrefixStream& stream, const StructuralVerdict& st,
                                  const SpecialCaseInfo& info, const Config& config) {
  const auto& symbols = stream.committed();
  std::int64_t rat_len = std::min<std::int64_t>(stream.committed_length(), 200000);
  RationalityVerdict rat;
  if (rat_len >= 4)
    rat = rationality_check(std::span(symbols.data(), static_cast<std::size_t>(rat_len)));

  int nmax = static_cast<int>(
      std::min<std::int64_t>(config.nmax, std::max<std::int64_t>(4, stream.committed_length() / 2)));
  ComplexityProfile profile =
      complexity_profile(std::span(symbols.data(), symbols.size()), nmax, stream.exact_upto());
  add_recurrence(profile, std::span(symbols.data(), symbols.size()), nmax, config);
  EmpiricalVerdict e = classify_empirical_rows(profile, false, config);
  EmpiricalVerdict rec_e = classify_empirical_rows(profile, true, config);

  ClassVerdict v = combine(st, e, rec_e, info, config);
  if (rat.status == RationalityVerdict::Status::PeriodicCandidate) {
    v.rational = true;
    v.period = rat.period;
    v.preperiod = rat.preperiod;
    v.cls = ComplexityClass::Bounded;
    v.rec_cls = ComplexityClass::Bounded;
    if (v.rec_source == RecSource::None) v.rec_source = RecSource::Empirical;
    v.route = e.cls == ComplexityClass::Bounded ? RouteKind::BothAgree : RouteKind::Structural;
    v.witnesses = "ultimately periodic: period " + std::to_string(rat.period) + ", preperiod " +
                  std::to_string(rat.preperiod);
    v.notes += (v.notes.empty() ? "" : "; ");
    v.notes += "rational fixed word: lies in the boundary of the fixed subgroup";
  }
  return v;
}

} // namespace

ClassVerdict classify_graph_map(const GraphSelfMap& f, EdgeId seed, const Config& config) {
  StrataAnalysis analysis(f, config);
  SpecialCaseInfo info = special_cases(analysis);

  StructuralVerdict st;
  try {
    st = classify_structural(f, analysis, seed, config);
  } catch (const PreconditionError& e) {
    st.notes = e.what();
  }

  PrefixStream stream = PrefixStream::from_graph_map(f, seed, config);
  stream.extend(std::min(config.prefix_budget, config.symbol_cap));
  ClassVerdict v = classify_with_stream(stream, st, info, config);
  v.chosen_power = analysis.chosen_power();
  return v;
}

ClassVerdict classify_fixed_point(GroupEndo alpha, const Word& seed, const Config& config) {
  AutReport report = verify_automorphism(alpha, config);
  if (report.verdict == AutVerdict::NotAutomorphism)
    throw PreconditionError("input is not an automorphism: " + report.detail);

  GraphSelfMap rose = GraphSelfMap::rose_map(alpha);
  StrataAnalysis analysis(rose, config);
  SpecialCaseInfo info = special_cases(analysis);

  StructuralVerdict st;
  if (seed.size() == 1) {
    try {
      st = classify_structural(rose, analysis, seed[0], config);
    } catch (const PreconditionError& e) {
      st.notes = e.what();
    } catch (const InvalidMapError& e) {
      st.notes = e.what();
    }
  } else {
    st.notes = "structural route needs a single-edge seed";
  }

  PrefixStream stream = PrefixStream::from_endo(alpha, seed, config);
  stream.extend(std::min(config.prefix_budget, config.symbol_cap));
  ClassVerdict v = classify_with_stream(stream, st, info, config);
  v.chosen_power = analysis.chosen_power();
  if (report.verdict == AutVerdict::Unverifiable)
    v.notes += (v.notes.empty() ? "" : "; ") + std::string("automorphism unverified (det ") +
               std::to_string(report.determinant) + ")";
  return v;
}

} // namespace fgc
