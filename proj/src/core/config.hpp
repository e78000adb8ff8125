#pragma once

#include <cstdint>

namespace fgc {

// Tunables shared across the library. Every semi-decision (Nielsen orbit
// caps, stabilization windows, fit margins) reads its knob from here so that
// runs are reproducible from a printed config.
struct Config {
  // Prefix streams.
  int stability_window = 3;            // consecutive agreeing iterates, general mode
  std::int64_t iterate_cap = 200;      // general-mode iterations before giving up
  std::int64_t symbol_cap = 100000000; // hard cap on committed symbols
  std::int64_t prefix_budget = 2000000;
  std::int64_t quick_budget = 100000;

  // Nielsen / pre-Nielsen detection.
  int nielsen_iter_cap = 64;
  std::int64_t nielsen_length_factor = 10000; // orbit aborts at factor * |path|

  // Graph-map attribute stabilization (replace f by f^k, k <= power_cap).
  int power_cap = 6;

  // Splitting annotation verification depth.
  int split_check_depth = 8;

  // Perron values.
  double perron_tol = 1e-10;
  int perron_iter_cap = 10000;
  double rate_eq_tol = 1e-6; // relative tolerance when comparing growth rates

  // Complexity profiles.
  int exact_fraction = 4;    // sample n is "exact for X" when n <= committed/4
  int rec_doublings = 3;     // stable doublings required for rec_stable

  // Transport margin: 0 selects 4 * maxImageLen * alphabetSize.
  std::int64_t transport_margin = 0;

  // Bounded Nielsen-move search for inverse images (off by default).
  bool inverse_search = false;
  int inverse_search_cap = 4096;

  // Empirical classifier.
  int nmax = 2000;                    // largest factor length sampled
  double fit_margin = 0.05;           // relative residual margin before declaring a winner
  int fit_min_samples = 20;
  double gate_linear_flat = 1.08;     // p/n ratio growth below this => Linear
  double gate_quadratic_floor = 0.5;  // p/n^2 ratio retention above this => Quadratic
  std::int64_t term_closure_cap = 4096;
};

} // namespace fgc
