// Temporary development checks; not part of the build.
#include <iostream>

#include "core/classify.hpp"
#include "core/fga_io.hpp"
#include "core/gmap_io.hpp"
#include "core/length_system.hpp"
#include "core/rationality.hpp"
#include "core/splitting.hpp"
#include "core/stream.hpp"

using namespace fgc;

static void show_stream(const std::string& path, const std::string& seed, int n) {
  Config cfg;
  GroupEndo phi = load_fga(path);
  PrefixStream s = PrefixStream::from_endo(phi, parse_word(phi.alphabet(), seed), cfg);
  s.extend(n);
  std::cout << path << " seed " << seed << " -> ";
  s.write_symbols(std::cout, n);
}

int main() {
  Config cfg;
  show_stream("corpus/omega.fga", "a", 10);
  show_stream("corpus/tribonacci_inv3.fga", "A", 16);

  {
    GraphSelfMap f = load_graph_map("corpus/alpha0.gmap");
    PrefixStream s = PrefixStream::from_graph_map(f, f.graph().parse_edge_token("e"), cfg);
    s.extend(14);
    std::cout << "alpha0 seed e -> ";
    s.write_symbols(std::cout, 14);
    StrataAnalysis an(f, cfg);
    std::cout << an.describe();
    for (auto& fam : an.exceptional_families())
      std::cout << "exceptional: (" << f.graph().edge_token(fam.e1) << ", "
                << format_path(f.graph(), fam.root) << ", " << f.graph().edge_token(fam.e2)
                << ", " << fam.d1 << ", " << fam.d2 << ")\n";
    PrefixStream sc = PrefixStream::from_graph_map(f, f.graph().parse_edge_token("c"), cfg);
    sc.extend(100);
    auto rat = rationality_check(std::span(sc.committed().data(), 100));
    std::cout << "alpha0-c rationality: period=" << rat.period << " preperiod=" << rat.preperiod
              << "\n";
  }

  for (const char* path : {"corpus/omega.fga", "corpus/alpha_rank4.fga", "corpus/alpha11.fga",
                           "corpus/alpha21.fga", "corpus/alpha2.fga", "corpus/rcdif.fga",
                           "corpus/tribonacci.fga", "corpus/tribonacci_inv3.fga",
                           "corpus/fibonacci.fga", "corpus/lamiex.fga"}) {
    GraphSelfMap f = GraphSelfMap::rose_map(load_fga(path));
    StrataAnalysis an(f, cfg);
    std::cout << "== " << path << " TT=" << f.train_track_verified() << "\n" << an.describe();
    for (auto& fam : an.exceptional_families())
      std::cout << "exceptional: (" << f.graph().edge_token(fam.e1) << ", "
                << format_path(f.graph(), fam.root) << ", " << f.graph().edge_token(fam.e2)
                << ", " << fam.d1 << ", " << fam.d2 << ")\n";
  }

  {
    GraphSelfMap f = load_graph_map("corpus/tribonacci_inv3.fga");
    LengthSystem ls(f);
    std::cout << "trib_inv3 lengths A: ";
    for (int n : {1, 2, 3, 4, 5, 10, 20, 40})
      std::cout << ls.edge_length(f.graph().parse_edge_token("A"), n) << " ";
    std::cout << "exact=" << ls.exact() << "\n";
    double l40 = ls.edge_length_log(0, 40), l60 = ls.edge_length_log(0, 60);
    std::cout << "rate estimate: " << std::exp((l60 - l40) / 20.0) << "\n";
  }

  // Inverse hunt for alpha11 / alpha21 via the greedy Nielsen search.
  for (const char* path : {"corpus/alpha11.fga", "corpus/alpha21.fga"}) {
    Config c2 = cfg;
    c2.inverse_search = true;
    GroupEndo phi = load_fga(path);
    AutReport rep = verify_automorphism(phi, c2);
    std::cout << path << " verdict=" << static_cast<int>(rep.verdict)
              << " det=" << rep.determinant << " search=" << rep.inverse_from_search << "\n";
    if (phi.inverse_images())
      for (int i = 0; i < phi.alphabet().rank(); ++i)
        std::cout << "  " << phi.alphabet().generator_name(i) << " -> "
                  << format_word(phi.alphabet(), (*phi.inverse_images())[i]) << "\n";
  }
  return 0;
}
