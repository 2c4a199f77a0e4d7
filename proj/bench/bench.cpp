// Serial reference against OpenMP kernel, with an output equality check.
//
//   bench_kernels [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "sc/cancellation.hpp"
#include "sc/cayley.hpp"
#include "sc/coned.hpp"
#include "sc/corpus.hpp"
#include "sc/dehn.hpp"
#include "sc/graph.hpp"
#include "sc/taut.hpp"

using namespace sc;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  f();  // warm-up
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    if (dt.count() < best) best = dt.count();
  }
  return best;
}

bool report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-24s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "same" : "MISMATCH");
  return same;
}

bool same_cells(const std::vector<ConedCell>& x, const std::vector<ConedCell>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].member != y[i].member || x[i].edges != y[i].edges || x[i].vertices != y[i].vertices) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, repeats: %d\n", omp_get_max_threads(), repeats);
  bool ok = true;

  {
    auto fp = corpus::staircase_group();
    auto R = symmetrized_closure(fp, {corpus::staircase_relator(fp)});
    PieceReport a, b;
    double s = best_of(repeats, [&] { a = pieces_serial(R); });
    double p = best_of(repeats, [&] { b = pieces(R); });
    ok &= report("pieces", s, p, a == b);
  }

  auto fp = corpus::ab7_group();
  auto R = symmetrized_closure(fp, {corpus::ab7_relator(fp)});
  DehnSolver solver(fp, R, dehn_constants(R, fp));
  {
    std::mt19937_64 rng(7);
    const char* tokens[] = {"A.a", "B.b", "B.b^-1", "(A.a B.b)^7", "(B.b^-1 A.a)^7"};
    std::vector<NormalForm> words;
    for (int n = 0; n < 2000; ++n) {
      std::string text;
      for (int k = 0; k < 30; ++k) text += std::string(tokens[rng() % 5]) + " ";
      words.push_back(fp.parse(text));
    }
    std::vector<bool> a, b;
    double s = best_of(repeats, [&] { a = word_problem_batch_serial(solver, words); });
    double p = best_of(repeats, [&] { b = word_problem_batch(solver, words); });
    ok &= report("word_problem_batch", s, p, a == b);
  }
  {
    std::vector<SimplicialGraph> graphs;
    for (std::size_t n = 3; n <= 40; ++n) graphs.push_back(cycle_graph(n));
    for (std::size_t n = 4; n <= 7; ++n) graphs.push_back(generate_graph("complete:" + std::to_string(n)));
    std::vector<TruncatedSpectrum> a(graphs.size()), b(graphs.size());
    double s = best_of(repeats, [&] {
      for (std::size_t i = 0; i < graphs.size(); ++i) a[i] = taut_spectrum_bruteforce_serial(graphs[i], 44);
    });
    double p = best_of(repeats, [&] {
      for (std::size_t i = 0; i < graphs.size(); ++i) b[i] = taut_spectrum_bruteforce(graphs[i], 44);
    });
    ok &= report("taut_spectrum", s, p, a == b);
  }
  {
    auto X = coned_ball(solver, 9);
    std::vector<ConedCell> a, b;
    double s = best_of(repeats, [&] { a = trace_cells_serial(X, R, fp); });
    double p = best_of(repeats, [&] { b = trace_cells(X, R, fp); });
    ok &= report("trace_cells", s, p, same_cells(a, b));
  }
  return ok ? 0 : 1;
}
