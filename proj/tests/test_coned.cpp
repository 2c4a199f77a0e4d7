#include "doctest.h"
#include "sc/coned.hpp"
#include "sc/corpus.hpp"

using namespace sc;

namespace {

struct Ab7 {
  FreeProduct fp = corpus::ab7_group();
  SymmetrizedSet R = symmetrized_closure(fp, {corpus::ab7_relator(fp)});
  DehnSolver S{fp, R, dehn_constants(R, fp)};
};

}  // namespace

TEST_CASE("quotient complex") {
  Ab7 g;
  auto q = quotient_complex(g.R);
  CHECK(q.vertices == 2);
  CHECK(q.edges == 1);
  CHECK(q.cell_boundaries == std::vector<std::size_t>{14});
  CHECK(quotient_complex(SymmetrizedSet::none()).cell_boundaries.empty());
}

TEST_CASE("coned balls of the (2,3,7) quotient") {
  Ab7 g;
  auto x0 = coned_ball(g.S, 0);
  CHECK(x0.vertices.size() == 2);
  CHECK(x0.edges.size() == 1);
  auto x1 = coned_ball(g.S, 1);
  CHECK(x1.vertices.size() == 5);
  CHECK(x1.edges.size() == 4);
  auto x7 = coned_ball(g.S, 7);
  CHECK(x7.vertices.size() == 70);
  CHECK(x7.edges.size() == 72);
  CHECK(x7.cells.size() == 3);
  for (const auto& c : x7.cells) CHECK(c.edges.size() == 14);
  CHECK(trace_cells(x7, g.R, g.fp).size() == trace_cells_serial(x7, g.R, g.fp).size());

  // A-vertices have degree 2 and B-vertices degree 3 in the interior.
  for (const auto& v : x7.vertices)
    if (v.depth + 1 < 7) CHECK(v.incident.size() == (v.factor == 0 ? 2u : 3u));

  auto ratio = geometric_piece_ratio(x7);
  CHECK(ratio.ratio == Rational(1, 7));
  CHECK(ratio.piece_edges == 2);
  CHECK(ratio.boundary == 14);
  CHECK_THROWS_AS(geometric_piece_ratio(x1), SpecError);
}

TEST_CASE("free product gives the Bass-Serre tree") {
  auto fp = corpus::ab7_group();
  auto none = SymmetrizedSet::none();
  DehnSolver F(fp, none, dehn_constants(none, fp));
  auto t = coned_ball(F, 2);
  CHECK(t.vertices.size() == 9);
  CHECK(t.edges.size() == 8);
  CHECK(t.cells.empty());
}

TEST_CASE("free factors are rejected") {
  auto fp = corpus::staircase_group();
  auto none = SymmetrizedSet::none();
  DehnSolver F(fp, none, dehn_constants(none, fp));
  CHECK_THROWS_AS(coned_ball(F, 1), SpecError);
}
