#include "doctest.h"
#include "sc/dims.hpp"
#include "sc/factor.hpp"

using namespace sc;

namespace {

DimensionProfile fin(const char* name, unsigned cd, unsigned gd) {
  DimensionProfile p;
  p.name = name;
  p.cd_fin = DimInterval::exact(cd);
  p.gd_fin = DimInterval::exact(gd);
  return p;
}

const ScpHypotheses kAll{true, true, true, "asserted"};

}  // namespace

TEST_CASE("interval syntax") {
  CHECK(DimInterval::parse("3") == DimInterval::exact(3));
  CHECK(DimInterval::parse("<=3") == DimInterval::at_most(3));
  CHECK(DimInterval::parse(">= 2") == DimInterval::at_least(2));
  CHECK(DimInterval::parse("[2, 3]") == DimInterval{2, 3});
  CHECK(DimInterval::parse("[2,inf]") == DimInterval::at_least(2));
  CHECK(DimInterval::parse("?").is_unknown());
  CHECK_THROWS_AS(DimInterval::parse("[3,2]"), SpecError);
  CHECK_THROWS_AS(DimInterval::parse("two"), SpecError);
  for (auto d : {DimInterval::exact(2), DimInterval{2, 3}, DimInterval::at_most(3), DimInterval::at_least(1),
                 DimInterval::unknown()})
    CHECK(DimInterval::parse(d.format()) == d);
}

TEST_CASE("graph of groups bounds") {
  GraphOfGroupsSpec spec;
  spec.vertices = {fin("u", 2, 3), fin("v", 2, 2)};
  spec.edges = {{"e", true}};
  auto r = graph_of_groups_bounds(spec);
  REQUIRE(!r.bounds.empty());
  CHECK(r.bounds[0].quantity == "gd_fin");
  CHECK(r.bounds[0].value == "3");
  CHECK(!r.bounds[0].citation.empty());

  GraphOfGroupsSpec finite;
  finite.vertices = {fin("u", 0, 0), fin("v", 0, 0)};
  for (auto* p : {&finite.vertices[0], &finite.vertices[1]}) {
    p->cd_vc = p->gd_vc = DimInterval::exact(0);
    p->flags.small_centralizers = p->flags.acc_finite_subgroups = true;
  }
  auto f = graph_of_groups_bounds(finite);
  CHECK(f.bounds[0].value == "1");  // gd_fin <= max{1, 0}
  CHECK(f.bounds[2].quantity == "gd_vc");
  CHECK(f.bounds[2].value == "2");  // gd_vc <= max{2, 0}
  CHECK(f.bounds.size() == 6);      // plus the two VCYC-from-FIN bounds

  spec.edges.push_back({"inf", false});
  auto w = graph_of_groups_bounds(spec);
  CHECK(w.bounds.empty());
  CHECK(!w.diagnostics.empty());
}

TEST_CASE("VCYC from FIN") {
  auto p = fin("G", 2, 3);
  p.flags.small_centralizers = p.flags.acc_finite_subgroups = true;
  CHECK(vcyc_from_fin(p).gd_vc.hi == 3u);
  CHECK(vcyc_from_fin(p).cd_vc.hi == 2u);
  auto q = fin("H", 1, 1);
  q.flags.small_centralizers = q.flags.acc_finite_subgroups = true;
  CHECK(vcyc_from_fin(q).gd_vc.hi == 2u);
  DimReport rep;
  auto bare = fin("K", 2, 3);
  CHECK(vcyc_from_fin(bare, &rep) == bare);
  CHECK(rep.diagnostics.size() == 1);
}

TEST_CASE("small cancellation product dimensions") {
  auto g = scp_dimensions(fin("A", 2, 3), fin("B", 2, 2), kAll);
  CHECK(g.group.gd_fin == DimInterval::exact(3));
  CHECK(g.group.cd_fin == DimInterval::exact(2));
  CHECK(eilenberg_ganea_verdict(g.group, Family::fin) == Tri::yes);

  auto low = scp_dimensions(fin("A", 1, 1), fin("B", 0, 2), kAll);
  CHECK(low.group.gd_fin == DimInterval::exact(2));
  CHECK(low.group.cd_fin == DimInterval::exact(2));
  CHECK(eilenberg_ganea_verdict(low.group, Family::fin) == Tri::no);

  DimensionProfile a, b;
  a.cd_ring = {{"Q", DimInterval::exact(2)}, {"Z", DimInterval::exact(3)}};
  b.cd_ring = {{"Q", DimInterval::at_most(2)}, {"Z", DimInterval::at_most(3)}};
  auto r = scp_dimensions(a, b, kAll);
  CHECK(r.group.cd_ring.at("Q") == DimInterval::exact(2));
  CHECK(r.group.cd_ring.at("Z") == DimInterval::exact(3));

  auto missing = scp_dimensions(fin("A", 2, 3), fin("B", 2, 2), {true, false, true, ""});
  CHECK(missing.report.bounds.empty());
  CHECK(!missing.report.diagnostics.empty());
}

TEST_CASE("VCYC bracket") {
  auto a = fin("A", 2, 3), b = fin("B", 2, 2);
  for (auto* p : {&a, &b}) p->flags.finitely_generated = p->flags.small_centralizers = p->flags.acc_finite_subgroups = true;
  auto g = scp_dimensions(vcyc_from_fin(a), vcyc_from_fin(b), kAll).group;
  CHECK(g.gd_vc == DimInterval{2, 3});
  CHECK(g.cd_vc == DimInterval::exact(2));
  CHECK(g.flags.small_centralizers);
  CHECK(g.flags.acc_finite_subgroups);
  CHECK(eilenberg_ganea_verdict(g, Family::vcyc) == Tri::unknown);

  // without the flags on one factor the bracket is withheld
  auto c = b;
  c.flags.small_centralizers = false;
  auto h = scp_dimensions(a, c, kAll).group;
  CHECK(h.gd_vc.is_unknown());
  CHECK_FALSE(h.flags.small_centralizers);
}

TEST_CASE("monotonicity and cd <= gd") {
  for (unsigned x = 0; x <= 4; ++x)
    for (unsigned y = x; y <= 4; ++y) {
      auto g = scp_dimensions(fin("A", x, y), fin("B", 1, 2), kAll).group;
      auto h = scp_dimensions(fin("A", x, y + 1), fin("B", 1, 2), kAll).group;
      CHECK(g.cd_fin.lo <= *g.gd_fin.hi);
      CHECK(*h.gd_fin.hi >= *g.gd_fin.hi);
    }
}

TEST_CASE("profile files") {
  auto kv = KeyValueFile::parse(
      "factor.A.gd_fin = 3\nfactor.A.cd_fin = 2\nfactor.B.gd_fin = 2\nfactor.B.cd_fin = 2\n"
      "factor.B.flags = torsion_free\nhypothesis.c_finite = true\n"
      "hypothesis.small_cancellation = C'(1/12)\nhypothesis.not_virtually_free = true\n");
  auto prob = DimensionProblem::from_kv(kv);
  CHECK(prob.kind == DimensionProblem::Kind::product);
  CHECK(prob.a.gd_fin == DimInterval::exact(3));
  CHECK(prob.b.flags.torsion_free);
  CHECK(prob.hypotheses.small_cancellation_1_12);

  CHECK_THROWS_AS(DimensionProblem::from_kv(KeyValueFile::parse("factor.A.gd_fin = 1\nfactor.A.cd_fin = 2\n"
                                                                 "factor.B.gd_fin = 2\n")),
                  SpecError);
  CHECK_THROWS_AS(DimensionProblem::from_kv(KeyValueFile::parse("group.G.flags = shiny\n")), SpecError);
  CHECK_THROWS_AS(DimensionProblem::from_kv(KeyValueFile::parse("group.G.gd_fin = 1\nmystery = 1\n")),
                  SpecError);
}
