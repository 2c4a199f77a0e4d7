#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sc/corpus.hpp"
#include "sc/ends.hpp"

using namespace sc;

TEST_CASE("relator torsion hypothesis") {
  auto e = corpus::staircase_group();
  CHECK(relator_torsion_hypothesis(e, {corpus::staircase_relator(e)}).holds);

  auto t = corpus::ab7_group();
  auto h = relator_torsion_hypothesis(t, {corpus::ab7_relator(t)});
  CHECK_FALSE(h.holds);
  CHECK(h.offenders == std::vector<std::string>{"A.a", "B.b"});

  auto none = relator_torsion_hypothesis(t, {});
  CHECK(none.holds);
  CHECK(!none.warnings.empty());
}

TEST_CASE("ping-pong traces") {
  FreeProduct fp(Factor::free("A", {"x"}), Factor::free("B", {"y"}));
  auto r = ping_pong_trace(fp, fp.parse("A.x B.y A.x B.y"));
  CHECK(r.kind == PingPongResult::Kind::moved);
  CHECK(r.trace.back().depth == 4);
  CHECK(r.trace.back().points_to == PointsTo::a);
  CHECK(monotone_depth(r));
  CHECK(ping_pong_trace(fp, fp.identity()).kind == PingPongResult::Kind::fixed);

  auto t = corpus::ab7_group();
  auto i = ping_pong_trace(t, t.parse("A.a B.b"));
  CHECK(i.kind == PingPongResult::Kind::inconclusive);
  CHECK(i.offender_text == "B.b");  // applied first
}

TEST_CASE("ping-pong totality on random forms") {
  std::mt19937_64 rng(3);
  for (auto fp : {FreeProduct(Factor::free("A", {"x"}), Factor::free("B", {"y"})), corpus::staircase_group()}) {
    for (int n = 0; n < 500; ++n) {
      auto w = oracle::random_word(fp, 1 + rng() % 12, rng);
      if (w.empty()) continue;
      auto r = ping_pong_trace(fp, w);
      CHECK(r.kind == PingPongResult::Kind::moved);
      CHECK(monotone_depth(r));
      CHECK(r.trace.size() == w.size());
    }
  }
}

TEST_CASE("one-endedness verdicts") {
  GroupFlags oe, none, g;
  oe.one_ended = true;
  auto e = corpus::staircase_group();
  std::vector<NormalForm> rs = {corpus::staircase_relator(e)};
  CancellationCertificate cert{true, std::nullopt, "asserted"};

  auto v = one_ended_verdict(oe, oe, g, e, rs, cert);
  CHECK(v.kind == OneEndedVerdict::Kind::one_ended);
  CHECK(!v.citation.empty());

  GroupFlags w;
  w.torsion_free = w.two_generated = true;
  auto v2 = one_ended_verdict(none, none, w, e, rs, {});
  CHECK(v2.kind == OneEndedVerdict::Kind::one_ended);
  CHECK(!v2.citation.empty());
  w.free = true;
  CHECK(one_ended_verdict(none, none, w, e, rs, {}).kind == OneEndedVerdict::Kind::not_applicable);

  auto t = corpus::ab7_group();
  auto v3 = one_ended_verdict(oe, oe, g, t, {corpus::ab7_relator(t)}, cert);
  CHECK(v3.kind == OneEndedVerdict::Kind::unknown);
  CHECK(v3.citation.empty());

  CHECK(one_ended_verdict(oe, none, g, e, rs, cert).kind == OneEndedVerdict::Kind::not_applicable);
  CHECK(one_ended_verdict(oe, oe, g, e, rs, {}).kind == OneEndedVerdict::Kind::not_applicable);
}
