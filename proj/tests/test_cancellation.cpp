#include "doctest.h"
#include "oracles.hpp"
#include "sc/cancellation.hpp"
#include "sc/corpus.hpp"

using namespace sc;

namespace {

std::vector<NormalForm> as_vector(const std::set<NormalForm>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("symmetrized closure matches brute-force rotations") {
  auto fp = corpus::ab7_group();
  auto r = corpus::ab7_relator(fp);
  auto R = symmetrized_closure(fp, {r});
  CHECK(R.size() == 4);
  CHECK(R.members() == as_vector(oracle::closure(fp, {r})));
  CHECK(symmetrized_closure(fp, {r, fp.inverse(r)}).members() == R.members());
  CHECK(R.orbit_count() == 1);

  FreeProduct g(Factor::free("A", {"x"}), Factor::free("B", {"y"}));
  auto S = symmetrized_closure(g, {g.parse("A.x B.y")});
  CHECK(S.size() == 4);
  CHECK_THROWS_AS(symmetrized_closure(g, {}), SpecError);
  CHECK_THROWS_AS(symmetrized_closure(g, {g.parse("A.x A.x^-1")}), SpecError);
}

TEST_CASE("pieces agree with the oracle") {
  auto fp = corpus::ab7_group();
  auto R = symmetrized_closure(fp, {corpus::ab7_relator(fp)});
  auto rep = pieces(R);
  CHECK(rep.max_piece_syllables == 1);
  CHECK(rep.optimal_lambda == Rational(1, 14));
  CHECK(rep.optimal_lambda == oracle::optimal_lambda(R.members()));
  CHECK(rep == pieces_serial(R));

  FreeProduct g(Factor::free("A", {"x"}), Factor::free("B", {"y"}));
  auto S = symmetrized_closure(g, {g.parse("A.x B.y")});
  CHECK(pieces(S).optimal_lambda == Rational(1, 2));
  CHECK(pieces(S).optimal_lambda == oracle::optimal_lambda(S.members()));
}

TEST_CASE("relator family audit against the oracle") {
  auto fp = corpus::staircase_group();
  auto R = symmetrized_closure(fp, {corpus::staircase_relator(fp)});
  CHECK(R.size() == 360);
  auto rep = pieces(R);
  CHECK(rep == pieces_serial(R));
  CHECK(rep.optimal_lambda == oracle::optimal_lambda(R.members()));
  CHECK(rep.optimal_lambda == Rational(1, 4));
  CHECK_FALSE(check_metric_condition(rep, Rational(1, 12)).holds);
  CHECK(check_metric_condition(rep, Rational(1, 12)).violation.has_value());
}

TEST_CASE("metric condition is strict and monotone") {
  auto fp = corpus::ab7_group();
  auto R = symmetrized_closure(fp, {corpus::ab7_relator(fp)});
  CHECK(check_metric_condition(R, Rational(1, 7)).holds);
  CHECK_FALSE(check_metric_condition(R, Rational(1, 14)).holds);
  CHECK_FALSE(check_metric_condition(R, Rational(1, 15)).holds);
  CHECK(check_metric_condition(R, Rational(1)).holds);
  for (int d = 2; d <= 30; ++d)
    if (check_metric_condition(R, Rational(1, d)).holds)
      CHECK(check_metric_condition(R, Rational(1, d - 1)).holds);
}

TEST_CASE("seven syllables and Dehn constants") {
  FreeProduct fp(Factor::cyclic("A", "a", 2), Factor::cyclic("B", "b", 3, {1, 2}));
  auto R = symmetrized_closure(fp, {fp.parse("(A.a B.b)^7")});
  CHECK(validate_seven_syllables(R));
  auto c = dehn_constants(R, fp);
  CHECK(c.M == 1);
  CHECK(c.ell0 == 14);
  CHECK(c.condition_holds);

  FreeProduct g(Factor::free("A", {"x"}), Factor::free("B", {"y"}));
  CHECK_FALSE(validate_seven_syllables(symmetrized_closure(g, {g.parse("A.x B.y")})));

  // x^3 needs three basis letters until the syllable joins the generating set.
  auto S = symmetrized_closure(g, {g.parse("(A.x^3 B.y)^7")});
  CHECK(dehn_constants(S, g).M == 3);
  auto aug = augment_generators(g, S);
  CHECK(dehn_constants(S, aug).M == 1);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/6") == Rational(1, 6));
  CHECK(parse_rational("2/12") == Rational(1, 6));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}
