#include "doctest.h"
#include "sc/cayley.hpp"
#include "sc/corpus.hpp"
#include "sc/spectrum_io.hpp"
#include "sc/taut.hpp"

using namespace sc;

namespace {

std::vector<std::size_t> in(const TruncatedSpectrum& s) { return s.lengths(Taut::in); }

}  // namespace

TEST_CASE("Gamma_l presentations of small graphs") {
  auto tree = build_gamma_l(binary_tree(3), 6);
  CHECK(tree.group.generators == 0);
  auto c6 = build_gamma_l(cycle_graph(6), 6);
  CHECK(c6.group.generators == 1);
  CHECK(c6.group.relators.empty());
  auto c7 = build_gamma_l(cycle_graph(6), 7);
  CHECK(c7.group.generators == 1);
  CHECK(c7.group.relators.size() == 1);
}

TEST_CASE("spectra of trees and cycles") {
  CHECK(in(taut_spectrum_bruteforce(path_graph(5), 8)).empty());
  for (std::size_t n = 3; n <= 12; ++n) {
    auto h = taut_spectrum_bruteforce(cycle_graph(n), 14);
    CHECK(in(h) == std::vector<std::size_t>{n});
    CHECK(h.lengths(Taut::unknown).empty());
    CHECK(h == taut_spectrum_bruteforce_serial(cycle_graph(n), 14));
  }
  CHECK(in(taut_spectrum_bruteforce(generate_graph("complete:4"), 6)) == std::vector<std::size_t>{3});
}

TEST_CASE("Cayley balls") {
  auto z5 = cayley_ball(Factor::cyclic("A", "a", 5, {1, 4}), 3);
  CHECK(z5.graph.vertex_count() == 5);
  CHECK(z5.graph.edge_count() == 5);
  CHECK_FALSE(z5.graph.ball_radius.has_value());
  auto fx = cayley_ball(Factor::free("A", {"x"}), 4);
  CHECK(fx.graph.vertex_count() == 9);
  CHECK(fx.graph.edge_count() == 8);
  auto z = cayley_ball(Factor::free("Z", {"x"}, {"x^2"}), 12);
  CHECK(z.graph.vertex_count() == 49);
  CHECK(in(taut_spectrum_bruteforce(z.graph, 5)) == std::vector<std::size_t>{3});

  auto fp = corpus::ab7_group();
  auto R = symmetrized_closure(fp, {corpus::ab7_relator(fp)});
  DehnSolver S(fp, R, dehn_constants(R, fp));
  auto q = cayley_ball(S, 5);
  // the relator is too long to matter yet: spheres 1, 3, 4, 6, 8, 12 as in Z/2 * Z/3
  CHECK(q.graph.vertex_count() == 34);
}

TEST_CASE("free product spectrum is the union") {
  FreeProduct fp(Factor::cyclic("A", "a", 5), Factor::cyclic("B", "b", 7));
  auto h = taut_spectrum_bruteforce(cayley_ball(fp, 4).graph, 8);
  auto ha = taut_spectrum_bruteforce(cayley_ball(fp.factor(0), 5).graph, 8);
  auto hb = taut_spectrum_bruteforce(cayley_ball(fp.factor(1), 5).graph, 8);
  CHECK(in(h) == std::vector<std::size_t>{5, 7});
  CHECK(in(product_spectrum(ha, hb)) == in(h));

  auto empty = TruncatedSpectrum::from_sets(10, {});
  CHECK(in(product_spectrum(empty, empty)).empty());
  auto u = product_spectrum(TruncatedSpectrum::from_sets(12, {5}),
                            TruncatedSpectrum::from_sets(12, {}, {9}));
  CHECK(u.at(5) == Taut::in);
  CHECK(u.at(9) == Taut::unknown);
  CHECK(u.at(6) == Taut::out);
}

TEST_CASE("quotient brackets") {
  DehnConstants c;
  c.ell0 = 14;
  auto a = quotient_bracket(20, BracketDirection::quotient_to_factors, c);
  CHECK(a.lo == 20);
  CHECK(a.hi == 39);
  auto b = quotient_bracket(20, BracketDirection::factors_to_quotient, c);
  CHECK(b.lo == 10);
  CHECK(b.hi == 21);
  CHECK_THROWS_AS(quotient_bracket(14, BracketDirection::quotient_to_factors, c), SpecError);
}

TEST_CASE("k-related spectra") {
  auto same = k_related(TruncatedSpectrum::from_sets(20, {5, 7}), TruncatedSpectrum::from_sets(20, {5, 7}), 1);
  CHECK(same.kind == KRelationVerdict::Kind::related);

  std::vector<std::size_t> evens, odds;
  for (std::size_t l = 3; l <= 40; ++l) (l % 2 ? odds : evens).push_back(l);
  auto eo = k_related(TruncatedSpectrum::from_sets(40, evens), TruncatedSpectrum::from_sets(40, odds), 1);
  CHECK(eo.kind == KRelationVerdict::Kind::unrelated);
  CHECK(eo.threshold == 5);
  REQUIRE(eo.witness);
  CHECK(*eo.witness == 6);

  auto r = k_related(TruncatedSpectrum::from_sets(40, {10}), TruncatedSpectrum::from_sets(40, {19}), 2);
  CHECK(r.kind == KRelationVerdict::Kind::related);
}

TEST_CASE("spectrum text forms") {
  auto s = TruncatedSpectrum::from_sets(12, {5, 7}, {11}, "test");
  CHECK(parse_spectrum(format_spectrum(s)).lengths(Taut::in) == s.lengths(Taut::in));
  CHECK(parse_spectrum(format_spectrum(s)).lengths(Taut::unknown) == s.lengths(Taut::unknown));
  auto inl = parse_inline_spectrum("5,7?11@12");
  CHECK(inl.lengths(Taut::in) == std::vector<std::size_t>{5, 7});
  CHECK(inl.at(11) == Taut::unknown);
  CHECK(inl.at(13) == Taut::unknown);
  CHECK_THROWS(parse_inline_spectrum("5,x@12"));
}
