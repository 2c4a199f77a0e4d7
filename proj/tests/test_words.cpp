#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sc/presentation.hpp"
#include "sc/words.hpp"

using namespace sc;

namespace {

FreeProduct z2z3() { return FreeProduct(Factor::cyclic("A", "a", 2), Factor::cyclic("B", "b", 3)); }
FreeProduct fxfy() { return FreeProduct(Factor::free("A", {"x"}), Factor::free("B", {"y"})); }

}  // namespace

TEST_CASE("normalize coalesces and drops identities") {
  auto fp = z2z3();
  CHECK(fp.parse("A.a B.b B.b B.b A.a").empty());
  auto w = fp.parse("A.a B.b A.a B.b");
  CHECK(w.size() == 4);
  CHECK(fp.parse(fp.format(w)) == w);

  auto g = fxfy();
  auto v = g.parse("A.x A.x B.y B.y^-1 A.x^-1");
  CHECK(v == g.parse("A.x"));
}

TEST_CASE("lengths count syllables and geodesic generators") {
  auto fp = FreeProduct(Factor::cyclic("A", "a", 2), Factor::cyclic("B", "b", 3, {1, 2}));
  auto r = fp.parse("(A.a B.b)^7");
  CHECK(fp.lengths(r) == LengthReport{14, 14});
  CHECK(fp.lengths(fp.identity()) == LengthReport{0, 0});

  Factor b = Factor::cyclic("B", "b", 3, {1});
  CHECK(b.geodesic_length(Element{2}) == 1);  // b^2 = b^-1 is in the symmetric set
  Factor c = Factor::cyclic("C", "c", 5, {1});
  CHECK(c.geodesic_length(Element{2}) == 2);
}

TEST_CASE("cyclic reduction peels matching ends") {
  auto g = FreeProduct(Factor::free("A", {"a"}), Factor::free("B", {"b"}));
  auto w = g.parse("A.a B.b A.a B.b A.a^-1");
  auto red = g.cyclically_reduce(w);
  CHECK(red.core == g.parse("A.a B.b^2"));
  CHECK(red.conjugator == g.parse("A.a B.b"));
  CHECK(g.multiply({&red.conjugator, &red.core}) == g.multiply(w, red.conjugator));

  auto already = g.parse("A.a B.b");
  CHECK(g.cyclically_reduce(already).core == already);
  CHECK(g.cyclically_reduce(already).conjugator.empty());
}

TEST_CASE("group axioms on random words") {
  std::mt19937_64 rng(1);
  for (auto fp : {z2z3(), fxfy(), FreeProduct(Factor::free("A", {"a"}), Factor::free("B", {"b1", "b2"}))}) {
    for (int i = 0; i < 300; ++i) {
      auto u = oracle::random_word(fp, 6, rng), v = oracle::random_word(fp, 6, rng),
           w = oracle::random_word(fp, 6, rng);
      CHECK(fp.multiply(u, fp.multiply(v, w)) == fp.multiply(fp.multiply(u, v), w));
      CHECK(fp.multiply(u, fp.inverse(u)).empty());
      CHECK(fp.parse(fp.format(u)) == u);
      for (std::size_t k = 1; k < u.size(); ++k) CHECK(u[k].factor != u[k - 1].factor);
    }
  }
}

TEST_CASE("finite factors from tables") {
  // S3 with elements e, r, r2, s, sr, sr2
  std::vector<std::string> names = {"e", "r", "q", "s", "t", "u"};
  // composition table built from permutations of {0,1,2}
  std::vector<std::array<int, 3>> perm = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perm[i][perm[j][k]];
      table[i][j] = int(std::find(perm.begin(), perm.end(), c) - perm.begin());
    }
  auto f = Factor::finite("S", names, table, {"r", "s"});
  CHECK(f.order() == 6);
  auto r = f.letter("r"), s = f.letter("s");
  CHECK(f.element_order(r) == 3u);
  CHECK(f.element_order(s) == 2u);
  CHECK(f.power(r, 3).empty());
  CHECK(f.multiply(r, f.inverse(r)).empty());

  std::vector<std::vector<int>> broken = table;
  broken[1][1] = 1;
  CHECK_THROWS_AS(Factor::finite("S", names, broken, {"r"}), SpecError);
}

TEST_CASE("presentation files") {
  auto p = Presentation::parse(
      "factor.A.kind = cyclic\nfactor.A.generator = a\nfactor.A.order = 2\n"
      "factor.B.kind = cyclic\nfactor.B.generator = b\nfactor.B.order = 3\n"
      "relator = (A.a B.b)^7\n");
  CHECK(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 14);
  CHECK_THROWS(Presentation::parse("factor.A.kind = cyclic\nfactor.A.generator = a\nfactor.A.order = 1\n"
                                   "factor.B.kind = free\nfactor.B.basis = y\n"));
  CHECK_THROWS(Presentation::parse("factor.A.kind = free\nfactor.A.basis = x\n"
                                   "factor.B.kind = free\nfactor.B.basis = y\nrelator = A.z\n"));
}
