#include "doctest.h"
#include "sc/factor.hpp"
#include "sc/fp_group.hpp"
#include "sc/nullhomotopy.hpp"
#include "sc/perm_quotient.hpp"
#include "sc/todd_coxeter.hpp"

using namespace sc;

namespace {

FpGroup group(std::size_t gens, std::vector<Word> rels) {
  FpGroup g;
  g.generators = gens;
  g.relators = std::move(rels);
  return g;
}

Word power(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

TEST_CASE("word helpers") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(cyclic_reduce({1, 2, 3, -1}) == Word{2, 3});
  CHECK(inverse_word({1, -2}) == Word{2, -1});
  CHECK(canonical_cyclic({2, 1}) == canonical_cyclic({1, 2}));
  CHECK(canonical_cyclic({-1, -2}) == canonical_cyclic({2, 1}));
}

TEST_CASE("coset enumeration reproduces known orders") {
  // S3 = <a, b | a^2, b^3, (ab)^2>
  auto s3 = todd_coxeter(group(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}), {});
  REQUIRE(s3);
  CHECK(s3->cosets == 6);
  // A5 = <a, b | a^2, b^3, (ab)^5>
  auto a5 = todd_coxeter(group(2, {{1, 1}, {2, 2, 2}, power({1, 2}, 5)}), {});
  REQUIRE(a5);
  CHECK(a5->cosets == 60);
  // index of <a> in A5
  auto a5a = todd_coxeter(group(2, {{1, 1}, {2, 2, 2}, power({1, 2}, 5)}), {{1}});
  REQUIRE(a5a);
  CHECK(a5a->cosets == 30);
  // Z is infinite: the budget is hit
  CHECK_FALSE(todd_coxeter(group(1, {}), {}, 1000).has_value());
  // every relator acts trivially
  for (const auto& r : std::vector<Word>{{1, 1}, {2, 2, 2}, power({1, 2}, 5)})
    for (int c = 0; c < 60; ++c) CHECK(a5->act(c, r) == c);
}

TEST_CASE("low-index representations") {
  // S3 has transitive actions of degree 1, 2, 3 (two conjugacy classes of
  // order-2 subgroups give one action up to relabelling), and 6.
  auto s3 = group(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});
  std::vector<std::size_t> degrees;
  CHECK(low_index_search(s3, {6, 200000}, [&](const PermRep& p) {
    degrees.push_back(p.degree);
    return false;
  }));
  CHECK(std::count(degrees.begin(), degrees.end(), 1) == 1);
  CHECK(std::count(degrees.begin(), degrees.end(), 2) == 1);
  CHECK(std::count(degrees.begin(), degrees.end(), 3) == 3);
  auto q = find_nontrivial_quotient(s3, {2}, {6, 200000});
  REQUIRE(q);
  CHECK(q->moves({2}));
  CHECK_FALSE(q->moves({2, 2, 2}));
}

TEST_CASE("abelianization invariants") {
  CHECK(AbelianQuotient(group(2, {{1, 1}, {2, 2, 2}})).invariants() == std::vector<long long>{6});
  CHECK(AbelianQuotient(group(2, {{1, 2, -1, -2}})).invariants() == std::vector<long long>{0, 0});
  // x^4, y^6 commuting: Z/4 x Z/6 = Z/2 x Z/12
  CHECK(AbelianQuotient(group(2, {{1, 1, 1, 1}, {2, 2, 2, 2, 2, 2}, {1, 2, -1, -2}})).invariants() ==
        std::vector<long long>{2, 12});
  CHECK(AbelianQuotient(group(3, {{1, 1, 2, 2}})).invariants() == std::vector<long long>{2, 0, 0});
  CHECK(AbelianQuotient(group(2, {{1, 1}})).kills({1, 1, 2, -2}));
  CHECK_FALSE(AbelianQuotient(group(2, {{1, 1}})).kills({2}));
}

TEST_CASE("null-homotopy pipeline") {
  CHECK(nullhomotopy_verdict(group(1, {}), {1, -1}).verdict == Homotopy::trivial);
  auto free1 = nullhomotopy_verdict(group(1, {}), {1});
  CHECK(free1.verdict == Homotopy::nontrivial);
  auto killed = nullhomotopy_verdict(group(1, {{1}}), {1});
  CHECK(killed.verdict == Homotopy::trivial);
  // Z^2: commutator is trivial, a generator is not
  auto z2 = group(2, {{1, 2, -1, -2}});
  CHECK(nullhomotopy_verdict(z2, {2, 1, -2, -1}).verdict == Homotopy::trivial);
  CHECK(nullhomotopy_verdict(z2, {1}).verdict == Homotopy::nontrivial);
  // A5 is perfect; the coset table decides
  auto a5 = group(2, {{1, 1}, {2, 2, 2}, power({1, 2}, 5)});
  auto r = nullhomotopy_verdict(a5, {1, 2, 1, 2});
  CHECK(r.verdict == Homotopy::nontrivial);
  CHECK(nullhomotopy_verdict(a5, power({1, 2}, 10)).verdict == Homotopy::trivial);

  NullhomotopyBudget bad;
  bad.diagram_nodes = 0;
  CHECK_THROWS_AS(bad.validate(), SpecError);
}

TEST_CASE("Tietze elimination preserves the group") {
  // <a, b | b = a^2> is Z
  auto g = group(2, {{2, -1, -1}});
  auto t = tietze_simplify(g);
  CHECK(t.group.generators == 1);
  CHECK(t.group.relators.empty());
  CHECK(t.apply({2}) == Word{1, 1});
}
