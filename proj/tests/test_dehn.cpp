#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sc/corpus.hpp"
#include "sc/dehn.hpp"
#include "sc/todd_coxeter.hpp"

using namespace sc;

namespace {

DehnSolver ab7() {
  auto fp = corpus::ab7_group();
  auto R = symmetrized_closure(fp, {corpus::ab7_relator(fp)});
  return DehnSolver(fp, R, dehn_constants(R, fp));
}

// Image in PSL(2,7) = <a, b | a^2, b^3, (ab)^7, [a,b]^4>, acting regularly.
struct Psl27 {
  CosetTable table;
  Psl27() {
    FpGroup g;
    g.generators = 2;
    g.relators = {{1, 1}, {2, 2, 2}};
    Word ab7, c4;
    for (int i = 0; i < 7; ++i) ab7.insert(ab7.end(), {1, 2});
    for (int i = 0; i < 4; ++i) c4.insert(c4.end(), {-1, -2, 1, 2});
    g.relators.push_back(ab7);
    g.relators.push_back(c4);
    table = *todd_coxeter(g, {});
  }
  bool trivial(const NormalForm& w) const {
    Word x;
    for (const auto& s : w.syllables) x.insert(x.end(), std::size_t(s.element[0]), s.factor + 1);
    return table.act(0, x) == 0;
  }
};

}  // namespace

TEST_CASE("relator squares and conjugates reduce with replayable traces") {
  auto S = ab7();
  const auto& fp = S.group();
  auto r = corpus::ab7_relator(fp);
  auto t = S.dehn_reduce(fp.multiply(r, r));
  CHECK(t.final.empty());
  CHECK(t.steps.size() == 2);
  CHECK(S.replay(t));

  auto g = fp.parse("B.b A.a B.b^2");
  auto c = S.dehn_reduce(fp.conjugate(r, g));
  CHECK(c.final.empty());
  CHECK(c.steps.size() == 1);
  CHECK(S.replay(c));

  auto a = fp.parse("A.a");
  CHECK(S.dehn_reduce(a).final == a);
  CHECK(S.dehn_reduce(a).steps.empty());
}

TEST_CASE("a majority window is replaced by the shorter complement") {
  auto S = ab7();
  const auto& fp = S.group();
  auto r = corpus::ab7_relator(fp);
  // 13 of the 14 syllables, flanked by letters that keep the word reduced
  NormalForm s;
  s.syllables.assign(r.syllables.begin(), r.syllables.begin() + 13);
  auto w = fp.multiply({&s});
  auto step = S.linear_step(w);
  REQUIRE(step.has_value());
  CHECK(fp.generator_length(step->result) < fp.generator_length(w));
  CHECK_FALSE(S.linear_step(fp.parse("(A.a B.b)^3")).has_value());
}

TEST_CASE("word problem against a finite quotient oracle") {
  auto S = ab7();
  const auto& fp = S.group();
  const auto& members = S.relators().members();
  Psl27 oracle_group;
  CHECK(oracle_group.table.cosets == 168);
  std::mt19937_64 rng(7);
  std::vector<NormalForm> words;
  for (int i = 0; i < 150; ++i) {
    NormalForm w;
    for (int k = 0; k < 3; ++k) {
      auto u = oracle::random_word(fp, 8, rng);
      w = fp.multiply(w, fp.conjugate(members[rng() % members.size()], u));
    }
    words.push_back(w);
    CHECK(S.is_trivial(w));
    CHECK(S.replay(S.dehn_reduce(w)));
  }
  for (int i = 0; i < 300; ++i) {
    auto w = oracle::random_word(fp, 1 + rng() % 16, rng);
    words.push_back(w);
    // nontrivial in a quotient forces nontrivial in the group
    if (!oracle_group.trivial(w)) CHECK_FALSE(S.is_trivial(w));
    if (S.is_trivial(w)) CHECK(oracle_group.trivial(w));
  }
  CHECK(word_problem_batch(S, words) == word_problem_batch_serial(S, words));
}

TEST_CASE("factor membership") {
  auto S = ab7();
  const auto& fp = S.group();
  auto r = corpus::ab7_relator(fp);
  auto m = S.factor_membership(fp.parse("A.a"), 0);
  CHECK(m.kind == MembershipKind::in);
  CHECK(m.element == Element{1});
  CHECK(S.factor_membership(fp.parse("A.a B.b"), 0).kind == MembershipKind::not_in);
  auto ra = fp.multiply(r, fp.parse("A.a"));
  auto m2 = S.factor_membership(ra, 0);
  CHECK(m2.kind == MembershipKind::in);
  CHECK(m2.element == Element{1});
  CHECK(S.factor_membership(fp.identity(), 1).kind == MembershipKind::in);
}

TEST_CASE("the Dehn condition is enforced") {
  auto fp = corpus::staircase_group();
  auto R = symmetrized_closure(fp, {corpus::staircase_relator(fp)});
  auto c = dehn_constants(R, fp);
  CHECK_FALSE(c.condition_holds);
  CHECK_THROWS_AS(DehnSolver(fp, R, c), SpecError);
  DehnSolver unsafe(fp, R, c, true);
  CHECK(unsafe.dehn_reduce(corpus::staircase_relator(fp)).final.empty());
}
