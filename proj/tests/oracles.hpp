#pragma once

// Reference implementations used only by the tests. They follow the
// definitions literally and make no attempt at speed.

#include <algorithm>
#include <random>
#include <set>

#include "sc/cancellation.hpp"
#include "sc/fp_group.hpp"

namespace oracle {

// All rotations of the cyclic reductions of each relator and of its inverse.
inline std::set<sc::NormalForm> closure(const sc::FreeProduct& fp,
                                        const std::vector<sc::NormalForm>& rs) {
  std::set<sc::NormalForm> out;
  for (const auto& r : rs) {
    for (const auto& s : {r, fp.inverse(r)}) {
      auto core = fp.cyclically_reduce(s).core;
      for (std::size_t k = 0; k < core.size(); ++k) {
        sc::NormalForm rot;
        for (std::size_t i = 0; i < core.size(); ++i) rot.syllables.push_back(core[(k + i) % core.size()]);
        out.insert(rot);
      }
    }
  }
  return out;
}

// Longest piece over ordered pairs of distinct members, as a ratio of the
// shorter member: syllables equal one by one from the start, and two members
// that start in the same factor with different syllables still share one
// syllable after splitting it.
inline sc::Rational optimal_lambda(const std::vector<sc::NormalForm>& members) {
  sc::Rational best(0);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      const auto& x = members[i];
      const auto& y = members[j];
      std::size_t n = 0;
      while (n < x.size() && n < y.size() && x[n] == y[n]) ++n;
      if (n == 0 && x[0].factor == y[0].factor) n = 1;
      const auto m = std::min(x.size(), y.size());
      best = std::max(best, sc::Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)));
    }
  return best;
}

inline sc::Element random_element(const sc::Factor& f, std::mt19937_64& rng) {
  if (f.is_finite()) return sc::Element{int(std::uniform_int_distribution<std::size_t>(1, f.order() - 1)(rng))};
  const auto& g = f.generating_set();
  for (;;) {
    sc::Element e;
    for (int i = 0; i < 3; ++i) e = f.multiply(e, g[std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng)]);
    if (!e.empty()) return e;
  }
}

// Arbitrary syllable list (not necessarily alternating), normalized.
inline sc::NormalForm random_word(const sc::FreeProduct& fp, std::size_t n, std::mt19937_64& rng) {
  std::vector<sc::Syllable> raw;
  for (std::size_t i = 0; i < n; ++i) {
    int f = int(rng() & 1);
    raw.push_back({f, random_element(fp.factor(f), rng)});
  }
  return fp.normalize(raw);
}

}  // namespace oracle
