#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sc/factor.hpp"

namespace sc {

/// A nonidentity element of one factor (0 = A, 1 = B).
struct Syllable {
  int factor = 0;
  Element element;

  auto operator<=>(const Syllable&) const = default;
  bool operator==(const Syllable&) const = default;
};

/// Alternating sequence of syllables; empty means the identity.
struct NormalForm {
  std::vector<Syllable> syllables;

  std::size_t size() const { return syllables.size(); }
  bool empty() const { return syllables.empty(); }
  const Syllable& operator[](std::size_t i) const { return syllables[i]; }

  auto operator<=>(const NormalForm&) const = default;
  bool operator==(const NormalForm&) const = default;
};

struct LengthReport {
  std::size_t syllable_count = 0;
  std::size_t generator_length = 0;
  bool operator==(const LengthReport&) const = default;
};

struct CyclicReduction {
  NormalForm core;
  NormalForm conjugator;  // w = conjugator * core * conjugator^-1
};

/// The free product A*B of two supported factors, with normal-form
/// arithmetic and the token syntax `FACTOR.gen`, `FACTOR.gen^k`, `( ... )^k`.
class FreeProduct {
 public:
  FreeProduct(Factor a, Factor b);

  const Factor& factor(int i) const { return factors_[i]; }
  /// Index of the factor with this label, or -1.
  int factor_index(std::string_view label) const;

  NormalForm identity() const { return {}; }
  NormalForm syllable(int factor, Element e) const;
  NormalForm multiply(const NormalForm& u, const NormalForm& v) const;
  NormalForm multiply(std::initializer_list<const NormalForm*> parts) const;
  NormalForm inverse(const NormalForm& w) const;
  NormalForm power(const NormalForm& w, long long k) const;
  /// u * v * u^-1
  NormalForm conjugate(const NormalForm& w, const NormalForm& by) const;

  /// Re-normalizes an arbitrary syllable list (coalescing neighbours,
  /// dropping identities) into alternating form.
  NormalForm normalize(std::span<const Syllable> raw) const;
  /// Parses and normalizes a token string.
  NormalForm parse(std::string_view text) const;
  /// Token string that `parse` maps back to the same normal form.
  std::string format(const NormalForm& w) const;
  std::string format(const Syllable& s) const;

  LengthReport lengths(const NormalForm& w) const;
  std::size_t generator_length(const NormalForm& w) const;
  unsigned syllable_length(const Syllable& s) const {
    return factors_[s.factor].geodesic_length(s.element);
  }

  /// Full cyclic reduction: peels matching ends and merges the last syllable
  /// into the first when both lie in the same factor.
  CyclicReduction cyclically_reduce(const NormalForm& w) const;
  /// Peels only ends whose product is trivial (weak cyclic reduction).
  CyclicReduction weakly_cyclically_reduce(const NormalForm& w) const;
  bool is_cyclically_reduced(const NormalForm& w) const;

  /// Cyclic permutation starting at syllable `offset` (w must be cyclically
  /// reduced).
  NormalForm rotate(const NormalForm& w, std::size_t offset) const;

  /// Copy of this context whose generating sets also contain the given
  /// factor elements.
  FreeProduct with_generators(const std::vector<Element>& extra_a,
                              const std::vector<Element>& extra_b) const;

 private:
  std::array<Factor, 2> factors_;
};

}  // namespace sc
