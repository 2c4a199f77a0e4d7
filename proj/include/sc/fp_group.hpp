#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sc {

/// A word over generators 0..k-1; letter +(i+1) is generator i and -(i+1)
/// its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
/// Free reduction followed by removing inverse pairs at the two ends.
Word cyclic_reduce(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
/// Lexicographically least rotation of w or of its inverse.
Word canonical_cyclic(const Word& w);

/// A finitely presented group <x_0..x_{k-1} | relators>.
struct FpGroup {
  std::size_t generators = 0;
  std::vector<Word> relators;
  std::vector<std::string> names;  // optional display names

  std::string format(const Word& w) const;
  /// Drops empty relators and duplicates up to rotation and inversion.
  void tidy();
};

/// Result of eliminating generators that occur exactly once in some relator.
struct TietzeReduction {
  FpGroup group;
  /// For each original generator, its image as a word over the surviving
  /// generators.
  std::vector<Word> image;
  std::size_t eliminated = 0;

  Word apply(const Word& w) const;
};

/// Repeated Tietze elimination; stops when no relator of length at most
/// `max_relator_length` offers a singly occurring generator.
TietzeReduction tietze_simplify(const FpGroup& g, std::size_t max_relator_length = 4096);

/// The abelianization Z^k / (relator exponent lattice) in echelon form.
class AbelianQuotient {
 public:
  explicit AbelianQuotient(const FpGroup& g);
  /// True when w maps to zero in the abelianization.
  bool kills(const Word& w) const;
  /// Invariant factors followed by zeros for each free rank.
  std::vector<long long> invariants() const;

 private:
  std::size_t k_;
  std::vector<std::vector<long long>> rows_;  // echelon rows (entries fit: checked on build)
  std::vector<std::size_t> pivots_;
  bool overflow_ = false;
};

}  // namespace sc
