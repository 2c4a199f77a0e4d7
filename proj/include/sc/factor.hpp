#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sc {

/// Raised for malformed factor declarations or input files.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a word contains a token that names nothing.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A factor element. The identity is always the empty vector.
///
/// Finite factors store a single table index (never 0, which is reserved for
/// the identity). Free factors store a freely reduced word whose letters are
/// +/-(i+1) for basis letter i.
using Element = std::vector<std::int32_t>;

enum class FactorKind { finite, free };

/// One free factor of A*B: either a finite group given by its
/// multiplication table, or a free group of finite rank.
///
/// Immutable after construction. Geodesic lengths with respect to the
/// generating set are precomputed for finite factors.
class Factor {
 public:
  /// Finite group from a multiplication table over named elements.
  /// `table[i][j]` is the index of `names[i] * names[j]`. The table is
  /// relabelled so the identity becomes index 0.
  static Factor finite(std::string label, std::vector<std::string> names,
                       const std::vector<std::vector<int>>& table,
                       const std::vector<std::string>& generators);

  /// Z/n generated by `name`; elements are printed `name^k`. `generator_powers`
  /// lists the exponents forming the generating set (symmetrized).
  static Factor cyclic(std::string label, std::string name, int order,
                       std::vector<int> generator_powers = {1});

  /// Free group on `basis`. Extra generators are words over the basis
  /// (token syntax without the factor prefix), added to the symmetric
  /// generating set alongside the basis letters.
  static Factor free(std::string label, std::vector<std::string> basis,
                     const std::vector<std::string>& extra_generators = {});

  const std::string& label() const { return label_; }
  FactorKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == FactorKind::finite; }
  /// Group order, or 0 for a free factor.
  std::size_t order() const { return is_finite() ? names_.size() : 0; }

  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element power(const Element& x, long long k) const;

  /// Order of an element; nullopt when infinite.
  std::optional<std::uint64_t> element_order(const Element& x) const;

  /// Word length of x over the generating set.
  unsigned geodesic_length(const Element& x) const;

  /// Symmetric generating set (closed under inverses, no identity).
  const std::vector<Element>& generating_set() const { return generators_; }

  /// A copy of this factor whose generating set also contains `extra`
  /// (and inverses).
  Factor with_generators(const std::vector<Element>& extra) const;

  /// All elements in index order (finite factors only; identity first).
  std::vector<Element> elements() const;

  /// Element named by a token body such as `a`, `b2`, or `x`. Exponents are
  /// handled by the word parser.
  Element letter(const std::string& name) const;

  /// Human-readable form without the factor prefix, parseable by
  /// `parse_element`.
  std::string format(const Element& x) const;

  /// Letters of a free-factor element as (basis name, exponent) runs.
  std::vector<std::pair<std::string, long long>> runs(const Element& x) const;

  bool operator==(const Factor& other) const;

 private:
  Factor() = default;
  void finish_generators(std::vector<Element> gens);
  void compute_finite_lengths();
  unsigned free_geodesic_length(const Element& x) const;

  std::string label_;
  FactorKind kind_ = FactorKind::finite;
  // finite
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<unsigned> lengths_;
  std::string cyclic_name_;  // non-empty for cyclic factors
  // free
  std::vector<std::string> basis_;
  bool basis_only_ = true;

  std::vector<Element> generators_;
  std::unordered_map<std::string, Element> by_name_;
};

}  // namespace sc
