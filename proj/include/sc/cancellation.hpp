#pragma once

#include <optional>
#include <vector>

#include "sc/rational.hpp"
#include "sc/words.hpp"

namespace sc {

/// Relators closed under cyclic permutation of syllables and inversion.
/// Members are fully cyclically reduced and kept sorted without repeats.
class SymmetrizedSet {
 public:
  const std::vector<NormalForm>& members() const { return members_; }
  const std::vector<NormalForm>& origin() const { return origin_; }
  /// Orbit id of each member under rotation and inversion (one per relator
  /// class, numbered in order of first member).
  const std::vector<std::size_t>& orbit() const { return orbit_; }
  std::size_t orbit_count() const { return orbit_count_; }
  std::size_t size() const { return members_.size(); }
  std::size_t max_length() const;
  std::size_t min_length() const;

  /// The empty set, standing for the free product itself. Only the
  /// quotient-facing engines accept it; symmetrized_closure never returns it.
  static SymmetrizedSet none() { return {}; }

  friend SymmetrizedSet symmetrized_closure(const FreeProduct& fp,
                                            const std::vector<NormalForm>& relators);

 private:
  std::vector<NormalForm> members_;
  std::vector<NormalForm> origin_;
  std::vector<std::size_t> orbit_;
  std::size_t orbit_count_ = 0;
};

/// Smallest symmetrized set containing the cyclic reductions of `relators`.
/// Throws SpecError for an empty list or a relator that is trivial in A*B.
SymmetrizedSet symmetrized_closure(const FreeProduct& fp, const std::vector<NormalForm>& relators);

struct PieceWitness {
  NormalForm piece;
  std::size_t first = 0;   // member index
  std::size_t second = 0;  // member index
  std::size_t length = 0;  // syllables
  bool operator==(const PieceWitness&) const = default;
};

struct PieceReport {
  std::size_t max_piece_syllables = 0;
  std::size_t min_relator_syllables = 0;
  Rational optimal_lambda{0};
  /// Ordered pairs attaining optimal_lambda, sorted by member indices.
  std::vector<PieceWitness> witnesses;
  bool operator==(const PieceReport&) const = default;
};

/// Length in syllables of the longest piece shared as a prefix by two
/// distinct members. Leading syllables are matched exactly; when none match
/// but the first syllables lie in the same factor, the two members share a
/// one-syllable piece through a semi-reduced split of that syllable.
std::size_t common_piece_length(const NormalForm& r1, const NormalForm& r2);

/// Pairwise piece scan, OpenMP-parallel over the first member.
PieceReport pieces(const SymmetrizedSet& R);
/// Serial reference scan; identical output to `pieces`.
PieceReport pieces_serial(const SymmetrizedSet& R);

struct MetricConditionReport {
  bool holds = false;
  Rational lambda{0};
  Rational optimal_lambda{0};
  std::optional<PieceWitness> violation;
};

/// C'(lambda): every piece b in a member r has |b| < lambda |r|.
MetricConditionReport check_metric_condition(const SymmetrizedSet& R, const Rational& lambda);
MetricConditionReport check_metric_condition(const PieceReport& report, const Rational& lambda);

/// Every member has at least seven syllables.
bool validate_seven_syllables(const SymmetrizedSet& R);

struct DehnConstants {
  std::size_t M = 0;
  std::size_t ell0 = 0;
  Rational lambda{0};
  bool condition_holds = false;
};

/// M = longest geodesic syllable over all members, ell0 = M * max |r|,
/// lambda = optimal piece ratio, condition_holds <=> 1 >= 3 lambda (M + 1).
DehnConstants dehn_constants(const SymmetrizedSet& R, const FreeProduct& fp);
DehnConstants dehn_constants(const SymmetrizedSet& R, const FreeProduct& fp, const PieceReport& pieces);

/// `fp` with every syllable of every member added to its factor's
/// generating set, which forces M = 1.
FreeProduct augment_generators(const FreeProduct& fp, const SymmetrizedSet& R);

}  // namespace sc
