#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sc/dims.hpp"
#include "sc/rational.hpp"
#include "sc/words.hpp"

namespace sc {

struct TorsionHypothesis {
  bool holds = true;
  std::vector<std::string> offenders;  // distinct finite-order syllables, formatted
  std::vector<std::string> warnings;
};

/// True iff no relator syllable has finite order in its factor. Relators are
/// checked as given; cyclic permutations and inverses share their syllables.
TorsionHypothesis relator_torsion_hypothesis(const FreeProduct& fp,
                                             const std::vector<NormalForm>& relators);

enum class PointsTo { a, b, neither };
std::string to_string(PointsTo p);

/// Position of the image of the base edge midpoint in the Bass-Serre tree,
/// tracked only through the side it lies on and its distance from the base
/// edge in half-edge units.
struct PingPongState {
  PointsTo points_to = PointsTo::neither;
  unsigned depth = 0;
  bool operator==(const PingPongState&) const = default;
};

struct PingPongResult {
  enum class Kind { moved, fixed, inconclusive } kind = Kind::fixed;
  std::vector<PingPongState> trace;  // state after each syllable, in application order
  std::optional<std::size_t> offender;  // syllable index in w for inconclusive
  std::string offender_text;
};

/// Applies the syllables of w right to left to the midpoint state. Every
/// infinite-order syllable moves the point one half-edge further from the
/// base edge, across the vertex of its own factor.
PingPongResult ping_pong_trace(const FreeProduct& fp, const NormalForm& w);

/// Depth strictly increases along the trace.
bool monotone_depth(const PingPongResult& r);

/// A C'(1/6) claim for the relator set, either computed or asserted by the
/// user.
struct CancellationCertificate {
  bool holds = false;
  std::optional<Rational> optimal_lambda;
  std::string source = "none";  // "computed", "asserted" or "none"
};

struct OneEndedVerdict {
  enum class Kind { one_ended, not_applicable, unknown } kind = Kind::not_applicable;
  std::string citation;  // always set for one_ended
  std::string reason;
  TorsionHypothesis torsion;
};
std::string to_string(OneEndedVerdict::Kind k);

/// One-endedness of G = (A*B)/<<R>>. `g` carries flags asserted for G
/// itself (torsion_free, two_generated, free).
OneEndedVerdict one_ended_verdict(const GroupFlags& a, const GroupFlags& b, const GroupFlags& g,
                                  const FreeProduct& fp, const std::vector<NormalForm>& relators,
                                  const CancellationCertificate& cert);

}  // namespace sc
