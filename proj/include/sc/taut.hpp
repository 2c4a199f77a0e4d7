#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sc/cancellation.hpp"
#include "sc/graph.hpp"
#include "sc/nullhomotopy.hpp"

namespace sc {

enum class Taut { in, out, unknown };
std::string to_string(Taut t);

struct SpectrumEntry {
  Taut verdict = Taut::unknown;
  std::string certificate;  // why the verdict holds (or why it is undecided)
  std::string witness;      // a taut loop for In entries
  bool operator==(const SpectrumEntry&) const = default;
};

/// H(Gamma) restricted to lengths 3..horizon.
struct TruncatedSpectrum {
  std::size_t horizon = 2;
  std::map<std::size_t, SpectrumEntry> entries;
  std::string provenance;

  /// Verdict at any length: lengths below 3 are Out (simplicial graphs have
  /// no shorter loops), lengths beyond the horizon are Unknown.
  Taut at(std::size_t l) const;
  std::vector<std::size_t> lengths(Taut t) const;

  /// Spectrum with the given In and Unknown lengths and Out elsewhere.
  static TruncatedSpectrum from_sets(std::size_t horizon, const std::vector<std::size_t>& in,
                                     const std::vector<std::size_t>& unknown = {},
                                     const std::string& provenance = "declared");
  bool operator==(const TruncatedSpectrum&) const = default;
};

/// pi_1 of Gamma_l as a presentation, plus the length-l loops to test.
/// Unlabelled graphs use a spanning tree: generators are the non-tree edges
/// and relators are the chord words of simple cycles shorter than l.
/// Labelled vertex-transitive graphs (Cayley balls) use the labels:
/// G_l = <letters | s^2 for involutions, labels of short loops at the
/// basepoint>, and a loop is null-homotopic in Gamma_l iff its label is
/// trivial in G_l.
struct GammaPresentation {
  std::size_t l = 0;
  bool labelled = false;
  FpGroup group;
  std::size_t relator_loops = 0;
  std::vector<Word> tests;                    // deduplicated loop words of length l
  std::vector<std::vector<int>> test_cycles;  // one vertex cycle per test word
};

GammaPresentation build_gamma_l(const SimplicialGraph& g, std::size_t l);

/// Brute-force spectrum, OpenMP-parallel over lengths.
TruncatedSpectrum taut_spectrum_bruteforce(const SimplicialGraph& g, std::size_t horizon,
                                           const NullhomotopyBudget& budget = {});
/// Serial reference with identical output.
TruncatedSpectrum taut_spectrum_bruteforce_serial(const SimplicialGraph& g, std::size_t horizon,
                                                  const NullhomotopyBudget& budget = {});

/// Pointwise three-valued union over the smaller horizon.
TruncatedSpectrum product_spectrum(const TruncatedSpectrum& a, const TruncatedSpectrum& b);

enum class BracketDirection { quotient_to_factors, factors_to_quotient };

struct LengthInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// Window where a partner length must occur: [l, 2l-1] from quotient to
/// factors and [ceil(l/2), l+1] from factors to quotient. Requires l > ell0.
LengthInterval quotient_bracket(std::size_t l, BracketDirection dir, const DehnConstants& c);

struct KRelationVerdict {
  enum class Kind { related, unrelated, inconclusive };
  Kind kind = Kind::related;
  std::size_t k = 1;
  std::size_t threshold = 0;        // k^2 + 2k + 2
  std::optional<std::size_t> witness;
  int witness_side = 0;             // 0: length in the first spectrum, 1: in the second
  std::string detail;
};

KRelationVerdict k_related(const TruncatedSpectrum& h, const TruncatedSpectrum& h2, std::size_t k);

}  // namespace sc
