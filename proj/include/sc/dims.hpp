#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sc/kvfile.hpp"

namespace sc {

/// A dimension known to lie in [lo, hi]. An absent `hi` means no upper bound
/// is known; [0, inf) is the fully unknown value.
struct DimInterval {
  unsigned lo = 0;
  std::optional<unsigned> hi;

  static DimInterval exact(unsigned v) { return {v, v}; }
  static DimInterval at_most(unsigned v) { return {0, v}; }
  static DimInterval at_least(unsigned v) { return {v, std::nullopt}; }
  static DimInterval unknown() { return {}; }

  bool decided() const { return hi && *hi == lo; }
  bool contains(unsigned v) const { return v >= lo && (!hi || v <= *hi); }
  bool is_unknown() const { return lo == 0 && !hi; }

  /// "3", "[2, 3]", ">= 2", "<= 3" or "?".
  std::string format() const;
  /// Inverse of format; also accepts "[2,inf]".
  static DimInterval parse(const std::string& text);

  bool operator==(const DimInterval&) const = default;
};

/// Interval of max{x, y}: the bound is attained componentwise.
DimInterval interval_max(const DimInterval& x, const DimInterval& y);
/// Interval of max{x, floor}.
DimInterval interval_max(const DimInterval& x, unsigned floor);

struct GroupFlags {
  bool finitely_generated = false;
  bool one_ended = false;
  bool torsion_free = false;
  bool small_centralizers = false;
  bool acc_finite_subgroups = false;
  bool virtually_free = false;
  bool two_generated = false;
  bool free = false;

  /// Names of the set flags, in declaration order.
  std::vector<std::string> names() const;
  /// Sets the flag called `name`; throws SpecError for an unknown name.
  void set(const std::string& name);

  bool operator==(const GroupFlags&) const = default;
};

/// Numeric annotations for one group. Ring tags for cd_R are opaque labels
/// such as "Z" or "Q".
struct DimensionProfile {
  std::string name;
  DimInterval cd_fin, gd_fin, cd_vc, gd_vc;
  std::map<std::string, DimInterval> cd_ring;
  GroupFlags flags;

  /// Throws SpecError if an interval is empty or cd > gd is forced.
  void validate() const;
  bool operator==(const DimensionProfile&) const = default;
};

/// One emitted fact: `quantity relation value`, with the statement it comes
/// from and the hypotheses it consumed.
struct DimBound {
  std::string quantity;  // "gd_fin", "cd_vc", "cd_Q", ...
  std::string relation;  // "<=", "=", "in"
  std::string value;     // formatted number or interval
  std::string citation;
  std::vector<std::string> hypotheses;

  std::string format() const;
};

struct DimReport {
  std::vector<DimBound> bounds;
  std::vector<std::string> diagnostics;  // withheld outputs and why
};

struct GraphOfGroupsSpec {
  std::vector<DimensionProfile> vertices;
  struct Edge {
    std::string name;
    bool finite = true;
  };
  std::vector<Edge> edges;
};

/// The four max-inequalities for a graph of groups with finite edge groups,
/// plus the two sharper VCYC bounds from FIN data when every vertex has small
/// centralizers and the ascending chain condition on finite subgroups.
/// An infinite edge withholds every bound.
DimReport graph_of_groups_bounds(const GraphOfGroupsSpec& spec);

/// Tightens gd_vc <= max{gd_fin, 2} and cd_vc <= max{cd_fin, 2} when the
/// profile has small centralizers and the ascending chain condition. Without
/// those flags the profile is returned unchanged and a diagnostic is added.
DimensionProfile vcyc_from_fin(const DimensionProfile& p, DimReport* report = nullptr);

struct ScpHypotheses {
  bool c_finite = false;
  bool small_cancellation_1_12 = false;
  bool not_virtually_free = false;
  std::string small_cancellation_source = "asserted";
};

struct ScpResult {
  DimensionProfile group;
  DimReport report;
};

/// Dimensions of G = (A *_C B)/<<R>> for a C'(1/12) product that is not
/// virtually free: FIN and ring dimensions are max{A, B, 2}; VCYC dimensions
/// are bracketed between the VCYC lower bounds and the FIN upper bounds when
/// both factors are finitely generated with small centralizers and the
/// ascending chain condition. Missing hypotheses withhold every output.
ScpResult scp_dimensions(const DimensionProfile& a, const DimensionProfile& b,
                         const ScpHypotheses& hyp);

enum class Family { fin, vcyc };
enum class Tri { yes, no, unknown };
std::string to_string(Tri t);

/// Whether (cd_F, gd_F) = (2, 3): yes when both are decided to be those
/// values, no when the intervals exclude that pair, unknown otherwise.
Tri eilenberg_ganea_verdict(const DimensionProfile& p, Family family);

/// Profile keys under `prefix.` (e.g. "factor.A"):
///
///     factor.A.gd_fin = 3        # 3 | <=3 | >=2 | [2,3] | ?
///     factor.A.cd_fin = 2
///     factor.A.gd_vc = [2,3]
///     factor.A.cd_ring.Z = 3     # any ring tag
///     factor.A.flags = finitely_generated small_centralizers
///
/// Missing dimensions are unknown.
DimensionProfile profile_from_kv(const KeyValueFile& kv, const std::string& prefix,
                                 const std::string& name);

/// A dimension problem read from a profile file. Exactly one shape applies:
/// `factor.*` sections describe a small cancellation product (with the
/// `hypothesis.*` keys), `vertex.*`/`edge.*` a graph of groups, and
/// `group.*` a single profile.
///
///     hypothesis.c_finite = true
///     hypothesis.small_cancellation = C'(1/12)
///     hypothesis.not_virtually_free = true
///     hypothesis.presentation = quotient.pres   # certify C'(1/12) instead
///     edge.e1.finite = true
struct DimensionProblem {
  enum class Kind { product, graph, single } kind = Kind::single;
  DimensionProfile a, b;
  ScpHypotheses hypotheses;
  std::optional<std::string> presentation;  // relative to the profile file
  GraphOfGroupsSpec graph;
  DimensionProfile single;

  static DimensionProblem from_kv(const KeyValueFile& kv);
  static DimensionProblem load(const std::string& path);
};

}  // namespace sc
