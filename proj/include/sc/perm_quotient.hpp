#pragma once

#include <functional>
#include <optional>

#include "sc/fp_group.hpp"

namespace sc {

/// A transitive permutation representation: images[g][p] is the point
/// reached from p by generator g.
struct PermRep {
  std::size_t degree = 0;
  std::vector<std::vector<int>> images;

  int act(int p, const Word& w) const;
  /// True when w moves some point.
  bool moves(const Word& w) const;
};

struct LowIndexBudget {
  std::size_t max_degree = 6;
  std::size_t max_nodes = 200000;
};

/// Enumerates transitive representations of g of degree at most
/// max_degree (one per subgroup of that index, in canonical numbering).
/// `visit` returns true to stop. Returns false when the node budget ran out
/// before the search finished.
bool low_index_search(const FpGroup& g, const LowIndexBudget& budget,
                      const std::function<bool(const PermRep&)>& visit);

/// First representation in which w acts nontrivially.
std::optional<PermRep> find_nontrivial_quotient(const FpGroup& g, const Word& w, const LowIndexBudget& budget);

}  // namespace sc
