#pragma once

#include <memory>
#include <optional>
#include <string>

#include "sc/fp_group.hpp"
#include "sc/perm_quotient.hpp"
#include "sc/todd_coxeter.hpp"

namespace sc {

struct NullhomotopyBudget {
  std::size_t diagram_cells = 10;
  std::size_t diagram_nodes = 20000;
  std::size_t max_cosets = 200000;
  std::size_t perm_degree = 6;
  std::size_t perm_nodes = 200000;
  std::size_t cached_quotients = 4096;

  /// Throws SpecError on a zero-sized budget.
  void validate() const;
};

enum class Homotopy { trivial, nontrivial, unknown };

struct NullhomotopyResult {
  Homotopy verdict = Homotopy::unknown;
  std::string method;  // short tag: free-reduction, free-group, abelian, coset-table, diagram, permutation
  std::string detail;
  std::size_t cells = 0;           // diagram size for the diagram method
  std::optional<PermRep> quotient;  // witness for the permutation method
};

/// Decides triviality of words in one finitely presented group, reusing
/// its simplified presentation and cached quotients across calls.
/// Not thread-safe: caches fill lazily.
class NullhomotopySolver {
 public:
  NullhomotopySolver(const FpGroup& g, NullhomotopyBudget budget = {});
  NullhomotopyResult decide(const Word& w);
  const TietzeReduction& simplified() const { return tietze_; }

 private:
  bool diagram_search(const Word& w, std::size_t& cells) const;
  const std::vector<PermRep>& quotients();

  NullhomotopyBudget budget_;
  TietzeReduction tietze_;
  AbelianQuotient abelian_;
  std::vector<Word> cyclic_relators_;  // every rotation of every relator and inverse
  bool table_tried_ = false;
  std::optional<CosetTable> table_;
  bool quotients_tried_ = false;
  std::vector<PermRep> quotients_;
};

/// One-shot convenience wrapper.
NullhomotopyResult nullhomotopy_verdict(const FpGroup& g, const Word& w, const NullhomotopyBudget& budget = {});

std::string to_string(Homotopy h);

}  // namespace sc
