#pragma once

#include <optional>

#include "sc/fp_group.hpp"

namespace sc {

/// A complete coset table: entry [c][col] is the coset reached from c by the
/// letter with column col (2*g for x_g, 2*g+1 for its inverse).
struct CosetTable {
  std::size_t cosets = 0;
  std::size_t columns = 0;
  std::vector<int> entries;  // row-major

  int at(std::size_t c, std::size_t col) const { return entries[c * columns + col]; }
  /// Image of coset c under the word w.
  int act(int c, const Word& w) const;
};

inline std::size_t letter_column(int x) {
  return 2 * static_cast<std::size_t>(std::abs(x) - 1) + (x < 0 ? 1 : 0);
}

/// HLT coset enumeration of the cosets of <subgroup> in g. Returns nullopt
/// when more than `max_cosets` cosets would be live at once.
std::optional<CosetTable> todd_coxeter(const FpGroup& g, const std::vector<Word>& subgroup,
                                       std::size_t max_cosets = 200000);

}  // namespace sc
