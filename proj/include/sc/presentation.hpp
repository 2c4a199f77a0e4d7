#pragma once

#include <string>
#include <vector>

#include "sc/kvfile.hpp"
#include "sc/words.hpp"

namespace sc {

/// Two factors and a list of relators in A*B.
///
/// File schema (keys in any order; factor indices follow label order):
///
///     factor.A.kind = cyclic          # cyclic | table | free
///     factor.A.generator = a          # cyclic: generator name
///     factor.A.order = 2              # cyclic: order
///     factor.A.powers = 1             # cyclic: generating exponents (default 1)
///     factor.T.elements = e s t u     # table: element names
///     factor.T.table = e s t u ; ...  # table: rows separated by ';'
///     factor.T.generators = s t       # table: generating elements
///     factor.F.basis = b1 b2          # free: basis letters
///     factor.F.extra = b1 b2 ; b1^2   # free: optional extra generators
///     relator = (A.a B.b)^7           # repeatable
struct Presentation {
  FreeProduct group;
  std::vector<NormalForm> relators;

  static Presentation from_kv(const KeyValueFile& kv);
  static Presentation load(const std::string& path);
  static Presentation parse(std::string_view text);
};

/// Factor declared under `prefix.LABEL.*` in a key-value file.
Factor factor_from_kv(const KeyValueFile& kv, const std::string& prefix, const std::string& label);

}  // namespace sc
