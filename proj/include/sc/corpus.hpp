#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sc/cancellation.hpp"
#include "sc/nullhomotopy.hpp"

namespace sc {

/// Fixed groups reused by the acceptance suite and the benchmarks.
namespace corpus {

/// (ab)^7 in Z/2 * Z/3.
FreeProduct ab7_group();
NormalForm ab7_relator(const FreeProduct& fp);

/// (a b1) a b2 (a b1)^2 a b2 ... (a b1)^12 a b2 in F(a) * F(b1, b2).
FreeProduct staircase_group();
NormalForm staircase_relator(const FreeProduct& fp);

/// (ab)^4 in Z/10 * Z/2.
FreeProduct ab4_group();
NormalForm ab4_relator(const FreeProduct& fp);

}  // namespace corpus

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  NullhomotopyBudget budget;
  std::size_t dehn_samples = 200;     // per side, criterion 3
  std::size_t ping_pong_samples = 1000;
};

struct AcceptanceRow {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;     // deterministic summary
  double seconds = 0;     // wall time, kept out of reports
  double limit_seconds = 0;
};

/// Runs one acceptance criterion (1..10).
AcceptanceRow run_acceptance(int id, const AcceptanceOptions& opt);
/// All ten, in order.
std::vector<AcceptanceRow> run_acceptance_suite(const AcceptanceOptions& opt);

/// Report without timings, so that repeated runs are byte-identical.
nlohmann::ordered_json to_json(const std::vector<AcceptanceRow>& rows);

}  // namespace sc
