#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sc/cancellation.hpp"

namespace sc {

/// One rewriting step: the window of `window_length` syllables starting at
/// `offset` matched the prefix `replaced` of member `member`; it was swapped
/// for the inverse of the remainder. `conjugator` places the consumed
/// relator in the frame of the original input.
struct DehnStep {
  std::size_t offset = 0;
  std::size_t member = 0;
  std::size_t window_length = 0;
  NormalForm replaced;
  NormalForm replacement;
  NormalForm conjugator;
  NormalForm result;
};

/// initial = prod(conjugator_i * member_i * conjugator_i^-1) * frame * final * frame^-1
struct ReductionTrace {
  NormalForm initial;
  NormalForm final;
  NormalForm frame;
  bool cyclic = true;
  std::vector<DehnStep> steps;
};

enum class MembershipKind { in, not_in, unknown };

struct Membership {
  MembershipKind kind = MembershipKind::unknown;
  Element element;     // meaningful when kind == in
  std::string reason;  // why the verdict holds or why it is unknown
};

/// Dehn's algorithm for (A*B)/<<R>>. Stateless after construction; the
/// relator index is read-only so one solver can serve many threads.
class DehnSolver {
 public:
  /// Throws SpecError when the constants do not satisfy 1 >= 3 lambda (M+1)
  /// unless `unsafe` is set.
  DehnSolver(FreeProduct fp, SymmetrizedSet R, DehnConstants constants, bool unsafe = false);

  const FreeProduct& group() const { return fp_; }
  const SymmetrizedSet& relators() const { return R_; }
  const DehnConstants& constants() const { return c_; }

  /// One step on the cyclic word w (cyclically reduced). Returns the
  /// rewritten linear word before cyclic reduction.
  std::optional<DehnStep> greendlinger_step(const NormalForm& w) const;
  /// Same search without wrap-around windows.
  std::optional<DehnStep> linear_step(const NormalForm& w) const;

  ReductionTrace dehn_reduce(const NormalForm& w) const;
  ReductionTrace linear_reduce(const NormalForm& w) const;

  bool is_trivial(const NormalForm& w) const;
  Membership factor_membership(const NormalForm& w, int factor) const;

  /// Replays a trace as an explicit product of relator conjugates and checks
  /// it equals the initial word in A*B.
  bool replay(const ReductionTrace& t) const;

  /// Fewest window syllables any member needs to qualify.
  std::size_t min_window() const { return min_window_; }

 private:
  std::optional<DehnStep> search(const NormalForm& w, bool cyclic) const;
  bool qualifies(std::size_t window, std::size_t member_length) const;

  FreeProduct fp_;
  SymmetrizedSet R_;
  DehnConstants c_;
  std::size_t min_window_ = 2;
  // members keyed by their second syllable, which must match exactly for
  // every window of three or more syllables
  std::map<Syllable, std::vector<std::size_t>> by_second_;
};

/// Word problem over many inputs, OpenMP-parallel.
std::vector<bool> word_problem_batch(const DehnSolver& solver, const std::vector<NormalForm>& words);
/// Serial reference for `word_problem_batch`.
std::vector<bool> word_problem_batch_serial(const DehnSolver& solver, const std::vector<NormalForm>& words);

}  // namespace sc
