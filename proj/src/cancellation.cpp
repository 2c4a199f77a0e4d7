#include "sc/cancellation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sc {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used == s.size()) return Rational(n);
    } else {
      std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      std::size_t ua = 0, ub = 0;
      long long n = std::stoll(a, &ua);
      long long d = std::stoll(b, &ub);
      if (ua == a.size() && ub == b.size() && d != 0) return Rational(n, d);
    }
  } catch (const std::logic_error&) {
  }
  throw ParseError("not a rational number: '" + s + "'");
}

std::size_t SymmetrizedSet::max_length() const {
  std::size_t m = 0;
  for (const auto& r : members_) m = std::max(m, r.size());
  return m;
}

std::size_t SymmetrizedSet::min_length() const {
  std::size_t m = members_.empty() ? 0 : members_.front().size();
  for (const auto& r : members_) m = std::min(m, r.size());
  return m;
}

SymmetrizedSet symmetrized_closure(const FreeProduct& fp, const std::vector<NormalForm>& relators) {
  if (relators.empty()) throw SpecError("symmetrized set needs at least one relator");
  std::set<NormalForm> all;
  std::vector<std::vector<NormalForm>> orbits;
  for (const auto& r : relators) {
    NormalForm core = fp.cyclically_reduce(r).core;
    if (core.empty()) throw SpecError("relator " + fp.format(r) + " is trivial in the free product");
    std::vector<NormalForm> orbit;
    for (const NormalForm& base : {core, fp.inverse(core)})
      for (std::size_t i = 0; i < base.size(); ++i) orbit.push_back(fp.rotate(base, i));
    for (auto& m : orbit) all.insert(m);
  }
  SymmetrizedSet R;
  R.origin_ = relators;
  R.members_.assign(all.begin(), all.end());
  R.orbit_.assign(R.members_.size(), static_cast<std::size_t>(-1));
  auto index_of = [&](const NormalForm& w) {
    return static_cast<std::size_t>(std::lower_bound(R.members_.begin(), R.members_.end(), w) -
                                    R.members_.begin());
  };
  for (std::size_t i = 0; i < R.members_.size(); ++i) {
    if (R.orbit_[i] != static_cast<std::size_t>(-1)) continue;
    const NormalForm& m = R.members_[i];
    for (const NormalForm& base : {m, fp.inverse(m)})
      for (std::size_t k = 0; k < base.size(); ++k) R.orbit_[index_of(fp.rotate(base, k))] = R.orbit_count_;
    ++R.orbit_count_;
  }
  return R;
}

std::size_t common_piece_length(const NormalForm& r1, const NormalForm& r2) {
  const std::size_t n = std::min(r1.size(), r2.size());
  std::size_t k = 0;
  while (k < n && r1[k] == r2[k]) ++k;
  if (k == 0 && n > 0 && r1[0].factor == r2[0].factor) return 1;
  return k;
}

namespace {

struct PairResult {
  // ratio numerator/denominator in syllables, kept unreduced for exact compare
  std::size_t piece = 0;
  std::size_t length = 1;
};

bool ratio_less(std::size_t p1, std::size_t l1, std::size_t p2, std::size_t l2) {
  return p1 * l2 < p2 * l1;
}

PieceReport assemble(const SymmetrizedSet& R, const std::vector<std::vector<PieceWitness>>& per_row,
                     const std::vector<PairResult>& best_per_row) {
  PieceReport rep;
  rep.min_relator_syllables = R.min_length();
  PairResult best{0, 1};
  for (const auto& b : best_per_row)
    if (ratio_less(best.piece, best.length, b.piece, b.length)) best = b;
  rep.optimal_lambda = Rational(static_cast<std::int64_t>(best.piece), static_cast<std::int64_t>(best.length));
  for (std::size_t i = 0; i < per_row.size(); ++i) {
    for (const auto& w : per_row[i]) {
      rep.max_piece_syllables = std::max(rep.max_piece_syllables, w.length);
      std::size_t len = std::min(R.members()[w.first].size(), R.members()[w.second].size());
      if (w.length * best.length == best.piece * len && best.piece > 0) rep.witnesses.push_back(w);
    }
  }
  return rep;
}

// Row i of the pairwise scan: all j != i. Records every pair with a nonzero
// piece so the merge can pick out the global maximum.
void scan_row(const SymmetrizedSet& R, std::size_t i, std::vector<PieceWitness>& out, PairResult& best) {
  const auto& M = R.members();
  for (std::size_t j = 0; j < M.size(); ++j) {
    if (j == i) continue;
    std::size_t p = common_piece_length(M[i], M[j]);
    if (p == 0) continue;
    std::size_t len = std::min(M[i].size(), M[j].size());
    if (ratio_less(best.piece, best.length, p, len)) best = {p, len};
    PieceWitness w;
    w.first = i;
    w.second = j;
    w.length = p;
    w.piece.syllables.assign(M[i].syllables.begin(), M[i].syllables.begin() + static_cast<std::ptrdiff_t>(p));
    if (!out.empty() && out.back().length < p) out.clear();
    out.push_back(std::move(w));
  }
  // keep only the row's longest pieces plus anything matching its best ratio
  std::vector<PieceWitness> kept;
  std::size_t top = 0;
  for (const auto& w : out) top = std::max(top, w.length);
  for (auto& w : out) {
    std::size_t len = std::min(M[w.first].size(), M[w.second].size());
    if (w.length == top || w.length * best.length == best.piece * len) kept.push_back(std::move(w));
  }
  out = std::move(kept);
}

}  // namespace

PieceReport pieces_serial(const SymmetrizedSet& R) {
  const std::size_t n = R.size();
  std::vector<std::vector<PieceWitness>> rows(n);
  std::vector<PairResult> best(n, PairResult{0, 1});
  for (std::size_t i = 0; i < n; ++i) scan_row(R, i, rows[i], best[i]);
  return assemble(R, rows, best);
}

PieceReport pieces(const SymmetrizedSet& R) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(R.size());
  std::vector<std::vector<PieceWitness>> rows(static_cast<std::size_t>(n));
  std::vector<PairResult> best(static_cast<std::size_t>(n), PairResult{0, 1});
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    scan_row(R, static_cast<std::size_t>(i), rows[static_cast<std::size_t>(i)], best[static_cast<std::size_t>(i)]);
  return assemble(R, rows, best);
}

MetricConditionReport check_metric_condition(const PieceReport& report, const Rational& lambda) {
  MetricConditionReport out;
  out.lambda = lambda;
  out.optimal_lambda = report.optimal_lambda;
  out.holds = report.optimal_lambda < lambda;
  if (!out.holds && !report.witnesses.empty()) out.violation = report.witnesses.front();
  return out;
}

MetricConditionReport check_metric_condition(const SymmetrizedSet& R, const Rational& lambda) {
  return check_metric_condition(pieces(R), lambda);
}

bool validate_seven_syllables(const SymmetrizedSet& R) {
  if (R.size() == 0) return false;
  for (const auto& r : R.members())
    if (r.size() < 7) return false;
  return true;
}

DehnConstants dehn_constants(const SymmetrizedSet& R, const FreeProduct& fp, const PieceReport& rep) {
  DehnConstants c;
  for (const auto& r : R.members())
    for (const auto& s : r.syllables) c.M = std::max<std::size_t>(c.M, fp.syllable_length(s));
  c.ell0 = c.M * R.max_length();
  c.lambda = rep.optimal_lambda;
  c.condition_holds = Rational(1) >= Rational(3) * c.lambda * Rational(static_cast<std::int64_t>(c.M + 1));
  return c;
}

DehnConstants dehn_constants(const SymmetrizedSet& R, const FreeProduct& fp) {
  return dehn_constants(R, fp, pieces(R));
}

FreeProduct augment_generators(const FreeProduct& fp, const SymmetrizedSet& R) {
  std::vector<Element> extra[2];
  for (const auto& r : R.members())
    for (const auto& s : r.syllables) extra[s.factor].push_back(s.element);
  return fp.with_generators(extra[0], extra[1]);
}

}  // namespace sc
