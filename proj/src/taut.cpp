#include "sc/taut.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sc {

std::string to_string(Taut t) {
  switch (t) {
    case Taut::in: return "in";
    case Taut::out: return "out";
    default: return "unknown";
  }
}

Taut TruncatedSpectrum::at(std::size_t l) const {
  if (l < 3) return Taut::out;
  auto it = entries.find(l);
  return it == entries.end() ? Taut::unknown : it->second.verdict;
}

std::vector<std::size_t> TruncatedSpectrum::lengths(Taut t) const {
  std::vector<std::size_t> out;
  for (const auto& [l, e] : entries)
    if (e.verdict == t) out.push_back(l);
  return out;
}

TruncatedSpectrum TruncatedSpectrum::from_sets(std::size_t horizon, const std::vector<std::size_t>& in,
                                               const std::vector<std::size_t>& unknown,
                                               const std::string& provenance) {
  TruncatedSpectrum s;
  s.horizon = horizon;
  s.provenance = provenance;
  for (std::size_t l = 3; l <= horizon; ++l) s.entries[l] = {Taut::out, provenance, ""};
  for (std::size_t l : unknown)
    if (l >= 3 && l <= horizon) s.entries[l] = {Taut::unknown, provenance, ""};
  for (std::size_t l : in)
    if (l >= 3 && l <= horizon) s.entries[l] = {Taut::in, provenance, ""};
  return s;
}

namespace {

// Loops of the graph grouped for presentation building: relator candidates
// and test candidates, each a closed vertex sequence.
class LoopInventory {
 public:
  LoopInventory(const SimplicialGraph& g, std::size_t max_length) : g_(g) {
    labelled_ = g.labelled() && g.transitive;
    const bool based_tests = labelled_ || g.transitive;
    std::vector<std::vector<int>> based;
    if (labelled_ || based_tests) based = simple_cycles(g, max_length, g.basepoint);
    if (labelled_) {
      relators_ = based;
    } else {
      relators_ = simple_cycles(g, max_length);
      build_tree();
    }
    tests_ = based_tests ? based : relators_;
  }

  bool labelled() const { return labelled_; }

  GammaPresentation presentation(std::size_t l) const {
    GammaPresentation p;
    p.l = l;
    p.labelled = labelled_;
    if (labelled_) {
      p.group.generators = g_.letter_names.size();
      p.group.names = g_.letter_names;
      for (std::size_t i = 0; i < g_.involution.size(); ++i)
        if (g_.involution[i]) p.group.relators.push_back({static_cast<int>(i + 1), static_cast<int>(i + 1)});
    } else {
      p.group.generators = chord_count_;
      for (std::size_t i = 0; i < chord_count_; ++i) p.group.names.push_back("e" + std::to_string(i));
    }
    for (const auto& c : relators_) {
      if (c.size() >= l) break;
      p.group.relators.push_back(word(c));
      ++p.relator_loops;
    }
    p.group.tidy();
    std::set<Word> seen;
    for (const auto& c : tests_) {
      if (c.size() < l) continue;
      if (c.size() > l) break;
      Word w = word(c);
      if (seen.insert(canonical_cyclic(w)).second) {
        p.tests.push_back(w);
        p.test_cycles.push_back(c);
      }
    }
    return p;
  }

 private:
  void build_tree() {
    const std::size_t n = g_.vertex_count();
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{g_.basepoint};
    seen[static_cast<std::size_t>(g_.basepoint)] = 1;
    std::set<std::pair<int, int>> tree;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int v : g_.adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          tree.insert({std::min(u, v), std::max(u, v)});
          queue.push_back(v);
        }
    }
    for (auto e : g_.edges())
      if (!tree.count(e)) chord_[e] = static_cast<int>(chord_count_++);
  }

  Word word(const std::vector<int>& cycle) const {
    Word w;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int x = cycle[i], y = cycle[(i + 1) % cycle.size()];
      if (labelled_) {
        w.push_back(g_.letter(x, y));
      } else {
        auto it = chord_.find({std::min(x, y), std::max(x, y)});
        if (it != chord_.end()) w.push_back(x < y ? it->second + 1 : -(it->second + 1));
      }
    }
    return w;
  }

  const SimplicialGraph& g_;
  bool labelled_ = false;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> tests_;
  std::map<std::pair<int, int>, int> chord_;
  std::size_t chord_count_ = 0;
};

std::string describe_cycle(const std::vector<int>& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "-" : "") << c[i];
  out << "-" << c.front();
  return out.str();
}

SpectrumEntry decide_length(const SimplicialGraph& g, const LoopInventory& inv, std::size_t l,
                            const NullhomotopyBudget& budget) {
  // Soundness on balls: labelled transitive balls see every loop through the
  // basepoint up to 2r+1; unlabelled transitive balls only certify fillings.
  bool complete = !g.ball_radius.has_value();
  bool in_transfers = complete;
  if (g.ball_radius && g.transitive && l <= 2 * *g.ball_radius + 1) {
    complete = true;
    in_transfers = inv.labelled();
  }
  if (!complete) return {Taut::unknown, "length exceeds what the ball can certify", ""};

  GammaPresentation p = inv.presentation(l);
  if (p.tests.empty()) return {Taut::out, "no simple cycle of length " + std::to_string(l), ""};

  NullhomotopySolver solver(p.group, budget);
  std::size_t unknown = 0;
  std::map<std::string, std::size_t> methods;
  for (std::size_t i = 0; i < p.tests.size(); ++i) {
    NullhomotopyResult r = solver.decide(p.tests[i]);
    if (r.verdict == Homotopy::nontrivial) {
      std::string witness = describe_cycle(p.test_cycles[i]);
      if (p.labelled) witness += " [" + p.group.format(p.tests[i]) + "]";
      if (!in_transfers)
        return {Taut::unknown, "loop is taut in the ball but may fill outside it (" + r.method + ")", witness};
      return {Taut::in, r.method + ": " + r.detail, witness};
    }
    if (r.verdict == Homotopy::unknown)
      ++unknown;
    else
      ++methods[r.method];
  }
  if (unknown) return {Taut::unknown, std::to_string(unknown) + " of " + std::to_string(p.tests.size()) +
                                          " loops undecided within budget", ""};
  std::string cert = "all " + std::to_string(p.tests.size()) + " loops fill:";
  for (const auto& [m, n] : methods) cert += " " + m + "=" + std::to_string(n);
  return {Taut::out, cert, ""};
}

TruncatedSpectrum spectrum(const SimplicialGraph& g, std::size_t horizon, const NullhomotopyBudget& budget,
                           bool parallel) {
  if (horizon < 3) throw SpecError("spectrum horizon must be at least 3");
  budget.validate();
  LoopInventory inv(g, horizon);
  std::vector<SpectrumEntry> results(horizon + 1);
  const std::ptrdiff_t top = static_cast<std::ptrdiff_t>(horizon);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t l = 3; l <= top; ++l)
      results[static_cast<std::size_t>(l)] = decide_length(g, inv, static_cast<std::size_t>(l), budget);
  } else {
    for (std::ptrdiff_t l = 3; l <= top; ++l)
      results[static_cast<std::size_t>(l)] = decide_length(g, inv, static_cast<std::size_t>(l), budget);
  }
  TruncatedSpectrum s;
  s.horizon = horizon;
  s.provenance = inv.labelled() ? "brute force over labelled loops" : "brute force over chord presentations";
  for (std::size_t l = 3; l <= horizon; ++l) s.entries[l] = std::move(results[l]);
  return s;
}

}  // namespace

GammaPresentation build_gamma_l(const SimplicialGraph& g, std::size_t l) {
  LoopInventory inv(g, std::max<std::size_t>(l, 3));
  return inv.presentation(l);
}

TruncatedSpectrum taut_spectrum_bruteforce(const SimplicialGraph& g, std::size_t horizon,
                                           const NullhomotopyBudget& budget) {
  return spectrum(g, horizon, budget, true);
}

TruncatedSpectrum taut_spectrum_bruteforce_serial(const SimplicialGraph& g, std::size_t horizon,
                                                  const NullhomotopyBudget& budget) {
  return spectrum(g, horizon, budget, false);
}

TruncatedSpectrum product_spectrum(const TruncatedSpectrum& a, const TruncatedSpectrum& b) {
  TruncatedSpectrum s;
  s.horizon = std::min(a.horizon, b.horizon);
  s.provenance = "union of factor spectra";
  for (std::size_t l = 3; l <= s.horizon; ++l) {
    Taut x = a.at(l), y = b.at(l);
    SpectrumEntry e;
    if (x == Taut::in || y == Taut::in) {
      e.verdict = Taut::in;
      const auto& src = (x == Taut::in) ? a.entries.at(l) : b.entries.at(l);
      e.certificate = std::string(x == Taut::in ? "first" : "second") + " factor: " + src.certificate;
      e.witness = src.witness;
    } else if (x == Taut::out && y == Taut::out) {
      e.verdict = Taut::out;
      e.certificate = "out in both factors";
    } else {
      e.verdict = Taut::unknown;
      e.certificate = "undecided in a factor";
    }
    s.entries[l] = std::move(e);
  }
  return s;
}

LengthInterval quotient_bracket(std::size_t l, BracketDirection dir, const DehnConstants& c) {
  if (l <= c.ell0)
    throw SpecError("bracket needs l > ell0 = " + std::to_string(c.ell0) + ", got " + std::to_string(l));
  if (dir == BracketDirection::quotient_to_factors) return {l, 2 * l - 1};
  return {(l + 1) / 2, l + 1};
}

namespace {

enum class Partner { found, absent, hidden };

Partner partner(const TruncatedSpectrum& other, std::size_t lo, std::size_t hi) {
  bool hidden = false;
  for (std::size_t m = lo; m <= hi; ++m) {
    Taut t = other.at(m);
    if (t == Taut::in) return Partner::found;
    if (t == Taut::unknown) hidden = true;
  }
  return hidden ? Partner::hidden : Partner::absent;
}

}  // namespace

KRelationVerdict k_related(const TruncatedSpectrum& h, const TruncatedSpectrum& h2, std::size_t k) {
  if (k == 0) throw SpecError("k must be at least 1");
  KRelationVerdict v;
  v.k = k;
  v.threshold = k * k + 2 * k + 2;
  bool hidden = false;
  const TruncatedSpectrum* sides[2] = {&h, &h2};
  for (int side = 0; side < 2; ++side) {
    const TruncatedSpectrum& a = *sides[side];
    const TruncatedSpectrum& b = *sides[1 - side];
    for (std::size_t l : a.lengths(Taut::in)) {
      if (l < v.threshold) continue;
      std::size_t lo = (l + k - 1) / k, hi = l * k;
      switch (partner(b, lo, hi)) {
        case Partner::found: break;
        case Partner::hidden: hidden = true; break;
        case Partner::absent:
          v.kind = KRelationVerdict::Kind::unrelated;
          v.witness = l;
          v.witness_side = side;
          v.detail = "length " + std::to_string(l) + " has no partner in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]";
          return v;
      }
    }
  }
  if (hidden) {
    v.kind = KRelationVerdict::Kind::inconclusive;
    v.detail = "a partner window meets undecided or truncated lengths";
  } else {
    v.detail = "every decided length beyond " + std::to_string(v.threshold) + " has a partner";
  }
  return v;
}

}  // namespace sc
