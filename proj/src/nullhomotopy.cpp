#include "sc/nullhomotopy.hpp"

#include <queue>
#include <set>

#include "sc/factor.hpp"

namespace sc {

void NullhomotopyBudget::validate() const {
  if (diagram_nodes == 0 || max_cosets == 0 || perm_nodes == 0)
    throw SpecError("null-homotopy budgets must be positive");
}

std::string to_string(Homotopy h) {
  switch (h) {
    case Homotopy::trivial: return "trivial";
    case Homotopy::nontrivial: return "nontrivial";
    default: return "unknown";
  }
}

NullhomotopySolver::NullhomotopySolver(const FpGroup& g, NullhomotopyBudget budget)
    : budget_(budget), tietze_(tietze_simplify(g)), abelian_(tietze_.group) {
  budget_.validate();
  std::set<Word> seen;
  for (const Word& r : tietze_.group.relators)
    for (const Word& base : {r, inverse_word(r)})
      for (std::size_t i = 0; i < base.size(); ++i) {
        Word rot(base.begin() + static_cast<std::ptrdiff_t>(i), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
        if (seen.insert(rot).second) cyclic_relators_.push_back(std::move(rot));
      }
}

// Best-first search for a van Kampen diagram: each move glues one relator
// cell along a maximal common segment with the current cyclic boundary word.
bool NullhomotopySolver::diagram_search(const Word& start, std::size_t& cells) const {
  using State = std::pair<std::size_t, Word>;  // (cells, boundary)
  auto key = [](const Word& w) {
    Word best = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
      Word rot(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      if (rot < best) best = std::move(rot);
    }
    return best;
  };
  auto cmp = [](const State& a, const State& b) {
    if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<State, std::vector<State>, decltype(cmp)> open(cmp);
  std::set<Word> seen;
  Word s = cyclic_reduce(start);
  open.push({0, s});
  seen.insert(key(s));
  std::size_t expanded = 0;
  while (!open.empty() && expanded < budget_.diagram_nodes) {
    auto [n, w] = open.top();
    open.pop();
    ++expanded;
    if (w.empty()) {
      cells = n;
      return true;
    }
    if (n >= budget_.diagram_cells) continue;
    const std::size_t len = w.size();
    for (std::size_t p = 0; p < len; ++p) {
      for (const Word& rho : cyclic_relators_) {
        std::size_t q = 0;
        while (q < rho.size() && q < len && w[(p + q) % len] == rho[q]) ++q;
        if (q == 0 || 2 * q < rho.size()) continue;
        // replace the matched segment by the inverse of the rest of rho
        Word next;
        for (std::size_t k = rho.size(); k-- > q;) next.push_back(-rho[k]);
        for (std::size_t k = q; k < len; ++k) next.push_back(w[(p + k) % len]);
        next = cyclic_reduce(next);
        if (seen.insert(key(next)).second) open.push({n + 1, std::move(next)});
      }
    }
  }
  return false;
}

const std::vector<PermRep>& NullhomotopySolver::quotients() {
  if (!quotients_tried_) {
    quotients_tried_ = true;
    LowIndexBudget lb{budget_.perm_degree, budget_.perm_nodes};
    low_index_search(tietze_.group, lb, [&](const PermRep& rep) {
      if (rep.degree > 1) quotients_.push_back(rep);
      return quotients_.size() >= budget_.cached_quotients;
    });
  }
  return quotients_;
}

NullhomotopyResult NullhomotopySolver::decide(const Word& input) {
  NullhomotopyResult res;
  const Word w = cyclic_reduce(tietze_.apply(input));
  if (w.empty()) {
    res.verdict = Homotopy::trivial;
    res.method = "free-reduction";
    res.detail = "word reduces to the identity after eliminating " + std::to_string(tietze_.eliminated) +
                 " generators";
    return res;
  }
  if (tietze_.group.relators.empty()) {
    res.verdict = Homotopy::nontrivial;
    res.method = "free-group";
    res.detail = "presentation simplifies to a free group of rank " + std::to_string(tietze_.group.generators) +
                 " and the word is reduced";
    return res;
  }
  if (!abelian_.kills(w)) {
    res.verdict = Homotopy::nontrivial;
    res.method = "abelian";
    res.detail = "word survives in the abelianization";
    return res;
  }
  if (!table_tried_) {
    table_tried_ = true;
    table_ = todd_coxeter(tietze_.group, {}, budget_.max_cosets);
  }
  if (table_) {
    const bool fixed = table_->act(0, w) == 0;
    res.verdict = fixed ? Homotopy::trivial : Homotopy::nontrivial;
    res.method = "coset-table";
    res.detail = "group has order " + std::to_string(table_->cosets) + " by coset enumeration";
    return res;
  }
  std::size_t cells = 0;
  if (diagram_search(w, cells)) {
    res.verdict = Homotopy::trivial;
    res.method = "diagram";
    res.cells = cells;
    res.detail = "van Kampen diagram with " + std::to_string(cells) + " cells";
    return res;
  }
  for (const PermRep& rep : quotients())
    if (rep.moves(w)) {
      res.verdict = Homotopy::nontrivial;
      res.method = "permutation";
      res.detail = "word moves a point in a transitive quotient of degree " + std::to_string(rep.degree);
      res.quotient = rep;
      return res;
    }
  res.verdict = Homotopy::unknown;
  res.method = "budget";
  res.detail = "no diagram within " + std::to_string(budget_.diagram_cells) +
               " cells and no permutation quotient up to degree " + std::to_string(budget_.perm_degree);
  return res;
}

NullhomotopyResult nullhomotopy_verdict(const FpGroup& g, const Word& w, const NullhomotopyBudget& budget) {
  NullhomotopySolver s(g, budget);
  return s.decide(w);
}

}  // namespace sc
