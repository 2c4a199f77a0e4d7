#include "sc/perm_quotient.hpp"

#include "sc/todd_coxeter.hpp"

namespace sc {

int PermRep::act(int p, const Word& w) const {
  for (int x : w) {
    const auto& img = images[static_cast<std::size_t>(std::abs(x) - 1)];
    if (x > 0) {
      p = img[static_cast<std::size_t>(p)];
    } else {
      for (std::size_t q = 0; q < degree; ++q)
        if (img[q] == p) {
          p = static_cast<int>(q);
          break;
        }
    }
  }
  return p;
}

bool PermRep::moves(const Word& w) const {
  for (std::size_t p = 0; p < degree; ++p)
    if (act(static_cast<int>(p), w) != static_cast<int>(p)) return true;
  return false;
}

namespace {

class LowIndex {
 public:
  LowIndex(const FpGroup& g, const LowIndexBudget& b, const std::function<bool(const PermRep&)>& visit)
      : cols_(2 * g.generators), budget_(b), visit_(visit) {
    for (const Word& r : g.relators) {
      Word c = cyclic_reduce(r);
      if (!c.empty()) rels_.push_back(std::move(c));
    }
  }

  // returns true when the search should stop (visitor asked, or budget)
  bool run() {
    std::vector<int> table(budget_.max_degree * cols_, -1);
    if (cols_ == 0) return visit_(PermRep{1, {}});
    return recurse(table, 1);
  }

  bool exhausted() const { return exhausted_; }

 private:
  int& at(std::vector<int>& t, int p, std::size_t col) { return t[static_cast<std::size_t>(p) * cols_ + col]; }

  bool propagate(std::vector<int>& t, std::size_t n) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t p = 0; p < n; ++p) {
        for (const Word& r : rels_) {
          int f = static_cast<int>(p), b = static_cast<int>(p);
          std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(r.size()) - 1;
          while (i <= j && at(t, f, letter_column(r[static_cast<std::size_t>(i)])) >= 0)
            f = at(t, f, letter_column(r[static_cast<std::size_t>(i++)]));
          if (i > j) {
            if (f != b) return false;
            continue;
          }
          while (j >= i && at(t, b, letter_column(r[static_cast<std::size_t>(j)]) ^ 1) >= 0)
            b = at(t, b, letter_column(r[static_cast<std::size_t>(j--)]) ^ 1);
          if (j < i) {
            if (f != b) return false;
            continue;
          }
          if (i == j) {
            std::size_t col = letter_column(r[static_cast<std::size_t>(i)]);
            if (at(t, b, col ^ 1) >= 0 && at(t, b, col ^ 1) != f) return false;
            at(t, f, col) = b;
            at(t, b, col ^ 1) = f;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  bool recurse(std::vector<int>& t, std::size_t n) {
    if (++nodes_ > budget_.max_nodes) {
      exhausted_ = true;
      return true;
    }
    std::size_t pos = n * cols_;
    for (std::size_t k = 0; k < n * cols_; ++k)
      if (t[k] < 0) {
        pos = k;
        break;
      }
    if (pos == n * cols_) {
      PermRep rep;
      rep.degree = n;
      rep.images.assign(cols_ / 2, std::vector<int>(n));
      for (std::size_t g = 0; g < cols_ / 2; ++g)
        for (std::size_t p = 0; p < n; ++p) rep.images[g][p] = t[p * cols_ + 2 * g];
      return visit_(rep);
    }
    const int p = static_cast<int>(pos / cols_);
    const std::size_t col = pos % cols_;
    const std::size_t limit = std::min(n + 1, budget_.max_degree);
    for (std::size_t target = 0; target < limit; ++target) {
      const int q = static_cast<int>(target);
      if (target < n && at(t, q, col ^ 1) >= 0) continue;
      std::vector<int> next = t;
      at(next, p, col) = q;
      at(next, q, col ^ 1) = p;
      std::size_t m = target == n ? n + 1 : n;
      if (propagate(next, m) && recurse(next, m)) return true;
    }
    return false;
  }

  std::size_t cols_;
  LowIndexBudget budget_;
  const std::function<bool(const PermRep&)>& visit_;
  std::vector<Word> rels_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

bool low_index_search(const FpGroup& g, const LowIndexBudget& budget,
                      const std::function<bool(const PermRep&)>& visit) {
  LowIndex s(g, budget, visit);
  s.run();
  return !s.exhausted();
}

std::optional<PermRep> find_nontrivial_quotient(const FpGroup& g, const Word& w, const LowIndexBudget& budget) {
  std::optional<PermRep> found;
  low_index_search(g, budget, [&](const PermRep& rep) {
    if (rep.moves(w)) {
      found = rep;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace sc
