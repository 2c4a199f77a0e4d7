#include "sc/todd_coxeter.hpp"

namespace sc {

int CosetTable::act(int c, const Word& w) const {
  for (int x : w) c = at(static_cast<std::size_t>(c), letter_column(x));
  return c;
}

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t gens, std::size_t cap) : cols_(2 * gens), cap_(cap) { add_coset(); }

  bool overflowed() const { return overflow_; }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::size_t size() const { return parent_.size(); }

  int& cell(int c, std::size_t col) { return table_[static_cast<std::size_t>(c) * cols_ + col]; }

  void define(int c, std::size_t col) {
    if (live_ >= cap_) {
      overflow_ = true;
      return;
    }
    int d = add_coset();
    cell(c, col) = d;
    cell(d, col ^ 1) = c;
  }

  void scan_and_fill(int c, const Word& w) {
    if (w.empty()) return;
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && cell(f, letter_column(w[static_cast<std::size_t>(i)])) >= 0)
        f = cell(f, letter_column(w[static_cast<std::size_t>(i++)]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && cell(b, letter_column(w[static_cast<std::size_t>(j)]) ^ 1) >= 0)
        b = cell(b, letter_column(w[static_cast<std::size_t>(j--)]) ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        std::size_t col = letter_column(w[static_cast<std::size_t>(i)]);
        cell(f, col) = b;
        cell(b, col ^ 1) = f;
        return;
      }
      define(f, letter_column(w[static_cast<std::size_t>(i)]));
      if (overflow_) return;
    }
  }

  void complete_row(int c) {
    for (std::size_t col = 0; col < cols_ && alive(c) && !overflow_; ++col)
      if (cell(c, col) < 0) define(c, col);
  }

  CosetTable compress() {
    std::vector<int> index(parent_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (alive(static_cast<int>(c))) index[c] = n++;
    CosetTable t;
    t.cosets = static_cast<std::size_t>(n);
    t.columns = cols_;
    t.entries.assign(t.cosets * cols_, -1);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (index[c] < 0) continue;
      for (std::size_t col = 0; col < cols_; ++col)
        t.entries[static_cast<std::size_t>(index[c]) * cols_ + col] =
            index[static_cast<std::size_t>(rep(cell(static_cast<int>(c), col)))];
    }
    return t;
  }

 private:
  int add_coset() {
    int d = static_cast<int>(parent_.size());
    parent_.push_back(d);
    table_.resize(table_.size() + cols_, -1);
    ++live_;
    return d;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int e = queue[q];
      for (std::size_t col = 0; col < cols_; ++col) {
        int f = cell(e, col);
        if (f < 0) continue;
        if (cell(f, col ^ 1) == e) cell(f, col ^ 1) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (cell(e1, col) >= 0)
          merge(f1, cell(e1, col), queue);
        else if (cell(f1, col ^ 1) >= 0)
          merge(e1, cell(f1, col ^ 1), queue);
        else {
          cell(e1, col) = f1;
          cell(f1, col ^ 1) = e1;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t cap_;
  std::size_t live_ = 0;
  bool overflow_ = false;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

std::optional<CosetTable> todd_coxeter(const FpGroup& g, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  if (g.generators == 0) {
    CosetTable t;
    t.cosets = 1;
    return t;
  }
  Enumerator e(g.generators, max_cosets);
  for (const Word& h : subgroup) e.scan_and_fill(0, free_reduce(h));
  std::vector<Word> rels;
  for (const Word& r : g.relators) rels.push_back(cyclic_reduce(r));
  for (std::size_t c = 0; c < e.size(); ++c) {
    const int ci = static_cast<int>(c);
    if (!e.alive(ci)) continue;
    for (const Word& r : rels) {
      e.scan_and_fill(ci, r);
      if (e.overflowed()) return std::nullopt;
      if (!e.alive(ci)) break;
    }
    if (e.alive(ci)) e.complete_row(ci);
    if (e.overflowed()) return std::nullopt;
  }
  return e.compress();
}

}  // namespace sc
