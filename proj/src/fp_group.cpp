#include "sc/fp_group.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>

namespace sc {

using boost::multiprecision::cpp_int;

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j));
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::string FpGroup::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    std::size_t g = static_cast<std::size_t>(std::abs(x) - 1);
    out += g < names.size() ? names[g] : "x" + std::to_string(g);
    if (x < 0) out += "^-1";
  }
  return out;
}

Word canonical_cyclic(const Word& w) {
  Word best;
  for (const Word& base : {w, inverse_word(w)}) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(i), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

void FpGroup::tidy() {
  std::set<Word> seen;
  std::vector<Word> kept;
  for (const Word& r : relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    Word key = canonical_cyclic(c);
    if (seen.insert(key).second) kept.push_back(std::move(key));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  relators = std::move(kept);
}

Word TietzeReduction::apply(const Word& w) const {
  Word out;
  for (int x : w) {
    const Word& img = image[static_cast<std::size_t>(std::abs(x) - 1)];
    if (x > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = inverse_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

TietzeReduction tietze_simplify(const FpGroup& g, std::size_t max_relator_length) {
  TietzeReduction t;
  t.group = g;
  t.group.tidy();
  t.image.resize(g.generators);
  for (std::size_t i = 0; i < g.generators; ++i) t.image[i] = {static_cast<int>(i + 1)};

  // substitute x_gen -> expr (over current numbering) everywhere
  auto substitute = [](const Word& w, int gen, const Word& expr) {
    Word out;
    for (int x : w) {
      if (std::abs(x) != gen) {
        out.push_back(x);
      } else if (x > 0) {
        out.insert(out.end(), expr.begin(), expr.end());
      } else {
        Word inv = inverse_word(expr);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    return free_reduce(out);
  };

  for (;;) {
    auto& rels = t.group.relators;
    int pick_gen = 0;
    std::size_t pick_rel = 0, pick_len = static_cast<std::size_t>(-1);
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      const Word& r = rels[ri];
      if (r.size() > max_relator_length || r.size() >= pick_len) continue;
      std::vector<int> count(t.group.generators + 1, 0);
      for (int x : r) ++count[static_cast<std::size_t>(std::abs(x))];
      for (std::size_t gi = 1; gi <= t.group.generators; ++gi)
        if (count[gi] == 1) {
          pick_gen = static_cast<int>(gi);
          pick_rel = ri;
          pick_len = r.size();
          break;
        }
    }
    if (pick_gen == 0) break;

    // r = u x^e v  =>  x^e = u^-1 v^-1  (cyclically: x^e = (v u)^-1)
    const Word r = rels[pick_rel];
    std::size_t pos = 0;
    while (std::abs(r[pos]) != pick_gen) ++pos;
    Word vu(r.begin() + static_cast<std::ptrdiff_t>(pos + 1), r.end());
    vu.insert(vu.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    Word expr = inverse_word(vu);
    if (r[pos] < 0) expr = inverse_word(expr);
    expr = free_reduce(expr);

    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(pick_rel));
    for (Word& other : rels) other = substitute(other, pick_gen, expr);
    for (Word& img : t.image) img = substitute(img, pick_gen, expr);

    // renumber: generator k (the last) takes the freed slot
    const int last = static_cast<int>(t.group.generators);
    auto renumber = [&](Word& w) {
      for (int& x : w)
        if (std::abs(x) == last) x = x > 0 ? pick_gen : -pick_gen;
    };
    if (pick_gen != last) {
      for (Word& other : rels) renumber(other);
      for (Word& img : t.image) renumber(img);
      if (static_cast<std::size_t>(last) <= t.group.names.size() &&
          static_cast<std::size_t>(pick_gen) <= t.group.names.size())
        t.group.names[static_cast<std::size_t>(pick_gen - 1)] = t.group.names[static_cast<std::size_t>(last - 1)];
    }
    if (t.group.names.size() >= static_cast<std::size_t>(last)) t.group.names.pop_back();
    --t.group.generators;
    ++t.eliminated;
    t.group.tidy();
  }
  return t;
}

AbelianQuotient::AbelianQuotient(const FpGroup& g) : k_(g.generators) {
  std::vector<std::vector<cpp_int>> m;
  for (const Word& r : g.relators) {
    std::vector<cpp_int> v(k_, 0);
    for (int x : r) v[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    if (std::any_of(v.begin(), v.end(), [](const cpp_int& c) { return c != 0; })) m.push_back(std::move(v));
  }
  // integer row echelon form by repeated Euclid steps on each column
  std::size_t top = 0;
  for (std::size_t col = 0; col < k_ && top < m.size(); ++col) {
    for (;;) {
      std::size_t piv = m.size();
      for (std::size_t i = top; i < m.size(); ++i)
        if (m[i][col] != 0 && (piv == m.size() || abs(m[i][col]) < abs(m[piv][col]))) piv = i;
      if (piv == m.size()) break;
      std::swap(m[top], m[piv]);
      bool clean = true;
      for (std::size_t i = top + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        cpp_int q = m[i][col] / m[top][col];
        for (std::size_t j = col; j < k_; ++j) m[i][j] -= q * m[top][j];
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[top][col] == 0) continue;
    if (m[top][col] < 0)
      for (auto& e : m[top]) e = -e;
    pivots_.push_back(col);
    ++top;
  }
  m.resize(top);
  for (auto& row : m) {
    std::vector<long long> out;
    for (auto& e : row) {
      if (abs(e) > cpp_int(1LL << 40)) overflow_ = true;
      out.push_back(overflow_ ? 0 : static_cast<long long>(e));
    }
    rows_.push_back(std::move(out));
  }
}

bool AbelianQuotient::kills(const Word& w) const {
  std::vector<cpp_int> v(k_, 0);
  for (int x : w) v[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  // with overflowing coefficients we cannot certify anything, so report
  // "killed" which only ever makes callers less confident
  if (overflow_) return true;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t c = pivots_[i];
    cpp_int p = rows_[i][c];
    if (v[c] % p != 0) return false;
    cpp_int q = v[c] / p;
    for (std::size_t j = c; j < k_; ++j) v[j] -= q * rows_[i][j];
  }
  return std::all_of(v.begin(), v.end(), [](const cpp_int& c) { return c == 0; });
}

std::vector<long long> AbelianQuotient::invariants() const {
  // Smith normal form of the echelon rows; unit factors are dropped
  std::vector<std::vector<cpp_int>> m;
  for (const auto& row : rows_) m.emplace_back(row.begin(), row.end());
  const std::size_t rows = m.size();
  std::vector<cpp_int> diag;
  for (std::size_t t = 0; t < rows; ++t) {
    for (;;) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::size_t pi = rows, pj = k_;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < k_; ++j)
          if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) pi = i, pj = j;
      if (pi == rows) break;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        cpp_int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < k_; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k_; ++j) {
        cpp_int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any block entry not divisible by the pivot into row t
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < k_; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < k_; ++c) m[t][c] += m[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  std::vector<long long> out;
  for (const auto& d : diag)
    if (d > 1) out.push_back(static_cast<long long>(d));
  for (std::size_t i = rows; i < k_; ++i) out.push_back(0);
  return out;
}

}  // namespace sc
