#include "sc/factor.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sc {

namespace {

// Parses `name` or `name^k` into (name, k).
std::pair<std::string, long long> split_power(const std::string& tok) {
  auto caret = tok.find('^');
  if (caret == std::string::npos) return {tok, 1};
  std::string base = tok.substr(0, caret);
  std::string exp = tok.substr(caret + 1);
  try {
    std::size_t used = 0;
    long long k = std::stoll(exp, &used);
    if (used != exp.size()) throw ParseError("bad exponent in '" + tok + "'");
    return {base, k};
  } catch (const std::logic_error&) {
    throw ParseError("bad exponent in '" + tok + "'");
  }
}

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = e.size();
    for (auto v : e) h = h * 1000003u + static_cast<std::size_t>(v + 7919);
    return h;
  }
};

}  // namespace

Factor Factor::finite(std::string label, std::vector<std::string> names,
                      const std::vector<std::vector<int>>& table,
                      const std::vector<std::string>& generators) {
  const std::size_t n = names.size();
  if (n == 0) throw SpecError("factor " + label + ": empty element list");
  if (table.size() != n)
    throw SpecError("factor " + label + ": table has " +
                    std::to_string(table.size()) + " rows, expected " +
                    std::to_string(n));
  for (const auto& row : table) {
    if (row.size() != n)
      throw SpecError("factor " + label + ": table row of wrong width");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw SpecError("factor " + label + ": table entry out of range");
  }
  int e = -1;
  for (std::size_t i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = table[i][j] == static_cast<int>(j) && table[j][i] == static_cast<int>(j);
    if (ok) e = static_cast<int>(i);
  }
  if (e < 0) throw SpecError("factor " + label + ": table has no identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw SpecError("factor " + label + ": table is not associative");

  // Relabel so the identity is index 0.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[e]);  // perm[new] = old
  std::vector<int> inv_perm(n);
  for (std::size_t i = 0; i < n; ++i) inv_perm[perm[i]] = static_cast<int>(i);

  Factor f;
  f.label_ = std::move(label);
  f.kind_ = FactorKind::finite;
  f.names_.resize(n);
  f.table_.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    f.names_[i] = names[perm[i]];
    for (std::size_t j = 0; j < n; ++j)
      f.table_[i][j] = inv_perm[table[perm[i]][perm[j]]];
  }
  f.inverse_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (f.table_[i][j] == 0) f.inverse_[i] = static_cast<int>(j);
  for (std::size_t i = 0; i < n; ++i)
    if (f.inverse_[i] < 0)
      throw SpecError("factor " + f.label_ + ": element " + f.names_[i] +
                      " has no inverse");
  for (std::size_t i = 1; i < n; ++i) {
    if (!f.by_name_.emplace(f.names_[i], Element{static_cast<int>(i)}).second)
      throw SpecError("factor " + f.label_ + ": duplicate element name " +
                      f.names_[i]);
  }
  f.by_name_.emplace(f.names_[0], Element{});

  std::vector<Element> gens;
  for (const auto& g : generators) gens.push_back(f.letter(g));
  f.finish_generators(std::move(gens));
  return f;
}

Factor Factor::cyclic(std::string label, std::string name, int order,
                      std::vector<int> generator_powers) {
  if (order < 2) throw SpecError("factor " + label + ": cyclic order must be >= 2");
  std::vector<std::string> names(order);
  names[0] = "1";
  for (int k = 1; k < order; ++k)
    names[k] = k == 1 ? name : name + "^" + std::to_string(k);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) table[i][j] = (i + j) % order;

  Factor f = finite(std::move(label), names, table, {});
  f.cyclic_name_ = name;
  f.by_name_.clear();
  f.by_name_.emplace(name, Element{1});
  std::vector<Element> gens;
  for (int p : generator_powers) {
    int k = ((p % order) + order) % order;
    if (k == 0) throw SpecError("factor " + f.label_ + ": generator power is the identity");
    gens.push_back(Element{k});
  }
  f.finish_generators(std::move(gens));
  return f;
}

Factor Factor::free(std::string label, std::vector<std::string> basis,
                    const std::vector<std::string>& extra_generators) {
  if (basis.empty()) throw SpecError("factor " + label + ": free factor needs a basis");
  Factor f;
  f.label_ = std::move(label);
  f.kind_ = FactorKind::free;
  f.basis_ = std::move(basis);
  for (std::size_t i = 0; i < f.basis_.size(); ++i)
    if (!f.by_name_.emplace(f.basis_[i], Element{static_cast<int>(i + 1)}).second)
      throw SpecError("factor " + f.label_ + ": duplicate basis letter " + f.basis_[i]);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < f.basis_.size(); ++i)
    gens.push_back(Element{static_cast<int>(i + 1)});
  for (const auto& word : extra_generators) {
    std::istringstream in(word);
    std::string tok;
    Element x;
    while (in >> tok) {
      auto [nm, k] = split_power(tok);
      x = f.multiply(x, f.power(f.letter(nm), k));
    }
    if (x.empty()) throw SpecError("factor " + f.label_ + ": extra generator is trivial");
    gens.push_back(std::move(x));
  }
  f.finish_generators(std::move(gens));
  return f;
}

void Factor::finish_generators(std::vector<Element> gens) {
  std::vector<Element> out;
  std::set<Element> seen;
  for (auto& g : gens) {
    if (g.empty()) throw SpecError("factor " + label_ + ": identity in generating set");
    for (const Element& h : {g, inverse(g)})
      if (seen.insert(h).second) out.push_back(h);
  }
  generators_ = std::move(out);
  if (is_finite()) {
    compute_finite_lengths();
  } else {
    basis_only_ = true;
    for (const auto& g : generators_)
      if (g.size() != 1) basis_only_ = false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!seen.count(Element{static_cast<int>(i + 1)}))
        throw SpecError("factor " + label_ + ": generating set must contain the basis");
  }
}

void Factor::compute_finite_lengths() {
  const std::size_t n = names_.size();
  lengths_.assign(n, ~0u);
  lengths_[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      int w = table_[v][g[0]];
      if (lengths_[w] == ~0u) {
        lengths_[w] = lengths_[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (std::find(lengths_.begin(), lengths_.end(), ~0u) != lengths_.end() &&
      !generators_.empty())
    throw SpecError("factor " + label_ + ": generating set does not generate the group");
}

Factor Factor::with_generators(const std::vector<Element>& extra) const {
  Factor f = *this;
  std::vector<Element> gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  f.finish_generators(std::move(gens));
  return f;
}

Element Factor::multiply(const Element& x, const Element& y) const {
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (is_finite()) {
    int r = table_[x[0]][y[0]];
    return r == 0 ? Element{} : Element{r};
  }
  Element r = x;
  std::size_t i = 0;
  while (i < y.size() && !r.empty() && r.back() == -y[i]) {
    r.pop_back();
    ++i;
  }
  r.insert(r.end(), y.begin() + static_cast<std::ptrdiff_t>(i), y.end());
  return r;
}

Element Factor::inverse(const Element& x) const {
  if (x.empty()) return x;
  if (is_finite()) return Element{inverse_[x[0]]};
  Element r(x.rbegin(), x.rend());
  for (auto& v : r) v = -v;
  return r;
}

Element Factor::power(const Element& x, long long k) const {
  Element base = k < 0 ? inverse(x) : x;
  unsigned long long m = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Element acc;
  while (m) {
    if (m & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    m >>= 1;
  }
  return acc;
}

std::optional<std::uint64_t> Factor::element_order(const Element& x) const {
  if (x.empty()) return 1;
  if (!is_finite()) return std::nullopt;
  std::uint64_t k = 1;
  Element p = x;
  while (!p.empty()) {
    p = multiply(p, x);
    ++k;
  }
  return k;
}

unsigned Factor::geodesic_length(const Element& x) const {
  if (x.empty()) return 0;
  if (is_finite()) return lengths_[x[0]];
  return free_geodesic_length(x);
}

// Bidirectional search in the Cayley graph of the free factor. The basis is
// always in the generating set, so the reduced length bounds the answer.
unsigned Factor::free_geodesic_length(const Element& x) const {
  if (basis_only_) return static_cast<unsigned>(x.size());
  const unsigned bound = static_cast<unsigned>(x.size());
  std::unordered_map<Element, unsigned, ElementHash> from_start{{Element{}, 0}};
  std::unordered_map<Element, unsigned, ElementHash> from_goal{{x, 0}};
  std::vector<Element> front_s{Element{}}, front_g{x};
  unsigned ds = 0, dg = 0;
  constexpr std::size_t kCap = 400000;
  while (ds + dg < bound) {
    bool grow_start = front_s.size() <= front_g.size();
    auto& front = grow_start ? front_s : front_g;
    auto& mine = grow_start ? from_start : from_goal;
    auto& other = grow_start ? from_goal : from_start;
    unsigned& depth = grow_start ? ds : dg;
    std::vector<Element> next;
    for (const auto& v : front) {
      for (const auto& g : generators_) {
        Element w = grow_start ? multiply(v, g) : multiply(v, inverse(g));
        if (mine.count(w)) continue;
        auto hit = other.find(w);
        if (hit != other.end()) return depth + 1 + hit->second;
        mine.emplace(w, depth + 1);
        next.push_back(std::move(w));
      }
    }
    ++depth;
    front = std::move(next);
    if (from_start.size() + from_goal.size() > kCap)
      throw SpecError("factor " + label_ + ": geodesic search exceeded its budget");
  }
  return bound;
}

std::vector<Element> Factor::elements() const {
  std::vector<Element> out;
  if (!is_finite()) return out;
  out.push_back(Element{});
  for (std::size_t i = 1; i < names_.size(); ++i) out.push_back(Element{static_cast<int>(i)});
  return out;
}

Element Factor::letter(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw ParseError("unknown generator '" + label_ + "." + name + "'");
  return it->second;
}

std::vector<std::pair<std::string, long long>> Factor::runs(const Element& x) const {
  std::vector<std::pair<std::string, long long>> out;
  for (auto v : x) {
    const std::string& nm = basis_[std::abs(v) - 1];
    long long step = v > 0 ? 1 : -1;
    if (!out.empty() && out.back().first == nm && (out.back().second > 0) == (step > 0))
      out.back().second += step;
    else
      out.emplace_back(nm, step);
  }
  return out;
}

std::string Factor::format(const Element& x) const {
  if (x.empty()) return "1";
  if (is_finite()) return names_[x[0]];
  std::string s;
  for (const auto& [nm, k] : runs(x)) {
    if (!s.empty()) s += ' ';
    s += nm;
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

bool Factor::operator==(const Factor& other) const {
  return label_ == other.label_ && kind_ == other.kind_ && names_ == other.names_ &&
         table_ == other.table_ && basis_ == other.basis_ &&
         generators_ == other.generators_;
}

}  // namespace sc
