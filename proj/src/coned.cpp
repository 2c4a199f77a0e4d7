#include "sc/coned.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sc {

QuotientComplex quotient_complex(const SymmetrizedSet& R) {
  QuotientComplex q;
  std::vector<bool> seen(R.orbit_count(), false);
  for (std::size_t i = 0; i < R.size(); ++i) {
    std::size_t o = R.orbit()[i];
    if (seen[o]) continue;
    seen[o] = true;
    q.cell_boundaries.push_back(R.members()[i].size());
  }
  return q;
}

namespace {

class ConedBuilder {
 public:
  ConedBuilder(const DehnSolver& q, std::size_t radius) : q_(q), fp_(q.group()) {
    X_.radius = radius;
    for (int f = 0; f < 2; ++f) {
      if (!fp_.factor(f).is_finite())
        throw SpecError("coned balls need finite factors; " + fp_.factor(f).label() + " is free");
      elements_[f] = fp_.factor(f).elements();
    }
    add_vertex(0, {}, 0);
    add_vertex(1, {}, 0);
    add_edge(0, {}, 1, {});
  }

  ConedComplex build() {
    for (std::size_t d = 0; d <= X_.radius; ++d) {
      const bool grow = d < X_.radius;
      for (std::size_t v = 0; v < X_.vertices.size(); ++v) {
        if (X_.vertices[v].depth != d) continue;
        const int f = X_.vertices[v].factor;
        for (const Element& x : elements_[f]) {
          if (X_.vertices[v].incident.count(x)) continue;
          NormalForm h = fp_.multiply(X_.vertices[v].representative, fp_.syllable(f, x));
          auto [w, y] = locate(1 - f, h, d);
          if (w < 0) {
            if (!grow) continue;
            std::tie(w, y) = add_vertex(1 - f, h, d + 1);
          }
          if (f == 0)
            add_edge(v, x, static_cast<std::size_t>(w), y);
          else
            add_edge(static_cast<std::size_t>(w), y, v, x);
        }
      }
    }
    return std::move(X_);
  }

 private:
  // Finds the vertex of type f holding coset hF, with the offset y such that
  // h = rep * y. Only vertices within one BFS layer of `near` can qualify.
  std::pair<int, Element> locate(int f, const NormalForm& h, std::size_t near) {
    NormalForm red = q_.linear_reduce(h).final;
    Element tail;
    if (!red.empty() && red.syllables.back().factor == f) {
      tail = red.syllables.back().element;
      red.syllables.pop_back();
    }
    if (auto it = index_[f].find(red); it != index_[f].end()) return {static_cast<int>(it->second), tail};
    for (std::size_t w = 0; w < X_.vertices.size(); ++w) {
      const ConedVertex& V = X_.vertices[w];
      if (V.factor != f || V.depth + 1 < near || V.depth > near + 1) continue;
      NormalForm probe = fp_.multiply(fp_.inverse(V.representative), h);
      Membership m = q_.factor_membership(probe, f);
      if (m.kind == MembershipKind::unknown)
        throw UndecidedCoset("cannot decide whether " + fp_.format(h) + " lies in coset of " +
                             fp_.format(V.representative) + ": " + m.reason);
      if (m.kind == MembershipKind::in) return {static_cast<int>(w), m.element};
    }
    return {-1, {}};
  }

  // The representative is the reduced word with any trailing syllable of
  // the vertex's own factor stripped; that syllable is the offset of h.
  std::pair<int, Element> add_vertex(int f, const NormalForm& h, std::size_t depth) {
    NormalForm key = q_.linear_reduce(h).final;
    Element tail;
    if (!key.empty() && key.syllables.back().factor == f) {
      tail = key.syllables.back().element;
      key.syllables.pop_back();
    }
    X_.vertices.push_back({f, key, depth, {}});
    index_[f].emplace(key, X_.vertices.size() - 1);
    return {static_cast<int>(X_.vertices.size() - 1), tail};
  }

  void add_edge(std::size_t a, const Element& xa, std::size_t b, const Element& xb) {
    ConedEdge e;
    e.end[0] = a;
    e.end[1] = b;
    e.offset[0] = xa;
    e.offset[1] = xb;
    X_.edges.push_back(e);
    X_.vertices[a].incident[xa] = X_.edges.size() - 1;
    X_.vertices[b].incident[xb] = X_.edges.size() - 1;
  }

  const DehnSolver& q_;
  const FreeProduct& fp_;
  ConedComplex X_;
  std::vector<Element> elements_[2];
  std::map<NormalForm, std::size_t> index_[2];
};

// Follows member r from edge e; returns false when the path leaves the ball
// or fails to close up.
bool trace_one(const ConedComplex& X, const FreeProduct& fp, std::size_t e, const NormalForm& r, ConedCell& out) {
  out.edges.clear();
  out.vertices.clear();
  std::size_t cur = e;
  for (const Syllable& s : r.syllables) {
    const ConedEdge& E = X.edges[cur];
    const int f = s.factor;
    const ConedVertex& V = X.vertices[E.end[f]];
    Element next = fp.factor(f).multiply(E.offset[f], s.element);
    auto it = V.incident.find(next);
    if (it == V.incident.end()) return false;
    out.edges.push_back(cur);
    out.vertices.push_back(E.end[f]);
    cur = it->second;
  }
  return cur == e;
}

std::vector<std::size_t> canonical_cycle(const std::vector<std::size_t>& c) {
  std::vector<std::size_t> best;
  const std::vector<std::size_t> rev(c.rbegin(), c.rend());
  for (const auto* base : {&c, &rev})
    for (std::size_t i = 0; i < base->size(); ++i) {
      std::vector<std::size_t> rot(base->begin() + static_cast<std::ptrdiff_t>(i), base->end());
      rot.insert(rot.end(), base->begin(), base->begin() + static_cast<std::ptrdiff_t>(i));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  return best;
}

std::vector<ConedCell> merge_cells(std::vector<std::vector<ConedCell>>& per_edge) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<ConedCell> out;
  for (auto& list : per_edge)
    for (auto& c : list)
      if (seen.insert(canonical_cycle(c.edges)).second) out.push_back(std::move(c));
  return out;
}

std::vector<ConedCell> cells_from_edge(const ConedComplex& X, const SymmetrizedSet& R, const FreeProduct& fp,
                                       std::size_t e) {
  std::vector<ConedCell> out;
  for (std::size_t i = 0; i < R.size(); ++i) {
    ConedCell c;
    c.member = i;
    if (trace_one(X, fp, e, R.members()[i], c)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<ConedCell> trace_cells_serial(const ConedComplex& X, const SymmetrizedSet& R, const FreeProduct& fp) {
  std::vector<std::vector<ConedCell>> per_edge(X.edges.size());
  for (std::size_t e = 0; e < X.edges.size(); ++e) per_edge[e] = cells_from_edge(X, R, fp, e);
  return merge_cells(per_edge);
}

std::vector<ConedCell> trace_cells(const ConedComplex& X, const SymmetrizedSet& R, const FreeProduct& fp) {
  std::vector<std::vector<ConedCell>> per_edge(X.edges.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(X.edges.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t e = 0; e < n; ++e)
    per_edge[static_cast<std::size_t>(e)] = cells_from_edge(X, R, fp, static_cast<std::size_t>(e));
  return merge_cells(per_edge);
}

ConedComplex coned_ball(const DehnSolver& q, std::size_t radius) {
  ConedComplex X = ConedBuilder(q, radius).build();
  X.cells = trace_cells(X, q.relators(), q.group());
  return X;
}

GeometricPieceReport geometric_piece_ratio(const ConedComplex& X) {
  if (X.cells.size() < 2)
    throw SpecError("geometric piece ratio needs at least two cells; the ball holds " +
                    std::to_string(X.cells.size()));
  GeometricPieceReport best;
  for (std::size_t i = 0; i < X.cells.size(); ++i) {
    const auto& a = X.cells[i].edges;
    for (std::size_t j = 0; j < X.cells.size(); ++j) {
      if (i == j) continue;
      const auto& b0 = X.cells[j].edges;
      const std::vector<std::size_t> b1(b0.rbegin(), b0.rend());
      std::size_t longest = 0;
      for (const auto* b : {&b0, &b1})
        for (std::size_t p = 0; p < a.size(); ++p)
          for (std::size_t s = 0; s < b->size(); ++s) {
            std::size_t k = 0;
            const std::size_t cap = std::min(a.size(), b->size());
            while (k < cap && a[(p + k) % a.size()] == (*b)[(s + k) % b->size()]) ++k;
            longest = std::max(longest, k);
          }
      Rational r(static_cast<std::int64_t>(longest), static_cast<std::int64_t>(a.size()));
      if (r > best.ratio) best = {r, longest, a.size(), i, j};
    }
  }
  return best;
}

nlohmann::ordered_json to_json(const ConedComplex& X, const FreeProduct& fp) {
  nlohmann::ordered_json j;
  j["radius"] = X.radius;
  auto& vs = j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < X.vertices.size(); ++v) {
    const auto& V = X.vertices[v];
    vs.push_back({{"id", v},
                  {"coset", fp.format(V.representative) + " " + fp.factor(V.factor).label()},
                  {"depth", V.depth}});
  }
  auto& es = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : X.edges) es.push_back({e.end[0], e.end[1]});
  auto& cs = j["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : X.cells) cs.push_back({{"member", c.member}, {"edges", c.edges}});
  return j;
}

}  // namespace sc
