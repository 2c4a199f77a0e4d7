#include "sc/cayley.hpp"

#include <functional>
#include <map>

namespace sc {

namespace {

struct Letter {
  std::string name;
  bool involution = false;
};

// Breadth-first ball growth shared by the three group sources. `step`
// multiplies by a letter (or its inverse); `find` looks a key up among the
// known vertices whose distance is within one of `near`.
template <class Key>
CayleyBall grow(std::size_t radius, const std::vector<Letter>& letters, Key identity,
                const std::function<Key(const Key&, std::size_t, bool)>& step,
                const std::function<int(const Key&, const std::vector<Key>&, const std::vector<std::size_t>&,
                                        std::size_t)>& find,
                const std::function<void(const Key&, int)>& remember,
                const std::function<std::string(const Key&)>& describe) {
  std::vector<Key> keys{identity};
  std::vector<std::size_t> dist{0};
  remember(identity, 0);
  std::map<std::pair<int, int>, int> edge_letter;
  std::size_t layer_begin = 0;
  bool truncated = false;  // some neighbour fell outside the ball
  for (std::size_t d = 0; d <= radius; ++d) {
    const std::size_t layer_end = keys.size();
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      for (std::size_t i = 0; i < letters.size(); ++i) {
        for (int sign : {1, -1}) {
          if (sign < 0 && letters[i].involution) continue;
          Key w = step(keys[v], i, sign < 0);
          int u = find(w, keys, dist, d);
          if (u < 0) {
            if (d == radius) {
              truncated = true;
              continue;
            }
            u = static_cast<int>(keys.size());
            keys.push_back(w);
            dist.push_back(d + 1);
            remember(w, u);
          }
          int code = static_cast<int>(i + 1) * sign;
          edge_letter[{static_cast<int>(v), u}] = code;
          edge_letter[{u, static_cast<int>(v)}] = letters[i].involution ? code : -code;
        }
      }
    }
    layer_begin = layer_end;
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [e, code] : edge_letter)
    if (e.first < e.second) edges.push_back(e);
  CayleyBall ball;
  ball.graph = SimplicialGraph::from_edges(keys.size(), edges);
  ball.graph.label.resize(keys.size());
  for (std::size_t u = 0; u < keys.size(); ++u)
    for (int v : ball.graph.adj[u]) ball.graph.label[u].push_back(edge_letter.at({static_cast<int>(u), v}));
  for (const auto& l : letters) {
    ball.graph.letter_names.push_back(l.name);
    ball.graph.involution.push_back(l.involution);
  }
  ball.graph.transitive = true;
  ball.graph.basepoint = 0;
  // A ball with no outside neighbours is the whole finite Cayley graph.
  if (truncated) ball.graph.ball_radius = radius;
  ball.radius = radius;
  ball.distance = dist;
  for (const auto& k : keys) ball.vertex_words.push_back(describe(k));
  return ball;
}

// Pairs each generator with its inverse; the first of each pair names the letter.
template <class Elem, class Inv, class Name>
std::vector<std::pair<Letter, Elem>> collapse(const std::vector<Elem>& gens, Inv inverse, Name name) {
  std::vector<std::pair<Letter, Elem>> out;
  std::vector<Elem> used;
  for (const Elem& s : gens) {
    if (std::find(used.begin(), used.end(), s) != used.end()) continue;
    Elem si = inverse(s);
    used.push_back(s);
    used.push_back(si);
    out.push_back({Letter{name(s), si == s}, s});
  }
  return out;
}

}  // namespace

CayleyBall cayley_ball(const Factor& f, std::size_t radius) {
  auto pairs = collapse(f.generating_set(), [&](const Element& e) { return f.inverse(e); },
                        [&](const Element& e) { return f.label() + "." + f.format(e); });
  std::vector<Letter> letters;
  std::vector<Element> gens;
  for (auto& [l, e] : pairs) {
    letters.push_back(l);
    gens.push_back(e);
  }
  std::map<Element, int> index;
  CayleyBall ball = grow<Element>(
      radius, letters, Element{},
      [&](const Element& x, std::size_t i, bool inv) { return f.multiply(x, inv ? f.inverse(gens[i]) : gens[i]); },
      [&](const Element& x, const auto&, const auto&, std::size_t) {
        auto it = index.find(x);
        return it == index.end() ? -1 : it->second;
      },
      [&](const Element& x, int v) { index[x] = v; },
      [&](const Element& x) { return x.empty() ? std::string("1") : f.label() + "." + f.format(x); });
  ball.source = "factor " + f.label();
  return ball;
}

namespace {

std::vector<std::pair<Letter, NormalForm>> product_letters(const FreeProduct& fp) {
  std::vector<std::pair<Letter, NormalForm>> out;
  for (int k = 0; k < 2; ++k) {
    const Factor& f = fp.factor(k);
    auto pairs = collapse(f.generating_set(), [&](const Element& e) { return f.inverse(e); },
                          [&](const Element& e) { return fp.format(Syllable{k, e}); });
    for (auto& [l, e] : pairs) out.push_back({l, fp.syllable(k, e)});
  }
  return out;
}

}  // namespace

CayleyBall cayley_ball(const FreeProduct& fp, std::size_t radius) {
  auto pairs = product_letters(fp);
  std::vector<Letter> letters;
  std::vector<NormalForm> gens;
  for (auto& [l, g] : pairs) {
    letters.push_back(l);
    gens.push_back(g);
  }
  std::map<NormalForm, int> index;
  CayleyBall ball = grow<NormalForm>(
      radius, letters, NormalForm{},
      [&](const NormalForm& x, std::size_t i, bool inv) {
        return fp.multiply(x, inv ? fp.inverse(gens[i]) : gens[i]);
      },
      [&](const NormalForm& x, const auto&, const auto&, std::size_t) {
        auto it = index.find(x);
        return it == index.end() ? -1 : it->second;
      },
      [&](const NormalForm& x, int v) { index[x] = v; }, [&](const NormalForm& x) { return fp.format(x); });
  ball.source = "free product " + fp.factor(0).label() + "*" + fp.factor(1).label();
  return ball;
}

CayleyBall cayley_ball(const DehnSolver& q, std::size_t radius) {
  const FreeProduct& fp = q.group();
  auto pairs = product_letters(fp);
  std::vector<Letter> letters;
  std::vector<NormalForm> gens;
  for (auto& [l, g] : pairs) {
    letters.push_back(l);
    gens.push_back(g);
  }
  // fast path: equal linear Dehn reductions mean equal elements
  std::map<NormalForm, int> index;
  CayleyBall ball = grow<NormalForm>(
      radius, letters, NormalForm{},
      [&](const NormalForm& x, std::size_t i, bool inv) {
        return q.linear_reduce(fp.multiply(x, inv ? fp.inverse(gens[i]) : gens[i])).final;
      },
      [&](const NormalForm& x, const std::vector<NormalForm>& keys, const std::vector<std::size_t>& dist,
          std::size_t near) {
        if (auto it = index.find(x); it != index.end()) return it->second;
        for (std::size_t v = 0; v < keys.size(); ++v) {
          if (dist[v] + 1 < near || dist[v] > near + 1) continue;
          if (q.is_trivial(fp.multiply(x, fp.inverse(keys[v])))) {
            index[x] = static_cast<int>(v);
            return static_cast<int>(v);
          }
        }
        return -1;
      },
      [&](const NormalForm& x, int v) { index[x] = v; }, [&](const NormalForm& x) { return fp.format(x); });
  ball.source = "quotient of " + fp.factor(0).label() + "*" + fp.factor(1).label() + " by " +
                std::to_string(q.relators().orbit_count()) + " relator classes";
  return ball;
}

}  // namespace sc
