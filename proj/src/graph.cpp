#include "sc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "sc/factor.hpp"
#include "sc/kvfile.hpp"

namespace sc {

std::size_t SimplicialGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& a : adj) n += a.size();
  return n / 2;
}

bool SimplicialGraph::has_edge(int u, int v) const {
  const auto& a = adj[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

int SimplicialGraph::letter(int u, int v) const {
  if (label.empty()) return 0;
  const auto& a = adj[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return 0;
  return label[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - a.begin())];
}

SimplicialGraph SimplicialGraph::from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  SimplicialGraph g;
  g.adj.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw SpecError("edge " + std::to_string(u) + "-" + std::to_string(v) + " names a missing vertex");
    if (u == v) throw SpecError("loop at vertex " + std::to_string(u) + " breaks simplicity");
    g.adj[static_cast<std::size_t>(u)].push_back(v);
    g.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw SpecError("repeated edge breaks simplicity");
  }
  if (n > 0) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached != n) throw SpecError("graph is not connected");
  }
  return g;
}

std::vector<std::pair<int, int>> SimplicialGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (int v : adj[u])
      if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
  return out;
}

SimplicialGraph cycle_graph(std::size_t n) {
  if (n < 3) throw SpecError("a simple cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
  SimplicialGraph g = SimplicialGraph::from_edges(n, e);
  g.transitive = true;
  return g;
}

SimplicialGraph path_graph(std::size_t n) {
  if (n == 0) throw SpecError("a path needs at least one vertex");
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return SimplicialGraph::from_edges(n, e);
}

SimplicialGraph binary_tree(std::size_t depth) {
  std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(static_cast<int>((i - 1) / 2), static_cast<int>(i));
  return SimplicialGraph::from_edges(n, e);
}

SimplicialGraph generate_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw SpecError("graph generator '" + spec + "' lacks ':N'");
  std::string kind = spec.substr(0, colon);
  std::size_t n = 0;
  try {
    n = std::stoul(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw SpecError("graph generator '" + spec + "' has a bad size");
  }
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "path") return path_graph(n);
  if (kind == "tree") return binary_tree(n);
  if (kind == "complete") {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    SimplicialGraph g = SimplicialGraph::from_edges(n, e);
    g.transitive = true;
    return g;
  }
  throw SpecError("unknown graph generator '" + kind + "'");
}

SimplicialGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0, lineno = 0;
  bool transitive = false;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "vertices" && words.size() == 2) {
      n = std::stoul(words[1]);
      continue;
    }
    if (words[0] == "transitive" && words.size() == 1) {
      transitive = true;
      continue;
    }
    if (words.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    try {
      int u = std::stoi(words[0]), v = std::stoi(words[1]);
      edges.emplace_back(u, v);
      n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": vertices must be integers");
    }
  }
  SimplicialGraph g = SimplicialGraph::from_edges(n, edges);
  g.transitive = transitive;
  return g;
}

SimplicialGraph load_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SpecError("cannot open graph file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_edge_list(ss.str());
}

std::string format_edge_list(const SimplicialGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  if (g.transitive) out << "transitive\n";
  for (auto [u, v] : g.edges()) out << u << ' ' << v << "\n";
  return out.str();
}

namespace {

struct CycleSearch {
  const SimplicialGraph& g;
  std::size_t max_length;
  int start;
  bool least_start;  // only visit vertices above start
  std::vector<char> on_path;
  std::vector<int> path;
  std::vector<std::vector<int>>& out;

  void dfs(int u) {
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      if (v == start) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (on_path[static_cast<std::size_t>(v)] || (least_start && v < start)) continue;
      if (path.size() >= max_length) continue;
      on_path[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      dfs(v);
      path.pop_back();
      on_path[static_cast<std::size_t>(v)] = 0;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> simple_cycles(const SimplicialGraph& g, std::size_t max_length,
                                            std::optional<int> through) {
  std::vector<std::vector<int>> out;
  auto run = [&](int s, bool least) {
    CycleSearch cs{g, max_length, s, least, std::vector<char>(g.vertex_count(), 0), {s}, out};
    cs.on_path[static_cast<std::size_t>(s)] = 1;
    cs.dfs(s);
  };
  if (through)
    run(*through, false);
  else
    for (std::size_t s = 0; s < g.vertex_count(); ++s) run(static_cast<int>(s), true);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace sc
