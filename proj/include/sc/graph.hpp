#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sc {

/// Undirected simple connected graph. Edges may carry generator labels:
/// label[u][k] is the letter read when walking from u to adj[u][k]
/// (+(i+1) or -(i+1); involutions read +(i+1) both ways; 0 when unlabelled).
struct SimplicialGraph {
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> label;
  std::vector<std::string> letter_names;  // one per label letter
  std::vector<bool> involution;           // per label letter
  bool transitive = false;                // vertex-transitivity hint
  int basepoint = 0;
  /// Radius when this is a ball in a larger graph, nullopt when the graph is
  /// the whole object.
  std::optional<std::size_t> ball_radius;

  std::size_t vertex_count() const { return adj.size(); }
  std::size_t edge_count() const;
  bool labelled() const { return !letter_names.empty(); }
  bool has_edge(int u, int v) const;
  /// Letter read along u -> v (0 if unlabelled or absent).
  int letter(int u, int v) const;

  /// Builds from an edge list, validating simplicity and connectivity.
  static SimplicialGraph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges);
  std::vector<std::pair<int, int>> edges() const;
};

SimplicialGraph cycle_graph(std::size_t n);
SimplicialGraph path_graph(std::size_t n);
/// Complete binary tree of the given depth.
SimplicialGraph binary_tree(std::size_t depth);

/// Named generators: `cycle:N`, `path:N`, `tree:DEPTH`, `complete:N`.
SimplicialGraph generate_graph(const std::string& spec);

/// Edge-list text: optional `vertices N` line, then one `u v` pair per
/// line; `#` starts a comment.
SimplicialGraph parse_edge_list(const std::string& text);
SimplicialGraph load_edge_list(const std::string& path);
std::string format_edge_list(const SimplicialGraph& g);

/// Simple cycles of length 3..max_length as closed vertex sequences
/// (first vertex not repeated). Each cycle appears once: when `through` is
/// set it starts at that vertex, otherwise at its least vertex; the second
/// vertex is less than the last.
std::vector<std::vector<int>> simple_cycles(const SimplicialGraph& g, std::size_t max_length,
                                            std::optional<int> through = std::nullopt);

}  // namespace sc
