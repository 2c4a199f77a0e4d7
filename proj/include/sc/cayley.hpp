#pragma once

#include <string>
#include <vector>

#include "sc/dehn.hpp"
#include "sc/graph.hpp"

namespace sc {

/// A ball in a Cayley graph. The graph is labelled by the generating set
/// (each pair {s, s^-1} is one letter) and carries the transitivity hint
/// with the identity as basepoint (vertex 0).
struct CayleyBall {
  SimplicialGraph graph;
  std::vector<std::string> vertex_words;  // a geodesic word for each vertex
  std::vector<std::size_t> distance;
  std::size_t radius = 0;
  std::string source;

  /// Every simple cycle through the identity of at most this length lies in
  /// the ball.
  std::size_t horizon_margin() const { return 2 * radius + 1; }
};

/// Whole or truncated Cayley graph of one factor over its generating set.
CayleyBall cayley_ball(const Factor& f, std::size_t radius);
/// Cayley graph of A*B over S_A disjoint union S_B.
CayleyBall cayley_ball(const FreeProduct& fp, std::size_t radius);
/// Cayley graph of (A*B)/<<R>>, deduplicating vertices with the word problem.
CayleyBall cayley_ball(const DehnSolver& quotient, std::size_t radius);

}  // namespace sc
