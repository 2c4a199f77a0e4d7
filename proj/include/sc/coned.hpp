#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sc/dehn.hpp"

namespace sc {

/// Raised when coset equality cannot be decided; vertices are never merged
/// on a guess.
class UndecidedCoset : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConedVertex {
  int factor = 0;            // 0: coset gA, 1: coset gB
  NormalForm representative;  // g
  std::size_t depth = 0;
  /// Incident edges keyed by offset x in the factor: edge element g*x.
  std::map<Element, std::size_t> incident;
};

/// Edge {hA, hB} for one element h, with h = rep(end[f]) * offset[f].
struct ConedEdge {
  std::size_t end[2] = {0, 0};
  Element offset[2];
};

struct ConedCell {
  std::size_t member = 0;           // symmetrized-set member that traced it
  std::vector<std::size_t> edges;   // closed edge path
  std::vector<std::size_t> vertices;
};

/// Finite piece of the coned-off Cayley complex.
struct ConedComplex {
  std::size_t radius = 0;
  std::vector<ConedVertex> vertices;
  std::vector<ConedEdge> edges;
  std::vector<ConedCell> cells;
};

/// The quotient by the group action: two vertices, one edge, one cell per
/// relator class.
struct QuotientComplex {
  std::size_t vertices = 2;
  std::size_t edges = 1;
  std::vector<std::size_t> cell_boundaries;  // boundary length per class
};

QuotientComplex quotient_complex(const SymmetrizedSet& R);

/// Ball of the given radius around the edge {A, B} in the coset graph,
/// with every relator cell whose whole boundary lies in the ball. Both
/// factors must be finite.
ConedComplex coned_ball(const DehnSolver& q, std::size_t radius);

/// Cell tracing over a built 1-skeleton, OpenMP-parallel over edges.
std::vector<ConedCell> trace_cells(const ConedComplex& X, const SymmetrizedSet& R, const FreeProduct& fp);
std::vector<ConedCell> trace_cells_serial(const ConedComplex& X, const SymmetrizedSet& R, const FreeProduct& fp);

struct GeometricPieceReport {
  Rational ratio{0};
  std::size_t piece_edges = 0;
  std::size_t boundary = 0;
  std::size_t first_cell = 0;
  std::size_t second_cell = 0;
};

/// max over ordered pairs of distinct cells of (longest common edge path) /
/// (boundary length of the first cell). Throws SpecError with fewer than two
/// cells.
GeometricPieceReport geometric_piece_ratio(const ConedComplex& X);

nlohmann::ordered_json to_json(const ConedComplex& X, const FreeProduct& fp);

}  // namespace sc
