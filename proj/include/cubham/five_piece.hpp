#pragma once

#include <array>

#include "cubham/graph.hpp"

namespace cubham {

/// Connected bipartite graph of girth at least 6 with exactly five vertices
/// of degree 2. The special vertex is the one alone in its colour class.
struct FivePiece {
  CubicGraph graph;
  int special = -1;
  std::array<int, 4> others{};
};

/// Validates the invariants and locates the special vertex; throws GraphError.
FivePiece make_five_piece(const CubicGraph& g);

}  // namespace cubham
