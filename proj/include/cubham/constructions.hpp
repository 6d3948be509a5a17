#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubham/graph.hpp"

namespace cubham {

struct TripleSpec {
  CubicGraph base;
  int v = -1;
  Edge e;  // {x, y}
  Multigraph m;
};

struct SpecReport {
  bool ok = true;
  std::string violation;  // first failed condition, empty when ok
};

SpecReport validate_triple_spec(const TripleSpec& spec);

/// Vertex layout: per vertex a of M, three bricks of |V(G)|-1 vertices
/// (brick i serves the i-th edge incident to a) followed by z1, z2, z3.
/// Throws GraphError when the spec is invalid.
CubicGraph triple_operation(const TripleSpec& spec);

/// Every (v, e) pair of g that passes validate_triple_spec, e as an edge id.
std::vector<std::pair<int, int>> triple_pairs(const CubicGraph& g);

/// Replaces each vertex of g by gp minus vertex 0. Copy k occupies
/// vertices k*(|V(gp)|-1) onward. Throws GraphError on failed preconditions.
CubicGraph inflate(const CubicGraph& g, const CubicGraph& gp);

struct NamedInfo {
  std::string key;
  int hog_id = 0;
  int order = 0;
  bool hamiltonian = false;
  bool available = false;  // fixture present
  std::string source;
};

std::vector<NamedInfo> named_graphs();
/// Loads a vendored fixture after checking its SHA-256 and the recorded
/// order and hamiltonicity. Throws GraphError for unknown keys, missing
/// fixtures or integrity failures.
CubicGraph named_graph(std::string_view key);

std::string sha256_hex(std::string_view data);

}  // namespace cubham
