#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cubham/graph.hpp"

namespace cubham {

struct Bipartition {
  std::vector<std::uint8_t> color;
};

struct NotBipartite {
  std::vector<int> odd_cycle;
};

/// 2-colouring with color[0] == 0, or an odd cycle.
std::variant<Bipartition, NotBipartite> bipartition(const CubicGraph& g);
std::optional<Bipartition> try_bipartition(const CubicGraph& g);

struct ParityReport {
  int n20 = 0;
  int n21 = 0;
  bool consistent = true;
};

ParityReport degree2_parity(const CubicGraph& g, const Bipartition& b);

/// Shortest cycle length, 0 for a forest.
int girth(const CubicGraph& g);
std::vector<int> distances_from(const CubicGraph& g, int src);
bool is_connected(const CubicGraph& g);
bool is_3_connected(const CubicGraph& g);

struct EdgeCut {
  std::vector<int> edges;
  std::vector<int> side_a;  // contains the smallest vertex
  std::vector<int> side_b;
};

/// Smallest cyclic edge cut; nullopt when none exists.
/// Requires a connected cubic graph with at least 8 vertices.
std::optional<int> cyclic_connectivity(const CubicGraph& g);

/// All independent k-edge cuts leaving exactly two components, both with a cycle.
std::vector<EdgeCut> find_cyclic_cuts(const CubicGraph& g, int k);

/// Components of g with the given edges removed.
std::vector<int> components_without(const CubicGraph& g, const std::vector<int>& removed, int& count);

}  // namespace cubham
