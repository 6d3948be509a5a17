#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cubham/graph.hpp"
#include "cubham/hamsolver.hpp"

namespace cubham {

/// An 8-cycle v1..v8 with distinct outer neighbours v'1..v'8 (v'i ~ vi)
/// that satisfies the reducibility conditions.
struct ReductionSite {
  std::array<int, 8> inner{};
  std::array<int, 8> outer{};

  /// (v'1,v'2), (v'8,v'3), (v'7,v'4), (v'6,v'5) in parent vertex ids.
  std::array<Edge, 4> new_edges() const;
  friend bool operator==(const ReductionSite&, const ReductionSite&) = default;
};

/// True when the path (given as a vertex list) can be closed to a cycle of
/// exactly len edges.
bool path_on_cycle(const CubicGraph& g, std::span<const int> path, int len);

/// Checks distinctness and conditions (i)-(iii) for one labelled 8-cycle.
bool is_reduction_site(const CubicGraph& g, const ReductionSite& s);

/// Every site, one per class under the four labellings that give the same
/// reduction. Requires a bipartite cubic graph of girth at least 6.
std::vector<ReductionSite> find_reducible_sites(const CubicGraph& g);
bool is_reducible(const CubicGraph& g);

struct Reduced {
  CubicGraph graph;
  /// e1..e4 oriented as in ReductionSite::new_edges, in reduced ids
  std::array<Edge, 4> new_edges{};
  std::array<int, 4> edge_ids{};
  std::vector<int> from_parent;  // reduced vertex -> parent vertex
};

Reduced reduce(const CubicGraph& g, const ReductionSite& site);

struct Expanded {
  CubicGraph graph;  // reduced vertices keep their ids, v1..v8 are appended
  ReductionSite site;
};

/// Inverse of reduce. Each pair is (v'1,v'2), (v'8,v'3), (v'7,v'4), (v'6,v'5).
/// Throws GraphError when the pairs are not four vertex-disjoint edges of
/// gr with v'1, v'3, v'5, v'7 on one side of the bipartition.
Expanded expand(const CubicGraph& gr, const std::array<Edge, 4>& new_edges);
/// Orients the edges by colour: v'1 is the colour-0 end of e1.
Expanded expand(const CubicGraph& gr, const std::array<int, 4>& edge_ids);

/// Allowed intersections of a cycle with {e1,e2,e3,e4}, as bit masks.
inline constexpr std::array<unsigned, 5> kExtendablePatterns{0b0001, 0b1000, 0b0011, 0b0110, 0b1100};

struct ExtendableCycle {
  unsigned pattern = 0;
  HamCycle cycle;
};

std::optional<ExtendableCycle> find_extendable_cycle(const CubicGraph& gr, const std::array<int, 4>& edge_ids);
bool has_extendable_cycle(const CubicGraph& gr, const std::array<int, 4>& edge_ids);

/// Hamiltonian cycle of g from an extendable cycle of its reduction.
/// Throws GraphError when the pattern is not allowed.
HamCycle lift_cycle(const CubicGraph& g, const ReductionSite& site, const Reduced& r, const HamCycle& hr);

/// Tuple normalised up to reversal: the smaller of (e1..e4) and (e4..e1).
std::array<int, 4> normalize_tuple(const std::array<int, 4>& ids);

}  // namespace cubham
