#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubham {

inline constexpr int kMaxVertices = 512;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph whose vertices all have degree 2 or 3.
///
/// Immutable once built. Neighbour lists are sorted and edge ids index
/// the lexicographically sorted edge list.
class CubicGraph {
 public:
  CubicGraph() = default;

  /// Validates simplicity, vertex range and degrees; throws GraphError.
  static CubicGraph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return deg_[v]; }
  std::span<const int> neighbors(int v) const { return {adj_[v].data(), deg_[v]}; }
  std::span<const int> incident_edges(int v) const { return {inc_[v].data(), deg_[v]}; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  int edge_id(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }
  int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
  bool is_cubic() const;

  /// perm[old] = new.
  CubicGraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const CubicGraph& a, const CubicGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::array<int, 3>> adj_;
  std::vector<std::array<int, 3>> inc_;
  std::vector<std::uint8_t> deg_;
  std::vector<Edge> edges_;
};

/// Loopless cubic multigraph; parallel edges allowed.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws GraphError on loops or a degree other than 3.
  static Multigraph from_edges(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edge ids incident to v, in edge-id order.
  const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
  bool is_3_edge_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> inc_;
};

CubicGraph graph_from_multigraph(const Multigraph& m);

}  // namespace cubham
