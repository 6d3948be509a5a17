#include "cubham/graph.hpp"

#include <algorithm>

namespace cubham {

CubicGraph CubicGraph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " out of range");
  }
  CubicGraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge endpoint out of range");
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end()) {
    throw GraphError("parallel edges");
  }
  g.adj_.assign(n, {-1, -1, -1});
  g.inc_.assign(n, {-1, -1, -1});
  g.deg_.assign(n, 0);
  for (int id = 0; id < g.size(); ++id) {
    for (int end = 0; end < 2; ++end) {
      int a = end ? g.edges_[id].v : g.edges_[id].u;
      int b = end ? g.edges_[id].u : g.edges_[id].v;
      if (g.deg_[a] == 3) throw GraphError("vertex " + std::to_string(a) + " has degree above 3");
      g.adj_[a][g.deg_[a]] = b;
      g.inc_[a][g.deg_[a]] = id;
      ++g.deg_[a];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (g.deg_[v] < 2) {
      throw GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.deg_[v]));
    }
    // keep neighbour lists sorted, edge ids aligned
    int d = g.deg_[v];
    for (int i = 1; i < d; ++i) {
      for (int j = i; j > 0 && g.adj_[v][j - 1] > g.adj_[v][j]; --j) {
        std::swap(g.adj_[v][j - 1], g.adj_[v][j]);
        std::swap(g.inc_[v][j - 1], g.inc_[v][j]);
      }
    }
  }
  return g;
}

int CubicGraph::edge_id(int u, int v) const {
  if (u < 0 || u >= n_) return -1;
  for (int i = 0; i < deg_[u]; ++i) {
    if (adj_[u][i] == v) return inc_[u][i];
  }
  return -1;
}

bool CubicGraph::is_cubic() const {
  return std::all_of(deg_.begin(), deg_.end(), [](std::uint8_t d) { return d == 3; });
}

CubicGraph CubicGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const Edge& e : edges_) es.push_back({perm[e.u], perm[e.v]});
  return from_edges(n_, es);
}

Multigraph Multigraph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Multigraph m;
  m.n_ = n;
  m.inc_.assign(n, {});
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  m.edges_ = std::move(edges);
  for (int id = 0; id < m.size(); ++id) {
    m.inc_[m.edges_[id].u].push_back(id);
    m.inc_[m.edges_[id].v].push_back(id);
  }
  for (int v = 0; v < n; ++v) {
    if (m.inc_[v].size() != 3) throw GraphError("multigraph vertex " + std::to_string(v) + " is not of degree 3");
  }
  return m;
}

bool Multigraph::is_3_edge_connected() const {
  // brute force over pairs of removed edges; skeletons are tiny
  auto connected_without = [&](int a, int b) {
    if (n_ == 0) return true;
    std::vector<int> seen(n_, 0), stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : inc_[v]) {
        if (id == a || id == b) continue;
        int w = edges_[id].u == v ? edges_[id].v : edges_[id].u;
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  };
  for (int a = -1; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      if (!connected_without(a, b)) return false;
    }
  }
  return connected_without(-1, -1);
}

CubicGraph graph_from_multigraph(const Multigraph& m) {
  return CubicGraph::from_edges(m.order(), m.edges());
}

}  // namespace cubham
