#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cubham/analysis.hpp"
#include "cubham/graph.hpp"

namespace testsupport {

using cubham::CubicGraph;
using cubham::Edge;

inline CubicGraph lcf(int n, const std::vector<int>& jumps) {
  std::set<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    es.insert({std::min(i, j), std::max(i, j)});
    int k = ((i + jumps[i % jumps.size()]) % n + n) % n;
    es.insert({std::min(i, k), std::max(i, k)});
  }
  std::vector<Edge> out;
  for (auto [a, b] : es) out.push_back({a, b});
  return CubicGraph::from_edges(n, out);
}

inline CubicGraph k4() { return CubicGraph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline CubicGraph k33() { return lcf(6, {3, -3}); }
inline CubicGraph prism() {
  return CubicGraph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}
inline CubicGraph cube() { return lcf(8, {3, -3}); }
inline CubicGraph heawood() { return lcf(14, {5, -5}); }
inline CubicGraph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({i, i + 5});
    es.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return CubicGraph::from_edges(10, es);
}

/// Counts hamiltonian cycles by plain path extension, honouring edge constraints.
class BruteHam {
 public:
  explicit BruteHam(const CubicGraph& g) : g_(g) {}

  std::uint64_t count(const std::vector<int>& yes = {}, const std::vector<int>& no = {}, bool stop_at_first = false) {
    int n = g_.order();
    if (n < 3) return 0;
    yes_ = yes;
    banned_.assign(g_.size(), 0);
    for (int e : no) banned_[e] = 1;
    stop_ = stop_at_first;
    found_ = 0;
    used_.assign(g_.size(), 0);
    seen_.assign(n, 0);
    seen_[0] = 1;
    path_ = {0};
    extend();
    return stop_ ? found_ : found_ / 2;
  }

 private:
  void extend() {
    if (stop_ && found_) return;
    int n = g_.order();
    int v = path_.back();
    if (static_cast<int>(path_.size()) == n) {
      int e = g_.edge_id(v, 0);
      if (e < 0 || banned_[e]) return;
      used_[e] = 1;
      bool ok = std::all_of(yes_.begin(), yes_.end(), [&](int y) { return used_[y]; });
      used_[e] = 0;
      if (ok) ++found_;
      return;
    }
    auto nb = g_.neighbors(v);
    auto inc = g_.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      int w = nb[i];
      if (seen_[w] || banned_[inc[i]]) continue;
      seen_[w] = 1;
      used_[inc[i]] = 1;
      path_.push_back(w);
      extend();
      path_.pop_back();
      used_[inc[i]] = 0;
      seen_[w] = 0;
    }
  }

  const CubicGraph& g_;
  std::vector<int> yes_, path_;
  std::vector<char> banned_, used_, seen_;
  bool stop_ = false;
  std::uint64_t found_ = 0;
};

inline bool brute_hamiltonian(const CubicGraph& g, const std::vector<int>& yes = {}, const std::vector<int>& no = {}) {
  BruteHam b(g);
  return b.count(yes, no, true) > 0;
}

/// Minimum size of an independent edge set whose removal leaves two
/// components that both contain a cycle; -1 if none up to max_k.
inline int brute_cyclic_connectivity(const CubicGraph& g, int max_k) {
  int m = g.size(), n = g.order();
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> idx(k);
    bool hit = false;
    auto rec = [&](auto& self, int pos, int start) -> void {
      if (hit) return;
      if (pos == k) {
        std::set<int> ends;
        for (int e : idx) {
          ends.insert(g.edge(e).u);
          ends.insert(g.edge(e).v);
        }
        if (static_cast<int>(ends.size()) != 2 * k) return;
        int count = 0;
        auto comp = cubham::components_without(g, idx, count);
        if (count != 2) return;
        std::vector<long> verts(2, 0), edges(2, 0);
        for (int v = 0; v < n; ++v) ++verts[comp[v]];
        for (int e = 0; e < m; ++e) {
          if (std::find(idx.begin(), idx.end(), e) != idx.end()) continue;
          ++edges[comp[g.edge(e).u]];
        }
        if (edges[0] >= verts[0] && edges[1] >= verts[1]) hit = true;
        return;
      }
      for (int e = start; e < m; ++e) {
        idx[pos] = e;
        self(self, pos + 1, e + 1);
      }
    };
    rec(rec, 0, 0);
    if (hit) return k;
  }
  return -1;
}

/// Random connected graph with all degrees in {2,3} (all 3 when cubic).
inline CubicGraph random_subcubic(int n, std::mt19937_64& rng, bool cubic = false) {
  for (;;) {
    std::vector<int> target(n);
    for (int& t : target) t = cubic ? 3 : 2 + static_cast<int>(rng() % 2);
    int sum = 0;
    for (int t : target) sum += t;
    if (sum % 2) {
      if (cubic) return random_subcubic(n + 1, rng, true);
      target[0] = target[0] == 2 ? 3 : 2;
    }
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) {
      for (int t = 0; t < target[v]; ++t) stubs.push_back(v);
    }
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> es;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b || !es.insert({std::min(a, b), std::max(a, b)}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Edge> out;
    for (auto [a, b] : es) out.push_back({a, b});
    auto g = CubicGraph::from_edges(n, out);
    if (cubham::is_connected(g)) return g;
  }
}

/// Random connected bipartite cubic graph on n vertices: union of three
/// random perfect matchings between the colour classes, simple graphs only.
inline std::optional<CubicGraph> random_bipartite_cubic(int n, std::mt19937_64& rng) {
  int h = n / 2;
  std::set<std::pair<int, int>> es;
  std::vector<int> p(h);
  for (int r = 0; r < 3; ++r) {
    for (int i = 0; i < h; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    for (int i = 0; i < h; ++i) {
      if (!es.insert({i, h + p[i]}).second) return std::nullopt;
    }
  }
  std::vector<Edge> out;
  for (auto [a, b] : es) out.push_back({a, b});
  auto g = CubicGraph::from_edges(n, out);
  if (!cubham::is_connected(g)) return std::nullopt;
  return g;
}

inline CubicGraph random_relabel(const CubicGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

}  // namespace testsupport
