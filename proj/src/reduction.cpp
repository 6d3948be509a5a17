#include "cubham/reduction.hpp"

#include <algorithm>

#include "cubham/analysis.hpp"
#include "cubham/generator.hpp"

namespace cubham {
namespace {

// index of v'i / vi is i-1
constexpr std::array<std::array<int, 2>, 4> kNewPairs{{{0, 1}, {7, 2}, {6, 3}, {5, 4}}};

// Four labellings give the same reduction: identity, i -> 7-i (reversal of
// the tuple), i -> 3-i (each new edge fixed) and rotation by four.
std::array<int, 8> relabel(const std::array<int, 8>& a, int kind) {
  std::array<int, 8> out{};
  for (int i = 0; i < 8; ++i) {
    int j = i;
    if (kind == 1) j = (13 - i) % 8;  // 1-based 7-i
    if (kind == 2) j = (9 - i) % 8;   // 1-based 3-i
    if (kind == 3) j = (i + 4) % 8;
    out[i] = a[j];
  }
  return out;
}

bool extend(const CubicGraph& g, std::vector<char>& used, int cur, int target, int left) {
  if (left == 1) return g.adjacent(cur, target);
  for (int w : g.neighbors(cur)) {
    if (used[w] || w == target) continue;
    used[w] = 1;
    bool ok = extend(g, used, w, target, left - 1);
    used[w] = 0;
    if (ok) return true;
  }
  return false;
}

// inner routing for each allowed pattern, as vertex paths over
// indices 0..7 (inner) and 8..15 (outer)
struct Routing {
  unsigned pattern;
  std::vector<std::vector<int>> paths;
};

const std::array<Routing, 5>& routings() {
  static const std::array<Routing, 5> r{{
      {0b0001, {{8, 0, 7, 6, 5, 4, 3, 2, 1, 9}}},
      {0b1000, {{13, 5, 6, 7, 0, 1, 2, 3, 4, 12}}},
      {0b0011, {{8, 0, 1, 9}, {15, 7, 6, 5, 4, 3, 2, 10}}},
      {0b0110, {{15, 7, 0, 1, 2, 10}, {14, 6, 5, 4, 3, 11}}},
      {0b1100, {{14, 6, 7, 0, 1, 2, 3, 11}, {13, 5, 4, 12}}},
  }};
  return r;
}

HamCycle cycle_from_edges(const CubicGraph& g, const std::vector<Edge>& es) {
  int n = g.order();
  if (static_cast<int>(es.size()) != n) throw GraphError("lifted edge set has wrong size");
  std::vector<std::array<int, 2>> next(n, {-1, -1});
  HamCycle c;
  for (const Edge& e : es) {
    int id = g.edge_id(e.u, e.v);
    if (id < 0) throw GraphError("lifted edge is not in the graph");
    c.edges.push_back(id);
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (next[a][0] < 0) {
        next[a][0] = b;
      } else if (next[a][1] < 0) {
        next[a][1] = b;
      } else {
        throw GraphError("lifted edge set is not a cycle");
      }
    }
  }
  std::sort(c.edges.begin(), c.edges.end());
  int prev = -1, cur = 0;
  for (int i = 0; i < n; ++i) {
    c.order.push_back(cur);
    int nx = next[cur][0] != prev ? next[cur][0] : next[cur][1];
    prev = cur;
    cur = nx;
  }
  return c;
}

}  // namespace

std::array<Edge, 4> ReductionSite::new_edges() const {
  std::array<Edge, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = {outer[kNewPairs[k][0]], outer[kNewPairs[k][1]]};
  return out;
}

bool path_on_cycle(const CubicGraph& g, std::span<const int> path, int len) {
  int rest = len - static_cast<int>(path.size()) + 1;
  if (rest < 1) return false;
  std::vector<char> used(g.order(), 0);
  for (int v : path) used[v] = 1;
  return extend(g, used, path.back(), path.front(), rest);
}

bool is_reduction_site(const CubicGraph& g, const ReductionSite& s) {
  const auto& v = s.inner;
  const auto& o = s.outer;
  std::vector<int> all(v.begin(), v.end());
  all.insert(all.end(), o.begin(), o.end());
  for (int x : all) {
    if (x < 0 || x >= g.order()) return false;
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (int i = 0; i < 8; ++i) {
    if (!g.adjacent(v[i], v[(i + 1) % 8]) || !g.adjacent(v[i], o[i])) return false;
  }
  if (g.adjacent(o[7], o[2]) || g.adjacent(o[6], o[3])) return false;
  std::array<int, 4> p1{o[0], v[0], v[1], o[1]}, p2{o[4], v[4], v[5], o[5]};
  bool a = path_on_cycle(g, p1, 6), b = path_on_cycle(g, p2, 6);
  if (!a && !b) return false;
  if (a != b) {
    std::array<int, 6> q1{o[7], v[7], v[0], v[1], v[2], o[2]}, q2{o[3], v[3], v[4], v[5], v[6], o[6]};
    if (!path_on_cycle(g, q1, 8) && !path_on_cycle(g, q2, 8)) return false;
  }
  return true;
}

namespace {

template <class Visit>
void for_each_site(const CubicGraph& g, Visit&& visit) {
  int n = g.order();
  std::vector<char> used(n, 0);
  ReductionSite s;
  // every labelled 8-cycle v1..v8 with v1 the smallest of its class
  auto close = [&]() -> bool {
    for (int i = 0; i < 8; ++i) {
      int prev = s.inner[(i + 7) % 8], next = s.inner[(i + 1) % 8];
      int third = -1;
      for (int w : g.neighbors(s.inner[i])) {
        if (w != prev && w != next) third = w;
      }
      if (third < 0) return true;
      s.outer[i] = third;
    }
    for (int k = 1; k < 4; ++k) {
      if (relabel(s.inner, k) < s.inner) return true;
    }
    if (!is_reduction_site(g, s)) return true;
    return visit(s);
  };
  auto dfs = [&](auto& self, int depth) -> bool {
    int cur = s.inner[depth - 1];
    if (depth == 8) return g.adjacent(cur, s.inner[0]) ? close() : true;
    for (int w : g.neighbors(cur)) {
      if (used[w]) continue;
      used[w] = 1;
      s.inner[depth] = w;
      bool go = self(self, depth + 1);
      used[w] = 0;
      if (!go) return false;
    }
    return true;
  };
  for (int r = 0; r < n; ++r) {
    used[r] = 1;
    s.inner[0] = r;
    bool go = dfs(dfs, 1);
    used[r] = 0;
    if (!go) return;
  }
}

}  // namespace

std::vector<ReductionSite> find_reducible_sites(const CubicGraph& g) {
  std::vector<ReductionSite> out;
  for_each_site(g, [&](const ReductionSite& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool is_reducible(const CubicGraph& g) {
  bool found = false;
  for_each_site(g, [&](const ReductionSite&) {
    found = true;
    return false;
  });
  return found;
}

Reduced reduce(const CubicGraph& g, const ReductionSite& site) {
  if (!is_reduction_site(g, site)) throw GraphError("not a reduction site");
  int n = g.order();
  std::vector<int> to(n, 0);
  for (int v : site.inner) to[v] = -1;
  Reduced r;
  for (int v = 0; v < n; ++v) {
    if (to[v] < 0) continue;
    to[v] = static_cast<int>(r.from_parent.size());
    r.from_parent.push_back(v);
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (to[e.u] >= 0 && to[e.v] >= 0) es.push_back({to[e.u], to[e.v]});
  }
  auto ne = site.new_edges();
  for (int k = 0; k < 4; ++k) {
    r.new_edges[k] = {to[ne[k].u], to[ne[k].v]};
    es.push_back(r.new_edges[k]);
  }
  r.graph = CubicGraph::from_edges(n - 8, es);
  for (int k = 0; k < 4; ++k) r.edge_ids[k] = r.graph.edge_id(r.new_edges[k].u, r.new_edges[k].v);
  return r;
}

Expanded expand(const CubicGraph& gr, const std::array<Edge, 4>& new_edges) {
  int m = gr.order();
  std::array<int, 8> outer{};
  for (int k = 0; k < 4; ++k) {
    if (!gr.adjacent(new_edges[k].u, new_edges[k].v)) throw GraphError("tuple entry is not an edge");
    outer[kNewPairs[k][0]] = new_edges[k].u;
    outer[kNewPairs[k][1]] = new_edges[k].v;
  }
  std::array<int, 8> sorted = outer;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("tuple edges are not vertex-disjoint");
  }
  auto bp = try_bipartition(gr);
  if (!bp) throw GraphError("reduced graph is not bipartite");
  if (is_connected(gr)) {
    for (int i = 2; i < 8; i += 2) {
      if (bp->color[outer[i]] != bp->color[outer[0]]) throw GraphError("tuple orientation breaks the bipartition");
    }
  }
  std::vector<Edge> es;
  for (const Edge& e : gr.edges()) {
    bool skip = false;
    for (int k = 0; k < 4; ++k) {
      Edge a = new_edges[k], b{new_edges[k].v, new_edges[k].u};
      if (e == a || e == b) skip = true;
    }
    if (!skip) es.push_back(e);
  }
  Expanded x;
  for (int i = 0; i < 8; ++i) {
    x.site.inner[i] = m + i;
    x.site.outer[i] = outer[i];
    es.push_back({m + i, m + (i + 1) % 8});
    es.push_back({m + i, outer[i]});
  }
  x.graph = CubicGraph::from_edges(m + 8, es);
  return x;
}

Expanded expand(const CubicGraph& gr, const std::array<int, 4>& edge_ids) {
  auto bp = try_bipartition(gr);
  if (!bp) throw GraphError("reduced graph is not bipartite");
  std::array<Edge, 4> es{};
  for (int k = 0; k < 4; ++k) {
    if (edge_ids[k] < 0 || edge_ids[k] >= gr.size()) throw GraphError("edge id out of range");
    Edge e = gr.edge(edge_ids[k]);
    // v'1, v'7 lead their pairs and sit on colour 0; v'3, v'5 trail
    bool lead_zero = k == 0 || k == 2;
    int zero = bp->color[e.u] == 0 ? e.u : e.v;
    int one = zero == e.u ? e.v : e.u;
    es[k] = lead_zero ? Edge{zero, one} : Edge{one, zero};
  }
  return expand(gr, es);
}

std::optional<ExtendableCycle> find_extendable_cycle(const CubicGraph& gr, const std::array<int, 4>& edge_ids) {
  HamSolver solver(gr);
  for (unsigned pat : kExtendablePatterns) {
    std::vector<int> yes, no;
    for (int k = 0; k < 4; ++k) (pat >> k & 1 ? yes : no).push_back(edge_ids[k]);
    auto r = solver.solve(yes, no);
    if (r.status == SolveStatus::Found) return ExtendableCycle{pat, *r.cycle};
  }
  return std::nullopt;
}

bool has_extendable_cycle(const CubicGraph& gr, const std::array<int, 4>& edge_ids) {
  return find_extendable_cycle(gr, edge_ids).has_value();
}

HamCycle lift_cycle(const CubicGraph& g, const ReductionSite& site, const Reduced& r, const HamCycle& hr) {
  unsigned pat = 0;
  std::vector<Edge> es;
  for (int e : hr.edges) {
    auto it = std::find(r.edge_ids.begin(), r.edge_ids.end(), e);
    if (it != r.edge_ids.end()) {
      pat |= 1u << (it - r.edge_ids.begin());
      continue;
    }
    const Edge& x = r.graph.edge(e);
    es.push_back({r.from_parent[x.u], r.from_parent[x.v]});
  }
  auto rt = std::find_if(routings().begin(), routings().end(), [&](const Routing& t) { return t.pattern == pat; });
  if (rt == routings().end()) throw GraphError("cycle does not meet the new edges in an allowed pattern");
  auto vertex = [&](int i) { return i < 8 ? site.inner[i] : site.outer[i - 8]; };
  for (const auto& path : rt->paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) es.push_back({vertex(path[i]), vertex(path[i + 1])});
  }
  return cycle_from_edges(g, es);
}

std::array<int, 4> normalize_tuple(const std::array<int, 4>& ids) {
  std::array<int, 4> rev{ids[3], ids[2], ids[1], ids[0]};
  return std::min(ids, rev);
}

std::uint64_t filter_irreducible(const std::vector<CubicGraph>& in, const std::function<void(const CubicGraph&)>& emit) {
  std::uint64_t kept = 0;
  for (const auto& g : in) {
    if (is_reducible(g)) continue;
    ++kept;
    emit(g);
  }
  return kept;
}

}  // namespace cubham
