#include "cubham/cuts.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "cubham/analysis.hpp"
#include "cubham/canon.hpp"
#include "cubham/hamsolver.hpp"

namespace cubham {
namespace {

struct CutInfo {
  std::vector<int> comp;             // 0 or 1 per vertex
  std::vector<std::array<int, 2>> ends;  // per cut edge: end in side 0, end in side 1
};

CutInfo analyse_cut(const CubicGraph& g, std::span<const int> cut, int k) {
  if (static_cast<int>(cut.size()) != k) throw GraphError("expected a " + std::to_string(k) + "-edge cut");
  std::set<int> ends;
  for (int e : cut) {
    if (e < 0 || e >= g.size()) throw GraphError("cut edge out of range");
    ends.insert(g.edge(e).u);
    ends.insert(g.edge(e).v);
  }
  if (static_cast<int>(ends.size()) != 2 * k) throw GraphError("cut is not independent");
  int count = 0;
  CutInfo info;
  info.comp = components_without(g, std::vector<int>(cut.begin(), cut.end()), count);
  if (count != 2) throw GraphError("removing the cut must leave exactly two components");
  if (info.comp[0] != 0) {
    for (int& c : info.comp) c = 1 - c;
  }
  for (int e : cut) {
    int u = g.edge(e).u, v = g.edge(e).v;
    if (info.comp[u] == info.comp[v]) throw GraphError("cut edge does not cross the cut");
    if (info.comp[u] == 1) std::swap(u, v);
    info.ends.push_back({u, v});
  }
  return info;
}

// Induced side plus extra vertices; returns parent->local map.
struct SideBuilder {
  std::vector<int> from_parent, local;
  std::vector<Edge> edges;

  SideBuilder(const CubicGraph& g, const std::vector<int>& comp, int side) {
    local.assign(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
      if (comp[v] == side) {
        local[v] = static_cast<int>(from_parent.size());
        from_parent.push_back(v);
      }
    }
    for (const Edge& e : g.edges()) {
      if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v]});
    }
  }
  int add_vertex() {
    from_parent.push_back(-1);
    return static_cast<int>(from_parent.size()) - 1;
  }
  void add_edge(int a, int b) { edges.push_back({std::min(a, b), std::max(a, b)}); }
  CutSide build() const {
    return {CubicGraph::from_edges(static_cast<int>(from_parent.size()), edges), from_parent};
  }
};

std::array<int, 2> other_neighbors(const CubicGraph& g, int v, int skip) {
  std::array<int, 2> out{};
  int k = 0;
  for (int w : g.neighbors(v)) {
    if (w != skip) {
      if (k == 2) throw GraphError("vertex has more than two other neighbours");
      out[k++] = w;
    }
  }
  if (k != 2) throw GraphError("edge endpoint needs two other neighbours");
  return out;
}

CubicGraph rewired(const CubicGraph& g, int u, int v, std::array<int, 2> nu, std::array<int, 2> nv) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (e.u == u || e.v == u || e.u == v || e.v == v) continue;
    es.push_back(e);
  }
  for (int w : nu) es.push_back({std::min(u, w), std::max(u, w)});
  for (int w : nv) es.push_back({std::min(v, w), std::max(v, w)});
  return CubicGraph::from_edges(g.order(), es);
}

}  // namespace

Split3 split_3cut(const CubicGraph& g, std::span<const int> cut) {
  CutInfo info = analyse_cut(g, cut, 3);
  auto bp = try_bipartition(g);
  if (!bp) throw GraphError("3-cut split needs a bipartite graph");
  Split3 out;
  for (int side = 0; side < 2; ++side) {
    SideBuilder sb(g, info.comp, side);
    int apex = sb.add_vertex();
    int colour = bp->color[info.ends[0][side]];
    for (int i = 0; i < 3; ++i) {
      int w = info.ends[i][side];
      if (bp->color[w] != colour) throw GraphError("3-cut ends on one side must share a colour");
      sb.add_edge(sb.local[w], apex);
    }
    out.parts[side] = sb.build();
    out.apex[side] = apex;
    for (int i = 0; i < 3; ++i) {
      out.triples[side][i] = out.parts[side].graph.edge_id(sb.local[info.ends[i][side]], apex);
    }
  }
  return out;
}

Split4 split_4cut(const CubicGraph& g, std::span<const int> cut) {
  CutInfo info = analyse_cut(g, cut, 4);
  auto bp = try_bipartition(g);
  if (!bp) throw GraphError("4-cut split needs a bipartite graph");
  Split4 out;
  for (int side = 0; side < 2; ++side) {
    SideBuilder sb(g, info.comp, side);
    std::vector<int> by_colour[2];
    for (int i = 0; i < 4; ++i) {
      int w = info.ends[i][side];
      by_colour[bp->color[w]].push_back(sb.local[w]);
    }
    if (by_colour[0].size() != 2) throw GraphError("no bipartite pairing of the 4-cut ends");
    int p = sb.add_vertex();
    int q = sb.add_vertex();
    for (int w : by_colour[0]) sb.add_edge(w, p);
    for (int w : by_colour[1]) sb.add_edge(w, q);
    sb.add_edge(p, q);
    out.parts[side] = sb.build();
    out.new_edge[side] = out.parts[side].graph.edge_id(p, q);
  }
  return out;
}

std::vector<CubicGraph> join_4cut(const CubicGraph& g1, int e1, const CubicGraph& g2, int e2) {
  int p = g1.edge(e1).u, q = g1.edge(e1).v;
  int r = g2.edge(e2).u, s = g2.edge(e2).v;
  auto np = other_neighbors(g1, p, q), nq = other_neighbors(g1, q, p);
  auto nr = other_neighbors(g2, r, s), ns = other_neighbors(g2, s, r);
  // g1 minus p,q then g2 minus r,s, relabelled consecutively
  int n1 = g1.order(), n2 = g2.order();
  std::vector<int> map1(n1, -1), map2(n2, -1);
  int next = 0;
  for (int v = 0; v < n1; ++v) {
    if (v != p && v != q) map1[v] = next++;
  }
  for (int v = 0; v < n2; ++v) {
    if (v != r && v != s) map2[v] = next++;
  }
  std::vector<Edge> base;
  for (const Edge& e : g1.edges()) {
    if (map1[e.u] >= 0 && map1[e.v] >= 0) base.push_back({map1[e.u], map1[e.v]});
  }
  for (const Edge& e : g2.edges()) {
    if (map2[e.u] >= 0 && map2[e.v] >= 0) base.push_back({map2[e.u], map2[e.v]});
  }
  std::set<std::string> seen;
  std::vector<CubicGraph> out;
  for (int swap_ends = 0; swap_ends < 2; ++swap_ends) {
    auto first = swap_ends ? ns : nr, second = swap_ends ? nr : ns;
    for (int f1 = 0; f1 < 2; ++f1) {
      for (int f2 = 0; f2 < 2; ++f2) {
        std::vector<Edge> es = base;
        auto link = [&](int a, int b) { es.push_back({std::min(a, b), std::max(a, b)}); };
        link(map1[np[0]], map2[first[f1]]);
        link(map1[np[1]], map2[first[1 - f1]]);
        link(map1[nq[0]], map2[second[f2]]);
        link(map1[nq[1]], map2[second[1 - f2]]);
        auto g = CubicGraph::from_edges(next, es);
        if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

ForcedForbidden forced_forbidden(const CubicGraph& g) {
  HamSolver solver(g);
  int m = g.size();
  std::vector<char> used(m, 0), avoided(m, 0);
  auto mark = [&](const HamCycle& c) {
    std::vector<char> in(m, 0);
    for (int e : c.edges) in[e] = 1;
    for (int e = 0; e < m; ++e) (in[e] ? used : avoided)[e] = 1;
  };
  auto first = solver.solve({}, {});
  if (!first.cycle) throw GraphError("forced/forbidden edges need a hamiltonian graph");
  mark(*first.cycle);
  ForcedForbidden out;
  for (int e = 0; e < m; ++e) {
    if (!used[e]) {
      int yes[1] = {e};
      auto r = solver.solve(yes, {});
      if (r.cycle) {
        mark(*r.cycle);
      } else {
        out.forbidden.push_back(e);
      }
    }
    if (!avoided[e]) {
      int no[1] = {e};
      auto r = solver.solve({}, no);
      if (r.cycle) {
        mark(*r.cycle);
      } else {
        out.forced.push_back(e);
      }
    }
  }
  return out;
}

std::array<CubicGraph, 2> type2_auxiliary(const CubicGraph& g, int e) {
  int u = g.edge(e).u, v = g.edge(e).v;
  auto a = other_neighbors(g, u, v), b = other_neighbors(g, v, u);
  for (int x : a) {
    if (x == b[0] || x == b[1]) throw GraphError("edge lies on a triangle");
  }
  return {rewired(g, u, v, {a[0], b[0]}, {a[1], b[1]}), rewired(g, u, v, {a[0], b[1]}, {a[1], b[0]})};
}

namespace {

EdgeTypeReport classify_with(HamSolver& solver, const CubicGraph& g, int e, Type1Rule rule) {
  EdgeTypeReport r;
  int u = g.edge(e).u, v = g.edge(e).v;
  auto a = other_neighbors(g, u, v), b = other_neighbors(g, v, u);
  for (int x : a) {
    if (x == b[0] || x == b[1]) throw GraphError("edge lies on a triangle");
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      int yes[3] = {g.edge_id(a[i], u), e, g.edge_id(v, b[j])};
      if (solver.solve(yes, {}).status == SolveStatus::Found) ++r.covered_paths;
    }
  }
  r.type1 = r.covered_paths <= (rule == Type1Rule::AtMostTwoCovered ? 2 : 3);
  for (const auto& aux : type2_auxiliary(g, e)) {
    if (!is_hamiltonian(aux)) {
      r.type2 = true;
      break;
    }
  }
  return r;
}

}  // namespace

const char* type1_rule_name(Type1Rule r) {
  return r == Type1Rule::AtMostTwoCovered ? "at-most-two-paths-covered" : "some-path-uncovered";
}

EdgeTypeReport classify_edge(const CubicGraph& g, int e, Type1Rule rule) {
  if (e < 0 || e >= g.size()) throw std::invalid_argument("edge id out of range");
  HamSolver solver(g);
  return classify_with(solver, g, e, rule);
}

std::vector<EdgeTypeReport> classify_edges(const CubicGraph& g, Type1Rule rule) {
  HamSolver solver(g);
  std::vector<EdgeTypeReport> out;
  for (int e = 0; e < g.size(); ++e) out.push_back(classify_with(solver, g, e, rule));
  return out;
}

Split5 split_5cut(const CubicGraph& g, std::span<const int> cut) {
  CutInfo info = analyse_cut(g, cut, 5);
  Split5 out;
  for (int side = 0; side < 2; ++side) {
    SideBuilder sb(g, info.comp, side);
    CutSide cs = sb.build();
    out.pieces[side] = make_five_piece(cs.graph);
    out.from_parent[side] = cs.from_parent;
  }
  for (int i = 0; i < 5; ++i) {
    int a = info.ends[i][0], b = info.ends[i][1];
    if (out.from_parent[0][out.pieces[0].special] == a && out.from_parent[1][out.pieces[1].special] == b) {
      out.special_edge = cut[i];
    }
  }
  if (out.special_edge < 0) throw GraphError("special vertices are not adjacent across the cut");
  return out;
}

std::vector<CubicGraph> test_graphs(const FivePiece& p) {
  const CubicGraph& h = p.graph;
  int n = h.order();
  std::vector<CubicGraph> out;
  for (int omit = 0; omit < 4; ++omit) {
    std::vector<int> rest;
    for (int i = 0; i < 4; ++i) {
      if (i != omit) rest.push_back(p.others[i]);
    }
    for (int k = 0; k < 3; ++k) {
      std::vector<Edge> es = h.edges();
      int s = n, t = n + 1;
      es.push_back({p.special, s});
      es.push_back({rest[k], s});
      for (int j = 0; j < 3; ++j) {
        if (j != k) es.push_back({rest[j], t});
      }
      out.push_back(CubicGraph::from_edges(n + 2, es));
    }
  }
  return out;
}

PieceClass piece_class(const FivePiece& p) {
  int ham = 0, non = 0;
  for (const auto& t : test_graphs(p)) {
    if (is_hamiltonian(t)) {
      ++ham;
    } else {
      ++non;
    }
    if (ham && non) break;
  }
  PieceClass c;
  if (ham == 0) {
    c.cls = 0;
  } else if (non == 0) {
    c.cls = 2;
  } else {
    c.cls = 1;
    c.c1_minus_c2 = true;
  }
  return c;
}

CubicGraph join_pieces(const FivePiece& p1, const FivePiece& p2, std::array<int, 4> pairing) {
  std::array<int, 4> sorted = pairing;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{0, 1, 2, 3}) throw std::invalid_argument("pairing must be a permutation of 0..3");
  int n1 = p1.graph.order();
  std::vector<Edge> es = p1.graph.edges();
  for (const Edge& e : p2.graph.edges()) es.push_back({e.u + n1, e.v + n1});
  es.push_back({p1.special, p2.special + n1});
  for (int i = 0; i < 4; ++i) es.push_back({p1.others[i], p2.others[pairing[i]] + n1});
  auto g = CubicGraph::from_edges(n1 + p2.graph.order(), es);
  if (!try_bipartition(g)) throw GraphError("joined graph is not bipartite");
  return g;
}

std::vector<CubicGraph> join_all_pairings(const FivePiece& p1, const FivePiece& p2) {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::set<std::string> seen;
  std::vector<CubicGraph> out;
  do {
    auto g = join_pieces(p1, p2, perm);
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

HamPathMatrix hampath_matrix(const FivePiece& p) {
  HamPathMatrix m;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      bool ok = hamiltonian_path(p.graph, p.others[i], p.others[j]).has_value();
      m.joinable[i][j] = m.joinable[j][i] = ok;
    }
  }
  // split the four into {v1,v2} and {w1,w2}; every cross pair must be joinable
  for (int partner = 1; partner < 4; ++partner) {
    std::array<int, 4> lab{0, partner, 0, 0};
    int k = 2;
    for (int i = 1; i < 4; ++i) {
      if (i != partner) lab[k++] = i;
    }
    bool cross = m.joinable[lab[0]][lab[2]] && m.joinable[lab[0]][lab[3]] && m.joinable[lab[1]][lab[2]] &&
                 m.joinable[lab[1]][lab[3]];
    if (!cross) continue;
    // prefer v1,v2 to be the pair that cannot be joined
    if (m.joinable[lab[0]][lab[1]] && !m.joinable[lab[2]][lab[3]]) {
      std::swap(lab[0], lab[2]);
      std::swap(lab[1], lab[3]);
    }
    if (!m.labeling || !m.joinable[lab[0]][lab[1]]) m.labeling = lab;
  }
  return m;
}

CubicGraph plus_graph(const FivePiece& p, int v1, int v2, int w1, int w2) {
  std::array<int, 4> given{v1, v2, w1, w2};
  std::array<int, 4> sorted = given, others = p.others;
  std::sort(sorted.begin(), sorted.end());
  std::sort(others.begin(), others.end());
  if (sorted != others) throw std::invalid_argument("plus graph needs the four non-special degree-2 vertices");
  int n = p.graph.order();
  int x = n, y = n + 1, z = n + 2;
  std::vector<Edge> es = p.graph.edges();
  es.push_back({v1, x});
  es.push_back({v2, x});
  es.push_back({p.special, y});
  es.push_back({w1, z});
  es.push_back({w2, z});
  es.push_back({x, y});
  es.push_back({y, z});
  return CubicGraph::from_edges(n + 3, es);
}

}  // namespace cubham
