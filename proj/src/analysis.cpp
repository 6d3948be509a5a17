#include "cubham/analysis.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace cubham {

std::variant<Bipartition, NotBipartite> bipartition(const CubicGraph& g) {
  int n = g.order();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push(w);
        } else if (color[w] == color[v]) {
          // climb to the common ancestor
          std::vector<int> a{v}, b{w};
          int x = v, y = w;
          while (depth[x] > depth[y]) a.push_back(x = parent[x]);
          while (depth[y] > depth[x]) b.push_back(y = parent[y]);
          while (x != y) {
            a.push_back(x = parent[x]);
            b.push_back(y = parent[y]);
          }
          b.pop_back();
          std::reverse(b.begin(), b.end());
          a.insert(a.end(), b.begin(), b.end());
          return NotBipartite{a};
        }
      }
    }
  }
  Bipartition bp;
  bp.color.assign(color.begin(), color.end());
  return bp;
}

std::optional<Bipartition> try_bipartition(const CubicGraph& g) {
  auto r = bipartition(g);
  if (auto* b = std::get_if<Bipartition>(&r)) return *b;
  return std::nullopt;
}

ParityReport degree2_parity(const CubicGraph& g, const Bipartition& b) {
  ParityReport r;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    (b.color[v] ? r.n21 : r.n20)++;
  }
  r.consistent = (r.n20 - r.n21) % 3 == 0;
  return r;
}

std::vector<int> distances_from(const CubicGraph& g, int src) {
  std::vector<int> d(g.order(), -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
    }
  }
  return d;
}

int girth(const CubicGraph& g) {
  int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> d(n), par(n);
  std::vector<int> q(n);
  for (int s = 0; s < n; ++s) {
    std::fill(d.begin(), d.end(), -1);
    d[s] = 0;
    par[s] = -1;
    int head = 0, tail = 0;
    q[tail++] = s;
    while (head < tail) {
      int v = q[head++];
      if (2 * d[v] + 1 >= best) break;
      for (int w : g.neighbors(v)) {
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          par[w] = v;
          q[tail++] = w;
        } else if (w != par[v]) {
          best = std::min(best, d[v] + d[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

bool is_connected(const CubicGraph& g) {
  if (g.order() == 0) return true;
  auto d = distances_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

namespace {

// True when g minus `skip` is connected and has no articulation point.
bool biconnected_without(const CubicGraph& g, int skip) {
  int n = g.order();
  int root = skip == 0 ? 1 : 0;
  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    int v, parent, idx;
  };
  std::vector<Frame> st;
  int timer = 0, root_children = 0;
  disc[root] = low[root] = timer++;
  st.push_back({root, -1, 0});
  while (!st.empty()) {
    Frame& f = st.back();
    auto nb = g.neighbors(f.v);
    if (f.idx < static_cast<int>(nb.size())) {
      int w = nb[f.idx++];
      if (w == skip || w == f.parent) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        if (f.v == root) ++root_children;
        st.push_back({w, f.v, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      int v = f.v, p = f.parent;
      st.pop_back();
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) return false;
      }
    }
  }
  if (root_children > 1) return false;
  return timer == n - (skip >= 0 ? 1 : 0);
}

}  // namespace

bool is_3_connected(const CubicGraph& g) {
  if (g.order() < 4) return false;
  if (!biconnected_without(g, -1)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!biconnected_without(g, v)) return false;
  }
  return true;
}

std::vector<int> components_without(const CubicGraph& g, const std::vector<int>& removed, int& count) {
  int n = g.order();
  std::vector<char> gone(g.size(), 0);
  for (int e : removed) gone[e] = 1;
  std::vector<int> comp(n, -1), stack;
  count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      auto nb = g.neighbors(v);
      auto inc = g.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (gone[inc[i]] || comp[nb[i]] >= 0) continue;
        comp[nb[i]] = count;
        stack.push_back(nb[i]);
      }
    }
    ++count;
  }
  return comp;
}

namespace {

// Does the vertex set {v : comp[v] == c} with the cut edges removed contain a cycle?
bool side_has_cycle(const CubicGraph& g, const std::vector<int>& comp, int c, const std::vector<char>& gone) {
  long vertices = 0, edges = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (comp[v] == c) ++vertices;
  }
  for (int e = 0; e < g.size(); ++e) {
    if (!gone[e] && comp[g.edge(e).u] == c) ++edges;
  }
  // the side is connected, so it is a tree iff edges == vertices - 1
  return edges >= vertices;
}

class UnitFlow {
 public:
  explicit UnitFlow(const CubicGraph& g) : g_(g), flow_(g.size()), prev_(g.order()), group_(g.order()) {}

  // Max flow between two disjoint vertex sets, capped at `limit`.
  int run(const std::vector<int>& a, const std::vector<int>& b, int limit) {
    std::fill(group_.begin(), group_.end(), 0);
    for (int v : a) group_[v] = 1;
    for (int v : b) group_[v] = 2;
    std::fill(flow_.begin(), flow_.end(), 0);
    int value = 0;
    std::vector<int> q;
    while (value < limit) {
      std::fill(prev_.begin(), prev_.end(), -2);
      q.clear();
      for (int v : a) {
        prev_[v] = -1;
        q.push_back(v);
      }
      int reached = -1;
      for (std::size_t h = 0; h < q.size() && reached < 0; ++h) {
        int v = q[h];
        auto nb = g_.neighbors(v);
        auto inc = g_.incident_edges(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          int w = nb[i], e = inc[i];
          if (prev_[w] != -2) continue;
          if (group_[v] == 1 && group_[w] == 1) continue;
          int dir = g_.edge(e).u == v ? 1 : -1;
          if (flow_[e] * dir >= 1) continue;
          prev_[w] = e;
          if (group_[w] == 2) {
            reached = w;
            break;
          }
          q.push_back(w);
        }
      }
      if (reached < 0) break;
      for (int w = reached; prev_[w] >= 0;) {
        int e = prev_[w];
        int v = g_.other_end(e, w);
        flow_[e] += g_.edge(e).u == v ? 1 : -1;
        w = v;
      }
      ++value;
    }
    return value;
  }

 private:
  const CubicGraph& g_;
  std::vector<int> flow_, prev_, group_;
};

// Connected vertex sets of the given size that contain a closed neighbourhood.
std::vector<std::vector<int>> seed_sets(const CubicGraph& g, int size) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> frontier;
  for (int u = 0; u < g.order(); ++u) {
    std::vector<int> s{u};
    for (int w : g.neighbors(u)) s.push_back(w);
    std::sort(s.begin(), s.end());
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& s : frontier) {
      if (static_cast<int>(s.size()) >= size) {
        if (seen.insert(s).second) out.push_back(s);
        continue;
      }
      for (int v : s) {
        for (int w : g.neighbors(v)) {
          if (std::binary_search(s.begin(), s.end(), w)) continue;
          auto t = s;
          t.insert(std::upper_bound(t.begin(), t.end(), w), w);
          if (seen.insert(t).second) next.push_back(t);
        }
      }
    }
    for (auto& t : next) seen.erase(t);
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

std::optional<int> cyclic_connectivity(const CubicGraph& g) {
  if (g.order() < 8) throw GraphError("cyclic connectivity needs at least 8 vertices");
  if (!g.is_cubic()) throw GraphError("cyclic connectivity needs a cubic graph");
  if (!is_connected(g)) throw GraphError("cyclic connectivity needs a connected graph");
  int gth = girth(g);
  // With at least 8 vertices the complement of a shortest cycle still has a
  // cycle, so the girth is an upper bound realised by a cyclic cut.
  int best = gth;
  int seed_size = std::max(4, gth - 2);
  auto seeds = seed_sets(g, seed_size);
  UnitFlow flow(g);
  std::vector<char> mark(g.order());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    std::fill(mark.begin(), mark.end(), 0);
    for (int v : seeds[i]) mark[v] = 1;
    for (std::size_t j = i + 1; j < seeds.size(); ++j) {
      bool disjoint = std::none_of(seeds[j].begin(), seeds[j].end(), [&](int v) { return mark[v]; });
      if (!disjoint) continue;
      int f = flow.run(seeds[i], seeds[j], best);
      best = std::min(best, f);
    }
  }
  return best;
}

std::vector<EdgeCut> find_cyclic_cuts(const CubicGraph& g, int k) {
  std::vector<EdgeCut> out;
  int m = g.size(), n = g.order();
  if (k <= 0 || k > m) return out;
  std::vector<int> chosen;
  std::vector<char> used(n, 0), gone(m, 0);

  // bridges of g minus the chosen edges, if that graph is connected
  std::vector<int> disc(n), low(n);
  auto bridges = [&](std::vector<int>& br) -> bool {
    br.clear();
    std::fill(disc.begin(), disc.end(), -1);
    int timer = 0;
    struct Frame {
      int v, pedge, idx;
    };
    std::vector<Frame> st{{0, -1, 0}};
    disc[0] = low[0] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      auto nb = g.neighbors(f.v);
      auto inc = g.incident_edges(f.v);
      if (f.idx < static_cast<int>(nb.size())) {
        int i = f.idx++;
        int w = nb[i], e = inc[i];
        if (gone[e] || e == f.pedge) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          st.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v, pe = f.pedge;
        st.pop_back();
        if (!st.empty()) {
          int p = st.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) br.push_back(pe);
        }
      }
    }
    return timer == n;
  };

  std::vector<int> br;
  auto finish = [&]() {
    if (!bridges(br)) return;
    int last = chosen.empty() ? -1 : chosen.back();
    for (int e : br) {
      if (e <= last) continue;
      const Edge& ed = g.edge(e);
      if (used[ed.u] || used[ed.v]) continue;
      std::vector<int> cut = chosen;
      cut.push_back(e);
      gone[e] = 1;
      int count = 0;
      auto comp = components_without(g, cut, count);
      bool crossing = std::all_of(cut.begin(), cut.end(), [&](int x) { return comp[g.edge(x).u] != comp[g.edge(x).v]; });
      if (count == 2 && crossing && side_has_cycle(g, comp, 0, gone) && side_has_cycle(g, comp, 1, gone)) {
        EdgeCut c;
        c.edges = cut;
        for (int v = 0; v < n; ++v) (comp[v] == comp[0] ? c.side_a : c.side_b).push_back(v);
        out.push_back(std::move(c));
      }
      gone[e] = 0;
    }
  };

  auto rec = [&](auto& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == k - 1) {
      finish();
      return;
    }
    for (int e = start; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (used[ed.u] || used[ed.v]) continue;
      used[ed.u] = used[ed.v] = 1;
      gone[e] = 1;
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
      gone[e] = 0;
      used[ed.u] = used[ed.v] = 0;
    }
  };
  if (n > 0) rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) { return a.edges < b.edges; });
  return out;
}

}  // namespace cubham
