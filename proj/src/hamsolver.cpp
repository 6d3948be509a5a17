#include "cubham/hamsolver.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubham {

HamSolver::HamSolver(int n, std::span<const Edge> edges) : n_(n), m_(static_cast<int>(edges.size())) {
  nbr_.assign(n, {-1, -1, -1});
  inc_.assign(n, {-1, -1, -1});
  deg_.assign(n, 0);
  edges_.assign(edges.begin(), edges.end());
  for (int e = 0; e < m_; ++e) {
    int u = edges_[e].u, v = edges_[e].v;
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw GraphError("bad edge for solver");
    if (deg_[u] == 3 || deg_[v] == 3) throw GraphError("solver needs maximum degree 3");
    nbr_[u][deg_[u]] = v;
    inc_[u][deg_[u]++] = e;
    nbr_[v][deg_[v]] = u;
    inc_[v][deg_[v]++] = e;
  }
  label_.assign(m_, kUndec);
  yes_.assign(n, 0);
  no_.assign(n, 0);
  end_.assign(n, 0);
  len_.assign(n, 1);
}

HamSolver::HamSolver(const CubicGraph& g) : HamSolver(g.order(), g.edges()) {}

void HamSolver::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    *trail_.back().cell = trail_.back().old;
    trail_.pop_back();
  }
}

bool HamSolver::set_edge(int e, int val) {
  if (label_[e] == val) return true;
  if (label_[e] != kUndec) return false;
  save(label_[e]);
  label_[e] = val;
  int u = edges_[e].u, v = edges_[e].v;
  if (val == kNo) {
    save(no_[u]);
    ++no_[u];
    save(no_[v]);
    ++no_[v];
    queue_.push_back(u);
    queue_.push_back(v);
    return true;
  }
  if (yes_[u] >= 2 || yes_[v] >= 2) return false;
  save(yes_[u]);
  ++yes_[u];
  save(yes_[v]);
  ++yes_[v];
  queue_.push_back(u);
  queue_.push_back(v);
  int a = end_[u], b = end_[v];
  if (a == v) {
    if (len_[u] == n_) {
      found_ = true;
      return true;
    }
    return false;
  }
  int total = len_[u] + len_[v];
  save(end_[a]);
  end_[a] = b;
  save(end_[b]);
  end_[b] = a;
  save(len_[a]);
  len_[a] = total;
  save(len_[b]);
  len_[b] = total;
  int ab = -1;
  for (int i = 0; i < deg_[a]; ++i) {
    if (nbr_[a][i] == b && inc_[a][i] != e) ab = inc_[a][i];
  }
  if (total == n_) {
    // hamiltonian path: only the closing edge can finish it
    if (ab < 0) return false;
    return set_edge(ab, kYes);
  }
  if (ab >= 0 && !set_edge(ab, kNo)) return false;
  // a vertex outside the path seeing both ends must use its third edge
  for (int i = 0; i < deg_[a]; ++i) {
    int w = nbr_[a][i];
    if (w == b || yes_[w] >= 2 || deg_[w] != 3) continue;
    bool sees_b = false;
    for (int j = 0; j < 3; ++j) sees_b |= nbr_[w][j] == b;
    if (!sees_b) continue;
    for (int j = 0; j < 3; ++j) {
      int z = nbr_[w][j];
      if (z == a || z == b || yes_[z] >= 2) continue;
      if (label_[inc_[w][j]] == kUndec) {
        if (!set_edge(inc_[w][j], kYes)) return false;
        if (found_) return true;
      }
    }
  }
  return true;
}

bool HamSolver::check_vertex(int v) {
  int d = deg_[v];
  if (d - no_[v] < 2) return false;
  if (yes_[v] == 2) {
    for (int i = 0; i < d; ++i) {
      if (label_[inc_[v][i]] == kUndec && !set_edge(inc_[v][i], kNo)) return false;
    }
  } else if (d - no_[v] == 2) {
    for (int i = 0; i < d; ++i) {
      if (label_[inc_[v][i]] == kUndec) {
        if (!set_edge(inc_[v][i], kYes)) return false;
        if (found_) return true;
      }
    }
  }
  return true;
}

bool HamSolver::propagate() {
  while (!queue_.empty()) {
    int v = queue_.back();
    queue_.pop_back();
    if (!check_vertex(v)) {
      queue_.clear();
      return false;
    }
    if (found_) {
      queue_.clear();
      return true;
    }
  }
  return true;
}

bool HamSolver::start(std::span<const int> yes, std::span<const int> no) {
  std::fill(label_.begin(), label_.end(), kUndec);
  std::fill(yes_.begin(), yes_.end(), 0);
  std::fill(no_.begin(), no_.end(), 0);
  std::fill(len_.begin(), len_.end(), 1);
  for (int v = 0; v < n_; ++v) end_[v] = v;
  trail_.clear();
  queue_.clear();
  found_ = false;
  aborted_ = false;
  nodes_ = 0;
  count_ = 0;
  first_.reset();
  if (n_ < 3) return false;
  for (int e : yes) {
    if (!set_edge(e, kYes)) return false;
    if (found_) break;
  }
  for (int e : no) {
    if (found_) break;
    if (!set_edge(e, kNo)) return false;
  }
  if (found_) {
    // the cycle may close before every constraint was applied
    for (int e : yes) {
      if (label_[e] != kYes) return false;
    }
    for (int e : no) {
      if (label_[e] == kYes) return false;
    }
    return true;
  }
  for (int v = 0; v < n_; ++v) queue_.push_back(v);
  return propagate();
}

HamCycle HamSolver::extract() const {
  HamCycle c;
  std::vector<std::array<int, 2>> next(n_, {-1, -1});
  for (int e = 0; e < m_; ++e) {
    if (label_[e] != kYes) continue;
    c.edges.push_back(e);
    for (int end = 0; end < 2; ++end) {
      int a = end ? edges_[e].v : edges_[e].u;
      int b = end ? edges_[e].u : edges_[e].v;
      next[a][next[a][0] < 0 ? 0 : 1] = b;
    }
  }
  int prev = -1, cur = 0;
  for (int i = 0; i < n_; ++i) {
    c.order.push_back(cur);
    int nx = next[cur][0] != prev ? next[cur][0] : next[cur][1];
    prev = cur;
    cur = nx;
  }
  return c;
}

bool HamSolver::dfs() {
  ++nodes_;
  if (limit_ && nodes_ > limit_) {
    aborted_ = true;
    return true;
  }
  std::array<int, 3> options{};
  int count = 0;
  for (int v = 0; v < n_ && count == 0; ++v) {
    if (yes_[v] != 1 || deg_[v] != 3) continue;
    for (int i = 0; i < 3; ++i) {
      if (label_[inc_[v][i]] == kUndec) options[count++] = inc_[v][i];
    }
  }
  if (count == 0) {
    for (int v = 0; v < n_ && count == 0; ++v) {
      if (yes_[v] != 0 || no_[v] != 0 || deg_[v] != 3) continue;
      for (int i = 0; i < 3; ++i) options[count++] = inc_[v][i];
    }
  }
  for (int k = 0; k < count; ++k) {
    std::size_t mark = trail_.size();
    queue_.clear();
    if (set_edge(options[k], kNo) && propagate()) {
      if (found_) {
        if (!enumerating_) {
          first_ = extract();
          return true;
        }
        ++count_;
        if (visit_ && !(*visit_)(extract())) return true;
      } else if (dfs()) {
        return true;
      }
    }
    undo(mark);
    found_ = false;
  }
  return false;
}

SolveResult HamSolver::solve(std::span<const int> yes, std::span<const int> no, SolveOptions opts) {
  for (int e : yes) {
    if (e < 0 || e >= m_) throw std::invalid_argument("edge id out of range");
    if (std::find(no.begin(), no.end(), e) != no.end()) throw std::invalid_argument("edge both forced and forbidden");
  }
  for (int e : no) {
    if (e < 0 || e >= m_) throw std::invalid_argument("edge id out of range");
  }
  enumerating_ = false;
  visit_ = nullptr;
  limit_ = opts.node_limit;
  SolveResult r;
  if (start(yes, no)) {
    if (found_) {
      first_ = extract();
    } else {
      dfs();
    }
  }
  r.nodes = nodes_;
  if (first_) {
    r.status = SolveStatus::Found;
    r.cycle = std::move(first_);
  } else {
    r.status = aborted_ ? SolveStatus::Undecided : SolveStatus::None;
  }
  return r;
}

std::uint64_t HamSolver::enumerate(std::span<const int> yes, std::span<const int> no,
                                   const std::function<bool(const HamCycle&)>& visit, SolveOptions opts) {
  enumerating_ = true;
  visit_ = &visit;
  limit_ = opts.node_limit;
  if (start(yes, no)) {
    if (found_) {
      ++count_;
      visit(extract());
    } else {
      dfs();
    }
  }
  enumerating_ = false;
  visit_ = nullptr;
  return count_;
}

SolveResult solve(const CubicGraph& g, std::span<const int> yes, std::span<const int> no, SolveOptions opts) {
  HamSolver s(g);
  return s.solve(yes, no, opts);
}

bool is_hamiltonian(const CubicGraph& g) { return solve(g).status == SolveStatus::Found; }

std::optional<HamCycle> find_hamiltonian_cycle(const CubicGraph& g) { return solve(g).cycle; }

std::optional<HamCycle> cycle_through_avoiding(const CubicGraph& g, int e1, int e2) {
  if (e1 == e2) throw std::invalid_argument("e1 and e2 must differ");
  int yes[1] = {e1}, no[1] = {e2};
  return solve(g, yes, no).cycle;
}

std::optional<std::vector<int>> hamiltonian_path(const CubicGraph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("path endpoints must differ");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw std::invalid_argument("vertex out of range");
  if (g.degree(u) > 2 || g.degree(v) > 2) throw std::invalid_argument("path endpoints need degree at most 2");
  std::vector<Edge> es = g.edges();
  int link = g.edge_id(u, v);
  if (link < 0) {
    link = static_cast<int>(es.size());
    es.push_back({std::min(u, v), std::max(u, v)});
  }
  HamSolver s(g.order(), es);
  int yes[1] = {link};
  auto r = s.solve(yes, {});
  if (!r.cycle) return std::nullopt;
  const auto& ord = r.cycle->order;
  int n = g.order();
  int iu = static_cast<int>(std::find(ord.begin(), ord.end(), u) - ord.begin());
  // walk away from v
  int step = ord[(iu + 1) % n] == v ? n - 1 : 1;
  std::vector<int> path;
  for (int i = 0; i < n; ++i) path.push_back(ord[(iu + i * step) % n]);
  return path;
}

std::vector<HamCycle> enumerate_hamiltonian_cycles(const CubicGraph& g, bool lift_guard) {
  if (g.order() > 32 && !lift_guard) throw std::invalid_argument("enumeration limited to 32 vertices");
  std::vector<HamCycle> out;
  HamSolver s(g);
  s.enumerate({}, {}, [&](const HamCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

bool validate_cycle(const CubicGraph& g, const HamCycle& c) {
  int n = g.order();
  if (n < 3 || static_cast<int>(c.order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : c.order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  std::vector<int> es;
  for (int i = 0; i < n; ++i) {
    int e = g.edge_id(c.order[i], c.order[(i + 1) % n]);
    if (e < 0) return false;
    es.push_back(e);
  }
  std::sort(es.begin(), es.end());
  std::vector<int> given = c.edges;
  std::sort(given.begin(), given.end());
  return es == given;
}

}  // namespace cubham
