#include "cubham/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "cubham/formats.hpp"

namespace cubham {
namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

int uf_find(std::vector<int>& uf, int x) {
  while (uf[x] != x) {
    uf[x] = uf[uf[x]];
    x = uf[x];
  }
  return x;
}

void uf_union(std::vector<int>& uf, int a, int b) {
  a = uf_find(uf, a);
  b = uf_find(uf, b);
  if (a == b) return;
  if (a < b) {
    uf[b] = a;
  } else {
    uf[a] = b;
  }
}

}  // namespace

std::uint64_t Canonizer::refine(Partition& p, int first_splitter) {
  std::uint64_t h = 0x12345;
  queue_.clear();
  if (first_splitter >= 0) {
    queue_.push_back(first_splitter);
    in_queue_[first_splitter] = 1;
  } else {
    for (int s = 0; s < n_; s = p.end[s]) {
      queue_.push_back(s);
      in_queue_[s] = 1;
    }
  }
  std::size_t head = 0;
  while (head < queue_.size() && p.cells < n_) {
    int w = queue_[head++];
    in_queue_[w] = 0;
    int wend = p.end[w];
    touched_.clear();
    for (int i = w; i < wend; ++i) {
      int x = p.lab[i];
      for (int k = off_[x]; k < off_[x + 1]; ++k) {
        int u = tgt_[k];
        if (count_[u]++ == 0) touched_.push_back(u);
      }
    }
    touched_cells_.clear();
    for (int u : touched_) {
      int c = p.cell[u];
      if (!cell_touched_[c]) {
        cell_touched_[c] = 1;
        touched_cells_.push_back(c);
      }
    }
    std::sort(touched_cells_.begin(), touched_cells_.end());
    h = mix(h, static_cast<std::uint64_t>(w) << 20 | touched_cells_.size());
    for (int c : touched_cells_) {
      cell_touched_[c] = 0;
      int e = p.end[c];
      if (e - c == 1) {
        h = mix(h, static_cast<std::uint64_t>(c) << 16 | count_[p.lab[c]]);
        continue;
      }
      auto first = p.lab.begin() + c, last = p.lab.begin() + e;
      auto [lo, hi] = std::minmax_element(first, last, [&](int a, int b) { return count_[a] < count_[b]; });
      if (count_[*lo] == count_[*hi]) {
        h = mix(h, static_cast<std::uint64_t>(c) << 16 | count_[p.lab[c]]);
        continue;
      }
      std::sort(first, last, [&](int a, int b) { return count_[a] < count_[b]; });
      bool was_queued = in_queue_[c];
      int largest = c, largest_size = 0;
      int fs = c;
      while (fs < e) {
        int val = count_[p.lab[fs]];
        int fe = fs + 1;
        while (fe < e && count_[p.lab[fe]] == val) ++fe;
        p.end[fs] = fe;
        for (int i = fs; i < fe; ++i) {
          p.cell[p.lab[i]] = fs;
          p.pos[p.lab[i]] = i;
        }
        if (fs != c) ++p.cells;
        h = mix(h, static_cast<std::uint64_t>(fs) << 32 | static_cast<std::uint64_t>(fe - fs) << 8 | val);
        if (fe - fs > largest_size) {
          largest_size = fe - fs;
          largest = fs;
        }
        fs = fe;
      }
      for (fs = c; fs < e; fs = p.end[fs]) {
        if (was_queued ? fs != c : fs != largest) {
          if (!in_queue_[fs]) {
            in_queue_[fs] = 1;
            queue_.push_back(fs);
          }
        }
      }
    }
    for (int u : touched_) count_[u] = 0;
  }
  for (; head < queue_.size(); ++head) in_queue_[queue_[head]] = 0;
  return mix(h, static_cast<std::uint64_t>(p.cells));
}

void Canonizer::individualize(Partition& p, int v, int& new_cell) {
  int c = p.cell[v];
  int i = p.pos[v];
  int other = p.lab[c];
  std::swap(p.lab[c], p.lab[i]);
  p.pos[other] = i;
  p.pos[v] = c;
  int e = p.end[c];
  p.end[c] = c + 1;
  p.end[c + 1] = e;
  for (int k = c + 1; k < e; ++k) p.cell[p.lab[k]] = c + 1;
  ++p.cells;
  new_cell = c;
}

void Canonizer::certificate(const Partition& p, std::vector<int>& out) const {
  out.clear();
  for (int i = 0; i < n_; ++i) {
    int v = p.lab[i];
    int start = static_cast<int>(out.size());
    out.push_back(off_[v + 1] - off_[v]);
    for (int k = off_[v]; k < off_[v + 1]; ++k) out.push_back(p.pos[tgt_[k]]);
    std::sort(out.begin() + start + 1, out.end());
  }
}

bool Canonizer::fixes_prefix(const std::vector<int>& gen, int depth) const {
  for (int d = 0; d < depth; ++d) {
    if (gen[path_[d]] != path_[d]) return false;
  }
  return true;
}

void Canonizer::add_generator(const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<int> gamma(n_);
  bool identity = true;
  for (int i = 0; i < n_; ++i) {
    gamma[from[i]] = to[i];
    if (from[i] != to[i]) identity = false;
  }
  if (!identity) result_.generators.push_back(std::move(gamma));
}

void Canonizer::leaf(int depth) {
  ++leaves_;
  const Partition& p = levels_[depth];
  certificate(p, cert_);
  if (!have_first_) {
    have_first_ = true;
    first_depth_ = best_depth_ = depth;
    first_trace_.assign(trace_.begin(), trace_.begin() + depth + 1);
    best_trace_ = first_trace_;
    first_path_.assign(path_.begin(), path_.begin() + depth);
    best_path_ = first_path_;
    first_lab_ = p.lab;
    best_lab_ = p.lab;
    first_cert_ = cert_;
    best_cert_ = cert_;
    return;
  }
  auto gca = [&](const std::vector<int>& other) {
    int k = 0;
    while (k < depth && k < static_cast<int>(other.size()) && path_[k] == other[k]) ++k;
    return k;
  };
  if (eq_first_[depth] && depth == first_depth_ && cert_ == first_cert_) {
    add_generator(first_lab_, p.lab);
    backjump_ = gca(first_path_);
    return;
  }
  Cmp c = cmp_best_[depth];
  if (c == Cmp::Equal && depth < best_depth_) c = Cmp::Less;
  if (c == Cmp::Equal) {
    if (cert_ < best_cert_) {
      c = Cmp::Less;
    } else if (best_cert_ < cert_) {
      c = Cmp::Greater;
    }
  }
  if (c == Cmp::Greater) {
    best_depth_ = depth;
    best_trace_.assign(trace_.begin(), trace_.begin() + depth + 1);
    best_path_.assign(path_.begin(), path_.begin() + depth);
    best_lab_ = p.lab;
    best_cert_ = cert_;
    // ancestors now lie on the best path
    std::fill(cmp_best_.begin(), cmp_best_.begin() + depth + 1, Cmp::Equal);
  } else if (c == Cmp::Equal) {
    add_generator(best_lab_, p.lab);
    backjump_ = gca(best_path_);
  }
}

void Canonizer::search(int depth) {
  Partition& p = levels_[depth];
  if (p.cells == n_) {
    leaf(depth);
    return;
  }
  // first smallest non-singleton cell
  int target = -1, tsize = n_ + 1;
  for (int s = 0; s < n_; s = p.end[s]) {
    int sz = p.end[s] - s;
    if (sz > 1 && sz < tsize) {
      tsize = sz;
      target = s;
      if (sz == 2) break;
    }
  }
  std::vector<int> cands(p.lab.begin() + target, p.lab.begin() + p.end[target]);
  std::sort(cands.begin(), cands.end());
  std::vector<int> explored;
  std::size_t gens_seen = SIZE_MAX;
  for (int x : cands) {
    if (!explored.empty()) {
      if (gens_seen != result_.generators.size()) {
        // orbits of the pointwise stabiliser of the current prefix
        std::iota(uf_.begin(), uf_.end(), 0);
        for (const auto& gen : result_.generators) {
          if (!fixes_prefix(gen, depth)) continue;
          for (int v = 0; v < n_; ++v) uf_union(uf_, v, gen[v]);
        }
        gens_seen = result_.generators.size();
      }
      int rx = uf_find(uf_, x);
      bool dup = std::any_of(explored.begin(), explored.end(), [&](int y) { return uf_find(uf_, y) == rx; });
      if (dup) continue;
    }
    explored.push_back(x);
    Partition& child = levels_[depth + 1];
    child = levels_[depth];
    int cell = 0;
    individualize(child, x, cell);
    std::uint64_t t = refine(child, cell);
    path_[depth] = x;
    trace_[depth + 1] = t;
    eq_first_[depth + 1] = eq_first_[depth] && depth + 1 <= first_depth_ && first_trace_[depth + 1] == t;
    if (!have_first_) eq_first_[depth + 1] = 1;
    Cmp c = cmp_best_[depth];
    if (have_first_ && c == Cmp::Equal) {
      if (depth + 1 > best_depth_) {
        c = Cmp::Greater;
      } else if (t < best_trace_[depth + 1]) {
        c = Cmp::Less;
      } else if (t > best_trace_[depth + 1]) {
        c = Cmp::Greater;
      }
    }
    cmp_best_[depth + 1] = c;
    if (have_first_ && !eq_first_[depth + 1] && c == Cmp::Less) continue;
    search(depth + 1);
    if (backjump_ >= 0) {
      if (backjump_ < depth) return;
      backjump_ = -1;
    }
    gens_seen = SIZE_MAX;  // uf_ was reused below
  }
}

const CanonResult& Canonizer::run(int n, std::span<const int> offsets, std::span<const int> targets,
                                  std::span<const int> colors) {
  n_ = n;
  off_ = offsets;
  tgt_ = targets;
  leaves_ = 0;
  result_.generators.clear();
  result_.labeling.clear();
  result_.orbits.clear();
  have_first_ = false;
  backjump_ = -1;
  if (n == 0) return result_;
  if (static_cast<int>(levels_.size()) < n + 1) levels_.resize(n + 1);
  trace_.assign(n + 1, 0);
  path_.assign(n + 1, -1);
  eq_first_.assign(n + 1, 1);
  cmp_best_.assign(n + 1, Cmp::Equal);
  count_.assign(n, 0);
  in_queue_.assign(n, 0);
  cell_touched_.assign(n, 0);
  uf_.resize(n);

  Partition& root = levels_[0];
  root.lab.resize(n);
  root.pos.resize(n);
  root.cell.resize(n);
  root.end.assign(n, 0);
  std::iota(root.lab.begin(), root.lab.end(), 0);
  std::stable_sort(root.lab.begin(), root.lab.end(), [&](int a, int b) { return colors[a] < colors[b]; });
  root.cells = 0;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colors[root.lab[j]] == colors[root.lab[i]]) ++j;
    root.end[i] = j;
    for (int k = i; k < j; ++k) {
      root.cell[root.lab[k]] = i;
      root.pos[root.lab[k]] = k;
    }
    ++root.cells;
    i = j;
  }
  trace_[0] = refine(root, -1);
  search(0);

  result_.labeling = best_lab_;
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  for (const auto& gen : result_.generators) {
    for (int v = 0; v < n; ++v) uf_union(uf, v, gen[v]);
  }
  result_.orbits.resize(n);
  for (int v = 0; v < n; ++v) result_.orbits[v] = uf_find(uf, v);
  return result_;
}

namespace {

void to_csr(const CubicGraph& g, std::vector<int>& off, std::vector<int>& tgt) {
  off.assign(g.order() + 1, 0);
  tgt.clear();
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.neighbors(v)) tgt.push_back(w);
    off[v + 1] = static_cast<int>(tgt.size());
  }
}

std::string form_from_labeling(const CubicGraph& g, const std::vector<int>& lab) {
  std::vector<int> inv(g.order());
  for (int i = 0; i < g.order(); ++i) inv[lab[i]] = i;
  std::vector<Edge> es;
  es.reserve(g.size());
  for (const Edge& e : g.edges()) es.push_back({inv[e.u], inv[e.v]});
  return encode_graph6(g.order(), es);
}

}  // namespace

CanonResult canonical_labeling(const CubicGraph& g, std::span<const int> colors) {
  std::vector<int> off, tgt;
  to_csr(g, off, tgt);
  Canonizer c;
  return c.run(g.order(), off, tgt, colors);
}

CanonResult canonical_labeling(const CubicGraph& g) {
  std::vector<int> colors(g.order());
  for (int v = 0; v < g.order(); ++v) colors[v] = g.degree(v);
  return canonical_labeling(g, colors);
}

std::string canonical_form(const CubicGraph& g) { return form_from_labeling(g, canonical_labeling(g).labeling); }

std::string canonical_form(const CubicGraph& g, std::span<const int> colors) {
  std::vector<int> full(colors.begin(), colors.end());
  for (int v = 0; v < g.order(); ++v) full[v] = full[v] * 4 + g.degree(v);
  auto r = canonical_labeling(g, full);
  std::string s = form_from_labeling(g, r.labeling);
  s.push_back(' ');
  for (int v : r.labeling) {
    s += std::to_string(colors[v]);
    s.push_back(',');
  }
  return s;
}

}  // namespace cubham
