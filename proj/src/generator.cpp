#include "cubham/generator.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "cubham/analysis.hpp"
#include "cubham/canon.hpp"

namespace cubham {
namespace {

using Mask = std::uint32_t;

inline int bit_of(Mask m) { return std::countr_zero(m); }

// Orbit representatives of subsets under a permutation group given by
// generators acting on bit positions.
class SubsetOrbits {
 public:
  void reset(const std::vector<std::vector<int>>* gens, int offset) {
    gens_ = gens;
    offset_ = offset;
    seen_.clear();
  }
  // True when mask is the first member of its orbit seen so far.
  bool first(Mask mask) {
    if (gens_ == nullptr || gens_->empty()) return true;
    if (seen_.count(mask)) return false;
    stack_.assign(1, mask);
    seen_.insert(mask);
    while (!stack_.empty()) {
      Mask cur = stack_.back();
      stack_.pop_back();
      for (const auto& g : *gens_) {
        Mask img = 0;
        for (Mask r = cur; r; r &= r - 1) img |= Mask{1} << (g[offset_ + bit_of(r)] - offset_);
        if (seen_.insert(img).second) stack_.push_back(img);
      }
    }
    return true;
  }

 private:
  const std::vector<std::vector<int>>* gens_ = nullptr;
  int offset_ = 0;
  std::unordered_set<Mask> seen_;
  std::vector<Mask> stack_;
};

// Adds rows (subsets of a fixed column class) one at a time.
class RowGenerator {
 public:
  struct Params {
    int rows = 0;
    int cols = 0;
    int last_row_degree = 3;
    int min_girth = 4;
    int shard = 0;
    int shards = 1;
  };

  RowGenerator(const Params& p, std::function<void(const std::vector<Mask>&)> emit)
      : p_(p), emit_(std::move(emit)) {
    rows_.assign(p.rows, 0);
    coldeg_.assign(p.cols, 0);
    gens_.resize(p.rows + 1);
    gens_valid_.assign(p.rows + 1, 0);
    orbits_.resize(p.rows + 1);
    split_level_ = std::max(1, p.rows / 2);
  }

  void run() {
    k_ = 0;
    split_counter_ = 0;
    expand();
  }

 private:
  int row_degree(int index) const { return index == p_.rows - 1 ? p_.last_row_degree : 3; }

  void build_csr(std::vector<int>& off, std::vector<int>& tgt, std::vector<int>& col) const {
    int k = k_, n = k + p_.cols;
    off.assign(n + 1, 0);
    tgt.clear();
    col.assign(n, 0);
    std::vector<std::vector<int>> colrows(p_.cols);
    for (int r = 0; r < k; ++r) {
      for (Mask m = rows_[r]; m; m &= m - 1) colrows[bit_of(m)].push_back(r);
    }
    for (int r = 0; r < k; ++r) {
      for (Mask m = rows_[r]; m; m &= m - 1) tgt.push_back(k + bit_of(m));
      off[r + 1] = static_cast<int>(tgt.size());
      col[r] = std::popcount(rows_[r]);
    }
    for (int c = 0; c < p_.cols; ++c) {
      for (int r : colrows[c]) tgt.push_back(r);
      off[k + c + 1] = static_cast<int>(tgt.size());
      col[k + c] = 8 + coldeg_[c];
    }
  }

  const CanonResult& label() {
    build_csr(off_, tgt_, colors_);
    return canon_.run(k_ + p_.cols, off_, tgt_, colors_);
  }

  std::uint64_t invariant(int r) const {
    std::uint64_t part1 = 0, part2 = 0;
    for (Mask m = rows_[r]; m; m &= m - 1) {
      int c = bit_of(m);
      part1 += std::uint64_t{1} << (2 * coldeg_[c]);
    }
    for (int s = 0; s < k_; ++s) {
      if (s == r) continue;
      int meet = std::popcount(rows_[r] & rows_[s]);
      if (meet == 0) continue;
      part2 += 64 * meet * meet;
      for (Mask m = rows_[s]; m; m &= m - 1) part2 += coldeg_[bit_of(m)];
    }
    return part1 << 24 | part2;
  }

  // Canonical deletion test for the most recently added row.
  bool accept() {
    int last = k_ - 1;
    if (p_.last_row_degree != 3 && k_ == p_.rows) {
      gens_valid_[k_] = 0;
      return true;
    }
    std::uint64_t mine = invariant(last);
    int ties = 0;
    std::vector<int>& best = tie_rows_;
    best.clear();
    for (int r = 0; r < last; ++r) {
      std::uint64_t v = invariant(r);
      if (v > mine) return false;
      if (v == mine) best.push_back(r);
    }
    ties = static_cast<int>(best.size());
    if (ties == 0) {
      gens_valid_[k_] = 0;
      return true;
    }
    best.push_back(last);
    const CanonResult& cr = label();
    int chosen = -1, chosen_pos = -1;
    for (int pos = 0; pos < static_cast<int>(cr.labeling.size()); ++pos) {
      int v = cr.labeling[pos];
      if (v < k_ && std::find(best.begin(), best.end(), v) != best.end() && pos > chosen_pos) {
        chosen = v;
        chosen_pos = pos;
      }
    }
    bool ok = cr.orbits[chosen] == cr.orbits[last];
    if (ok) {
      gens_[k_] = cr.generators;
      gens_valid_[k_] = 1;
    }
    return ok;
  }

  bool feasible() const {
    int rem = p_.rows - k_;
    if (p_.last_row_degree == 3) {
      for (int c = 0; c < p_.cols; ++c) {
        if (3 - coldeg_[c] > rem) return false;
      }
      return true;
    }
    int short_cols = 0;
    for (int c = 0; c < p_.cols; ++c) {
      if (2 - coldeg_[c] > rem) return false;
      if (coldeg_[c] + rem < 3) ++short_cols;
    }
    return short_cols <= 4;
  }

  void emit_if_connected() {
    // rows and columns in one union-find
    int n = p_.rows + p_.cols;
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    int comps = n;
    for (int r = 0; r < p_.rows; ++r) {
      for (Mask m = rows_[r]; m; m &= m - 1) {
        int a = find(r), b = find(p_.rows + bit_of(m));
        if (a != b) {
          uf[a] = b;
          --comps;
        }
      }
    }
    if (comps == 1) emit_(rows_);
  }

  void expand() {
    if (k_ == p_.rows) {
      emit_if_connected();
      return;
    }
    if (!gens_valid_[k_]) {
      gens_[k_] = label().generators;
      gens_valid_[k_] = 1;
    }
    int deg = row_degree(k_);
    // columns joined to each column through one or two rows
    std::vector<Mask> d2(p_.cols, 0), d4(p_.cols, 0);
    if (p_.min_girth >= 6) {
      for (int r = 0; r < k_; ++r) {
        for (Mask m = rows_[r]; m; m &= m - 1) d2[bit_of(m)] |= rows_[r];
      }
      for (int c = 0; c < p_.cols; ++c) d2[c] &= ~(Mask{1} << c);
      if (p_.min_girth >= 8) {
        for (int c = 0; c < p_.cols; ++c) {
          for (Mask m = d2[c]; m; m &= m - 1) d4[c] |= d2[bit_of(m)];
          d4[c] &= ~(Mask{1} << c);
        }
      }
    }
    std::vector<int> avail;
    for (int c = 0; c < p_.cols; ++c) {
      if (coldeg_[c] < 3) avail.push_back(c);
    }
    auto ok_pair = [&](int a, int b) {
      Mask bb = Mask{1} << b;
      if (p_.min_girth >= 6 && (d2[a] & bb)) return false;
      if (p_.min_girth >= 8 && (d4[a] & bb)) return false;
      return true;
    };
    orbits_[k_].reset(&gens_[k_], k_);
    int na = static_cast<int>(avail.size());
    auto try_row = [&](Mask row) {
      if (!orbits_[k_].first(row)) return;
      rows_[k_] = row;
      for (Mask m = row; m; m &= m - 1) ++coldeg_[bit_of(m)];
      ++k_;
      if (feasible() && accept()) {
        bool go = true;
        if (k_ == split_level_ && p_.shards > 1) go = (split_counter_++ % p_.shards) == static_cast<std::uint64_t>(p_.shard);
        if (go) expand();
      }
      --k_;
      for (Mask m = row; m; m &= m - 1) --coldeg_[bit_of(m)];
      rows_[k_] = 0;
    };
    if (deg == 3) {
      for (int i = 0; i < na; ++i) {
        for (int j = i + 1; j < na; ++j) {
          if (!ok_pair(avail[i], avail[j])) continue;
          for (int l = j + 1; l < na; ++l) {
            if (!ok_pair(avail[i], avail[l]) || !ok_pair(avail[j], avail[l])) continue;
            try_row(Mask{1} << avail[i] | Mask{1} << avail[j] | Mask{1} << avail[l]);
          }
        }
      }
    } else {
      for (int i = 0; i < na; ++i) {
        for (int j = i + 1; j < na; ++j) {
          if (ok_pair(avail[i], avail[j])) try_row(Mask{1} << avail[i] | Mask{1} << avail[j]);
        }
      }
    }
  }

  Params p_;
  std::function<void(const std::vector<Mask>&)> emit_;
  std::vector<Mask> rows_;
  std::vector<int> coldeg_;
  int k_ = 0;
  int split_level_ = 1;
  std::uint64_t split_counter_ = 0;
  Canonizer canon_;
  std::vector<int> off_, tgt_, colors_, tie_rows_;
  std::vector<std::vector<std::vector<int>>> gens_;
  std::vector<char> gens_valid_;
  std::vector<SubsetOrbits> orbits_;
};

CubicGraph graph_from_rows(const std::vector<Mask>& rows, int cols) {
  int r = static_cast<int>(rows.size());
  std::vector<Edge> es;
  for (int i = 0; i < r; ++i) {
    for (Mask m = rows[i]; m; m &= m - 1) es.push_back({i, r + bit_of(m)});
  }
  return CubicGraph::from_edges(r + cols, es);
}

bool passes_connectivity(const CubicGraph& g, int k) {
  if (k <= 1) return true;
  if (k == 2) {
    // a cubic graph is 2-connected iff it is bridgeless
    for (int e = 0; e < g.size(); ++e) {
      int count = 0;
      components_without(g, {e}, count);
      if (count > 1) return false;
    }
    return true;
  }
  if (!is_3_connected(g)) return false;
  if (k == 3) return true;
  if (g.order() < 8) return false;
  auto cc = cyclic_connectivity(g);
  return cc && *cc >= k;
}

// Vertex-by-vertex augmentation for small general graphs.
class VertexGenerator {
 public:
  VertexGenerator(int n, int min_degree, std::function<void(const CubicGraph&)> emit)
      : n_(n), min_deg_(min_degree), emit_(std::move(emit)) {
    adj_.assign(n, 0);
    gens_.resize(n + 1);
    gens_valid_.assign(n + 1, 0);
    orbits_.resize(n + 1);
  }

  void run() {
    k_ = 0;
    expand();
  }

 private:
  int deg(int v) const { return std::popcount(adj_[v]); }

  const CanonResult& label() {
    off_.assign(k_ + 1, 0);
    tgt_.clear();
    colors_.assign(k_, 0);
    for (int v = 0; v < k_; ++v) {
      for (Mask m = adj_[v]; m; m &= m - 1) tgt_.push_back(bit_of(m));
      off_[v + 1] = static_cast<int>(tgt_.size());
      colors_[v] = deg(v);
    }
    return canon_.run(k_, off_, tgt_, colors_);
  }

  std::uint64_t invariant(int v) const {
    std::uint64_t s = 0;
    for (Mask m = adj_[v]; m; m &= m - 1) s += std::uint64_t{1} << (4 * deg(bit_of(m)));
    return static_cast<std::uint64_t>(3 - deg(v)) << 32 | s;
  }

  bool accept() {
    int last = k_ - 1;
    std::uint64_t mine = invariant(last);
    std::vector<int> best;
    for (int v = 0; v < last; ++v) {
      std::uint64_t x = invariant(v);
      if (x > mine) return false;
      if (x == mine) best.push_back(v);
    }
    if (best.empty()) {
      gens_valid_[k_] = 0;
      return true;
    }
    best.push_back(last);
    const CanonResult& cr = label();
    int chosen = -1;
    for (int v : cr.labeling) {
      if (std::find(best.begin(), best.end(), v) != best.end()) chosen = v;
    }
    bool ok = cr.orbits[chosen] == cr.orbits[last];
    if (ok) {
      gens_[k_] = cr.generators;
      gens_valid_[k_] = 1;
    }
    return ok;
  }

  bool feasible() const {
    int rem = n_ - k_;
    for (int v = 0; v < k_; ++v) {
      if (min_deg_ - deg(v) > rem) return false;
    }
    return true;
  }

  void expand() {
    if (k_ == n_) {
      for (int v = 0; v < n_; ++v) {
        if (deg(v) < min_deg_) return;
      }
      std::vector<Edge> es;
      for (int v = 0; v < n_; ++v) {
        for (Mask m = adj_[v]; m; m &= m - 1) {
          if (bit_of(m) > v) es.push_back({v, bit_of(m)});
        }
      }
      auto g = CubicGraph::from_edges(n_, es);
      if (is_connected(g)) emit_(g);
      return;
    }
    if (!gens_valid_[k_]) {
      gens_[k_] = k_ ? label().generators : std::vector<std::vector<int>>{};
      gens_valid_[k_] = 1;
    }
    std::vector<int> avail;
    for (int v = 0; v < k_; ++v) {
      if (deg(v) < 3) avail.push_back(v);
    }
    orbits_[k_].reset(&gens_[k_], 0);
    int na = static_cast<int>(avail.size());
    std::vector<Mask> cands;
    cands.push_back(0);
    for (int i = 0; i < na; ++i) {
      cands.push_back(Mask{1} << avail[i]);
      for (int j = i + 1; j < na; ++j) {
        cands.push_back(Mask{1} << avail[i] | Mask{1} << avail[j]);
        for (int l = j + 1; l < na; ++l) cands.push_back(Mask{1} << avail[i] | Mask{1} << avail[j] | Mask{1} << avail[l]);
      }
    }
    for (Mask s : cands) {
      if (!orbits_[k_].first(s)) continue;
      adj_[k_] = s;
      for (Mask m = s; m; m &= m - 1) adj_[bit_of(m)] |= Mask{1} << k_;
      ++k_;
      if (feasible() && accept()) expand();
      --k_;
      for (Mask m = s; m; m &= m - 1) adj_[bit_of(m)] &= ~(Mask{1} << k_);
      adj_[k_] = 0;
    }
  }

  int n_, min_deg_;
  std::function<void(const CubicGraph&)> emit_;
  std::vector<Mask> adj_;
  int k_ = 0;
  Canonizer canon_;
  std::vector<int> off_, tgt_, colors_;
  std::vector<std::vector<std::vector<int>>> gens_;
  std::vector<char> gens_valid_;
  std::vector<SubsetOrbits> orbits_;
};

}  // namespace

FivePiece make_five_piece(const CubicGraph& g) {
  auto bp = try_bipartition(g);
  if (!bp) throw GraphError("5-piece must be bipartite");
  if (!is_connected(g)) throw GraphError("5-piece must be connected");
  std::vector<int> twos[2];
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) twos[bp->color[v]].push_back(v);
  }
  if (twos[0].size() + twos[1].size() != 5) throw GraphError("5-piece needs exactly five vertices of degree 2");
  int minority = twos[0].size() == 1 ? 0 : twos[1].size() == 1 ? 1 : -1;
  if (minority < 0) throw GraphError("5-piece degree-2 vertices must split 1/4 between colours");
  int class_size = static_cast<int>(std::count(bp->color.begin(), bp->color.end(), minority));
  if (2 * class_size + 1 != g.order()) throw GraphError("special colour class must be the smaller one");
  if (girth(g) < 6) throw GraphError("5-piece must have girth at least 6");
  FivePiece p;
  p.graph = g;
  p.special = twos[minority][0];
  for (int i = 0; i < 4; ++i) p.others[i] = twos[1 - minority][i];
  return p;
}

std::uint64_t generate(const GenOptions& opts, const std::function<void(const CubicGraph&)>& emit) {
  if (opts.n % 2 || opts.n < 4 || opts.n > 32) throw std::invalid_argument("n must be even and in 4..32");
  if (opts.shards < 1 || opts.shard < 0 || opts.shard >= opts.shards) throw std::invalid_argument("bad shard");
  std::uint64_t count = 0;
  if (!opts.bipartite) {
    if (opts.n > 16) throw std::invalid_argument("non-bipartite generation is limited to 16 vertices");
    generate_subcubic(opts.n, 3, [&](const CubicGraph& g) {
      if (opts.min_girth > 3 && girth(g) < opts.min_girth) return;
      if (!passes_connectivity(g, opts.min_connectivity)) return;
      ++count;
      emit(g);
    });
    return count;
  }
  int half = opts.n / 2;
  RowGenerator::Params p;
  p.rows = half;
  p.cols = half;
  p.min_girth = opts.min_girth;
  p.shard = opts.shard;
  p.shards = opts.shards;
  std::vector<int> colors(opts.n);
  for (int v = half; v < opts.n; ++v) colors[v] = 1;
  std::vector<int> swapped(opts.n);
  for (int v = 0; v < opts.n; ++v) swapped[v] = 1 - colors[v];
  RowGenerator gen(p, [&](const std::vector<Mask>& rows) {
    CubicGraph g = graph_from_rows(rows, half);
    // the same graph arises once with each colour class as rows
    if (canonical_form(g, colors) > canonical_form(g, swapped)) return;
    if (!passes_connectivity(g, opts.min_connectivity)) return;
    ++count;
    emit(g);
  });
  gen.run();
  return count;
}

std::vector<CubicGraph> generate_all(const GenOptions& opts) {
  std::vector<CubicGraph> out;
  generate(opts, [&](const CubicGraph& g) { out.push_back(g); });
  return out;
}

std::uint64_t generate_5pieces(int n, const std::function<void(const FivePiece&)>& emit, int shard, int shards) {
  if (n % 2 == 0 || n < 11 || n > 23) throw std::invalid_argument("5-pieces need odd n in 11..23");
  RowGenerator::Params p;
  p.rows = (n - 1) / 2;
  p.cols = (n + 1) / 2;
  p.last_row_degree = 2;
  p.min_girth = 6;
  p.shard = shard;
  p.shards = shards;
  std::uint64_t count = 0;
  RowGenerator gen(p, [&](const std::vector<Mask>& rows) {
    FivePiece fp = make_five_piece(graph_from_rows(rows, p.cols));
    ++count;
    emit(fp);
  });
  gen.run();
  return count;
}

std::uint64_t generate_subcubic(int n, int min_degree, const std::function<void(const CubicGraph&)>& emit) {
  if (n < 3 || n > 20) throw std::invalid_argument("subcubic generation is limited to 3..20 vertices");
  std::uint64_t count = 0;
  VertexGenerator gen(n, min_degree, [&](const CubicGraph& g) {
    ++count;
    emit(g);
  });
  gen.run();
  return count;
}

}  // namespace cubham
