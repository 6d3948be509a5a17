#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cubham/graph.hpp"

namespace cubham {

struct HamCycle {
  std::vector<int> edges;  // edge ids, sorted
  std::vector<int> order;  // cyclic vertex sequence starting at 0
};

enum class SolveStatus { Found, None, Undecided };

struct SolveResult {
  SolveStatus status = SolveStatus::None;
  std::optional<HamCycle> cycle;
  std::uint64_t nodes = 0;
};

struct SolveOptions {
  std::uint64_t node_limit = 0;  // 0 means unbounded
};

/// Edge-labelling search for hamiltonian cycles in graphs of maximum degree 3.
///
/// Each edge is YES, NO or undecided. Propagation keeps every vertex at
/// most two YES edges and at least two non-NO edges, joins YES paths while
/// tracking their far ends, rejects premature cycles, forbids chords between
/// path ends and forces the third edge of a vertex adjacent to both ends.
class HamSolver {
 public:
  /// Accepts any simple graph with degrees 2 or 3 given as an edge list.
  HamSolver(int n, std::span<const Edge> edges);
  explicit HamSolver(const CubicGraph& g);

  SolveResult solve(std::span<const int> yes = {}, std::span<const int> no = {}, SolveOptions opts = {});

  /// Calls visit for every hamiltonian cycle; returns the count.
  /// visit may return false to stop early.
  std::uint64_t enumerate(std::span<const int> yes, std::span<const int> no,
                          const std::function<bool(const HamCycle&)>& visit, SolveOptions opts = {});

  bool aborted() const { return aborted_; }
  int order() const { return n_; }
  int edge_count() const { return m_; }

 private:
  enum : int { kUndec = 0, kYes = 1, kNo = 2 };

  bool start(std::span<const int> yes, std::span<const int> no);
  bool set_edge(int e, int val);
  bool propagate();
  bool check_vertex(int v);
  bool dfs();
  HamCycle extract() const;
  void save(int& cell) { trail_.push_back({&cell, cell}); }
  void undo(std::size_t mark);

  int n_ = 0, m_ = 0;
  std::vector<std::array<int, 3>> nbr_, inc_;
  std::vector<int> deg_;
  std::vector<Edge> edges_;

  std::vector<int> label_, yes_, no_, end_, len_;
  struct Saved {
    int* cell;
    int old;
  };
  std::vector<Saved> trail_;
  std::vector<int> queue_;
  bool found_ = false;
  bool aborted_ = false;
  bool enumerating_ = false;
  std::uint64_t nodes_ = 0, limit_ = 0, count_ = 0;
  const std::function<bool(const HamCycle&)>* visit_ = nullptr;
  std::optional<HamCycle> first_;
};

SolveResult solve(const CubicGraph& g, std::span<const int> yes = {}, std::span<const int> no = {},
                  SolveOptions opts = {});
bool is_hamiltonian(const CubicGraph& g);
std::optional<HamCycle> find_hamiltonian_cycle(const CubicGraph& g);
std::optional<HamCycle> cycle_through_avoiding(const CubicGraph& g, int e1, int e2);
/// Spanning path from u to v; both must have degree at most 2.
std::optional<std::vector<int>> hamiltonian_path(const CubicGraph& g, int u, int v);
/// Every hamiltonian cycle once. Throws above 32 vertices unless lifted.
std::vector<HamCycle> enumerate_hamiltonian_cycles(const CubicGraph& g, bool lift_guard = false);
/// Independent check: spanning, simple, consecutive vertices adjacent.
bool validate_cycle(const CubicGraph& g, const HamCycle& c);

}  // namespace cubham
