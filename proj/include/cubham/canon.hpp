#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubham/graph.hpp"

namespace cubham {

struct CanonResult {
  std::vector<int> labeling;  // labeling[pos] = vertex
  std::vector<std::vector<int>> generators;
  std::vector<int> orbits;  // smallest vertex of each vertex's orbit
};

/// Individualization-refinement canonical labelling for vertex-coloured
/// graphs given in CSR form. Reuse one instance to avoid reallocations.
class Canonizer {
 public:
  const CanonResult& run(int n, std::span<const int> offsets, std::span<const int> targets,
                         std::span<const int> colors);

  /// Searched leaves in the last run.
  std::uint64_t leaves() const { return leaves_; }

 private:
  struct Partition {
    std::vector<int> lab, pos, cell, end;
    int cells = 0;
  };
  enum class Cmp { Less, Equal, Greater };

  std::uint64_t refine(Partition& p, int first_splitter);
  void individualize(Partition& p, int v, int& new_cell);
  void search(int depth);
  void leaf(int depth);
  void certificate(const Partition& p, std::vector<int>& out) const;
  bool fixes_prefix(const std::vector<int>& gen, int depth) const;
  void add_generator(const std::vector<int>& from, const std::vector<int>& to);

  int n_ = 0;
  std::span<const int> off_, tgt_;
  std::vector<Partition> levels_;
  std::vector<std::uint64_t> trace_;
  std::vector<int> path_;
  std::vector<char> eq_first_;
  std::vector<Cmp> cmp_best_;

  bool have_first_ = false;
  int first_depth_ = 0, best_depth_ = 0;
  std::vector<std::uint64_t> first_trace_, best_trace_;
  std::vector<int> first_path_, best_path_, first_lab_, best_lab_;
  std::vector<int> first_cert_, best_cert_, cert_;
  int backjump_ = -1;

  // scratch for refinement
  std::vector<int> count_, touched_, touched_cells_, queue_, uf_;
  std::vector<char> in_queue_, cell_touched_;

  std::uint64_t leaves_ = 0;
  CanonResult result_;
};

/// graph6 string of the canonically relabelled graph.
std::string canonical_form(const CubicGraph& g);
/// Canonical form when vertices carry colours that isomorphisms must preserve.
std::string canonical_form(const CubicGraph& g, std::span<const int> colors);
/// Canonical labelling (position -> vertex) plus automorphism data.
CanonResult canonical_labeling(const CubicGraph& g);
CanonResult canonical_labeling(const CubicGraph& g, std::span<const int> colors);

}  // namespace cubham
