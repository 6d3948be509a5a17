#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cubham/five_piece.hpp"
#include "cubham/graph.hpp"

namespace cubham {

struct GenOptions {
  int n = 0;
  int min_girth = 4;         // 4, 6 or 8
  int min_connectivity = 1;  // 1-3: vertex connectivity; 4+: cyclic connectivity
  bool bipartite = true;
  int shard = 0;
  int shards = 1;
};

/// Connected cubic graphs on n vertices, one per isomorphism class.
/// Bipartite graphs come from canonical augmentation by rows of a fixed
/// colour class; the non-bipartite path is for small oracle runs only.
std::uint64_t generate(const GenOptions& opts, const std::function<void(const CubicGraph&)>& emit);
std::vector<CubicGraph> generate_all(const GenOptions& opts);

/// All 5-pieces on n vertices (n odd, 11..23).
std::uint64_t generate_5pieces(int n, const std::function<void(const FivePiece&)>& emit, int shard = 0,
                               int shards = 1);

/// Connected graphs on n vertices with every degree in [min_degree, 3].
std::uint64_t generate_subcubic(int n, int min_degree, const std::function<void(const CubicGraph&)>& emit);

/// Passes only graphs without a reducible 8-cycle site.
std::uint64_t filter_irreducible(const std::vector<CubicGraph>& in, const std::function<void(const CubicGraph&)>& emit);

}  // namespace cubham
