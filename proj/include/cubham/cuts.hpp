#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cubham/five_piece.hpp"
#include "cubham/graph.hpp"

namespace cubham {

/// One side of a split. from_parent[i] is the parent vertex of vertex i,
/// or -1 for a vertex added by the split.
struct CutSide {
  CubicGraph graph;
  std::vector<int> from_parent;
};

struct Split3 {
  std::array<CutSide, 2> parts;  // parts[0] holds the smallest vertex
  std::array<int, 2> apex{};
  /// triples[j][i]: id in parts[j] of the edge replacing cut edge i
  std::array<std::array<int, 3>, 2> triples{};
};

struct Split4 {
  std::array<CutSide, 2> parts;
  std::array<int, 2> new_edge{};  // edge ids of e1 in parts[0], e2 in parts[1]
};

struct Split5 {
  std::array<FivePiece, 2> pieces;
  std::array<std::vector<int>, 2> from_parent;
  int special_edge = -1;  // cut edge joining the two special vertices
};

Split3 split_3cut(const CubicGraph& g, std::span<const int> cut);
Split4 split_4cut(const CubicGraph& g, std::span<const int> cut);
Split5 split_5cut(const CubicGraph& g, std::span<const int> cut);

/// Every way of gluing g1 - e1 and g2 - e2 back along four edges,
/// one graph per isomorphism class.
std::vector<CubicGraph> join_4cut(const CubicGraph& g1, int e1, const CubicGraph& g2, int e2);

struct ForcedForbidden {
  std::vector<int> forced;     // in every hamiltonian cycle
  std::vector<int> forbidden;  // in no hamiltonian cycle
};

/// Throws GraphError when g is not hamiltonian.
ForcedForbidden forced_forbidden(const CubicGraph& g);

struct EdgeTypeReport {
  bool type1 = false;
  bool type2 = false;
  int covered_paths = 0;  // 3-edge paths centred on e that lie on a hamiltonian cycle
};

/// How type 1 is read from the covered-path count.
enum class Type1Rule {
  AtMostTwoCovered,  // default
  SomeUncovered,     // literal reading: at most three of four covered
};

const char* type1_rule_name(Type1Rule r);

/// The two auxiliary graphs for e = {u,v}. With a,b the other neighbours
/// of u and a',b' those of v (each pair in increasing order), u and v are
/// rewired as u~{a,a'}, v~{b,b'} in the first graph and u~{a,b'},
/// v~{b,a'} in the second. Vertex ids are kept.
std::array<CubicGraph, 2> type2_auxiliary(const CubicGraph& g, int e);

EdgeTypeReport classify_edge(const CubicGraph& g, int e, Type1Rule rule = Type1Rule::AtMostTwoCovered);
/// Report for every edge, in edge-id order.
std::vector<EdgeTypeReport> classify_edges(const CubicGraph& g, Type1Rule rule = Type1Rule::AtMostTwoCovered);

/// Twelve test graphs; two new vertices n and n+1 are appended.
/// Order: omitted non-special vertex i = 0..3, then the partner of the
/// special vertex among the remaining three.
std::vector<CubicGraph> test_graphs(const FivePiece& p);

struct PieceClass {
  int cls = 0;                // 0, 1 or 2
  bool c1_minus_c2 = false;  // class 1 but not class 2
};

PieceClass piece_class(const FivePiece& p);

/// Joins specials to each other and p1.others[i] to p2.others[pairing[i]].
CubicGraph join_pieces(const FivePiece& p1, const FivePiece& p2, std::array<int, 4> pairing);
/// All 24 pairings, one graph per isomorphism class.
std::vector<CubicGraph> join_all_pairings(const FivePiece& p1, const FivePiece& p2);

struct HamPathMatrix {
  std::array<std::array<bool, 4>, 4> joinable{};  // indices into others
  /// v1,v2,w1,w2 as indices into others, with every v-w pair joinable
  std::optional<std::array<int, 4>> labeling;
};

HamPathMatrix hampath_matrix(const FivePiece& p);

/// p plus a path xyz with x~v1,v2, y~special, z~w1,w2.
CubicGraph plus_graph(const FivePiece& p, int v1, int v2, int w1, int w2);

}  // namespace cubham
