#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubham/graph.hpp"

namespace cubham {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Plain vertex count plus edge list, no degree restrictions.
struct RawGraph {
  int n = 0;
  std::vector<Edge> edges;
};

RawGraph decode_graph6(std::string_view line);
std::string encode_graph6(int n, const std::vector<Edge>& edges);

RawGraph decode_sparse6(std::string_view line);
std::string encode_sparse6(int n, const std::vector<Edge>& edges);

CubicGraph parse_graph6(std::string_view line);
std::string write_graph6(const CubicGraph& g);
Multigraph parse_sparse6(std::string_view line);
std::string write_sparse6(const Multigraph& m);

/// Dispatches on a leading ':' (sparse6) or graph6 otherwise.
CubicGraph parse_any(std::string_view line);

}  // namespace cubham
