#include "cubham/formats.hpp"

#include <algorithm>

namespace cubham {
namespace {

std::string_view trim(std::string_view s, std::size_t& lead) {
  lead = 0;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  for (std::string_view hdr : {">>graph6<<", ">>sparse6<<"}) {
    if (s.substr(0, hdr.size()) == hdr) {
      s.remove_prefix(hdr.size());
      lead = hdr.size();
    }
  }
  return s;
}

void check_char(std::string_view s, std::size_t i, std::size_t base) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) throw FormatError("invalid character", base + i);
}

// Reads N(n); advances pos.
int read_size(std::string_view s, std::size_t& pos, std::size_t base) {
  if (pos >= s.size()) throw FormatError("missing vertex count", base + pos);
  check_char(s, pos, base);
  if (s[pos] != 126) return s[pos++] - 63;
  if (pos + 1 < s.size() && s[pos + 1] == 126) {
    if (pos + 8 > s.size()) throw FormatError("truncated vertex count", base + pos);
    long long n = 0;
    for (std::size_t i = pos + 2; i < pos + 8; ++i) {
      check_char(s, i, base);
      n = (n << 6) | (s[i] - 63);
    }
    pos += 8;
    if (n > kMaxVertices) throw FormatError("vertex count too large", base);
    return static_cast<int>(n);
  }
  if (pos + 4 > s.size()) throw FormatError("truncated vertex count", base + pos);
  int n = 0;
  for (std::size_t i = pos + 1; i < pos + 4; ++i) {
    check_char(s, i, base);
    n = (n << 6) | (s[i] - 63);
  }
  pos += 4;
  if (n > kMaxVertices) throw FormatError("vertex count too large", base);
  return n;
}

void write_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

RawGraph decode_graph6(std::string_view line) {
  std::size_t base = 0;
  std::string_view s = trim(line, base);
  std::size_t pos = 0;
  RawGraph g;
  g.n = read_size(s, pos, base);
  std::size_t nbits = static_cast<std::size_t>(g.n) * (g.n - 1) / 2;
  std::size_t need = (nbits + 5) / 6;
  if (s.size() - pos != need) {
    throw FormatError("expected " + std::to_string(need) + " data bytes, got " + std::to_string(s.size() - pos),
                      base + std::min(s.size(), pos + need));
  }
  std::size_t k = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t byte = pos + k / 6;
      check_char(s, byte, base);
      int bit = ((s[byte] - 63) >> (5 - k % 6)) & 1;
      if (bit) g.edges.push_back({i, j});
    }
  }
  // padding bits must be zero
  if (nbits % 6) {
    std::size_t byte = pos + nbits / 6;
    check_char(s, byte, base);
    if (((s[byte] - 63) & ((1 << (6 - nbits % 6)) - 1)) != 0) throw FormatError("nonzero padding", base + byte);
  }
  return g;
}

std::string encode_graph6(int n, const std::vector<Edge>& edges) {
  std::string out;
  write_size(out, n);
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<unsigned char> bits((nbits + 5) / 6 * 6, 0);
  for (const Edge& e : edges) {
    int i = std::min(e.u, e.v), j = std::max(e.u, e.v);
    bits[static_cast<std::size_t>(j) * (j - 1) / 2 + i] = 1;
  }
  for (std::size_t b = 0; b < bits.size(); b += 6) {
    int x = 0;
    for (int t = 0; t < 6; ++t) x = (x << 1) | bits[b + t];
    out.push_back(static_cast<char>(x + 63));
  }
  return out;
}

RawGraph decode_sparse6(std::string_view line) {
  std::size_t base = 0;
  std::string_view s = trim(line, base);
  if (s.empty() || s[0] != ':') throw FormatError("sparse6 must start with ':'", base);
  std::size_t pos = 1;
  RawGraph g;
  g.n = read_size(s, pos, base);
  int k = 0;
  while (g.n > 1 && (1 << k) < g.n) ++k;
  std::size_t total = (s.size() - pos) * 6;
  std::size_t bitpos = 0;
  auto bit = [&](std::size_t b) {
    std::size_t byte = pos + b / 6;
    check_char(s, byte, base);
    return ((s[byte] - 63) >> (5 - b % 6)) & 1;
  };
  int v = 0;
  while (bitpos + 1 + k <= total) {
    int b = bit(bitpos++);
    int x = 0;
    for (int t = 0; t < k; ++t) x = (x << 1) | bit(bitpos++);
    if (b) ++v;
    if (v >= g.n) break;
    if (x > v) {
      v = x;
    } else {
      if (x >= g.n) break;
      g.edges.push_back({x, v});
    }
  }
  return g;
}

std::string encode_sparse6(int n, const std::vector<Edge>& edges) {
  std::string out = ":";
  write_size(out, n);
  int k = 0;
  while (n > 1 && (1 << k) < n) ++k;
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const Edge& e : edges) es.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.v != b.v ? a.v < b.v : a.u < b.u; });
  std::vector<unsigned char> bits;
  auto put = [&](int x) {
    for (int t = k - 1; t >= 0; --t) bits.push_back(static_cast<unsigned char>((x >> t) & 1));
  };
  int lastj = 0;
  for (const Edge& e : es) {
    if (e.v == lastj) {
      bits.push_back(0);
    } else {
      bits.push_back(1);
      if (e.v > lastj + 1) {
        put(e.v);
        bits.push_back(0);
      }
      lastj = e.v;
    }
    put(e.u);
  }
  std::size_t pad = (6 - bits.size() % 6) % 6;
  if (pad > 0) {
    // a run of ones could be misread as an extra edge to n-1 in this case
    if (k < 6 && n == (1 << k) && pad >= static_cast<std::size_t>(k) + 1 && lastj == n - 2) {
      bits.push_back(0);
      --pad;
    }
    for (std::size_t t = 0; t < pad; ++t) bits.push_back(1);
  }
  for (std::size_t b = 0; b < bits.size(); b += 6) {
    int x = 0;
    for (int t = 0; t < 6; ++t) x = (x << 1) | bits[b + t];
    out.push_back(static_cast<char>(x + 63));
  }
  return out;
}

CubicGraph parse_graph6(std::string_view line) {
  RawGraph r = decode_graph6(line);
  return CubicGraph::from_edges(r.n, r.edges);
}

std::string write_graph6(const CubicGraph& g) { return encode_graph6(g.order(), g.edges()); }

Multigraph parse_sparse6(std::string_view line) {
  RawGraph r = decode_sparse6(line);
  return Multigraph::from_edges(r.n, std::move(r.edges));
}

std::string write_sparse6(const Multigraph& m) { return encode_sparse6(m.order(), m.edges()); }

CubicGraph parse_any(std::string_view line) {
  std::size_t lead = 0;
  std::string_view s = trim(line, lead);
  if (!s.empty() && s[0] == ':') {
    RawGraph r = decode_sparse6(line);
    return CubicGraph::from_edges(r.n, r.edges);
  }
  return parse_graph6(line);
}

}  // namespace cubham
