#include <doctest.h>

#include <set>

#include "cubham/analysis.hpp"
#include "cubham/canon.hpp"
#include "cubham/generator.hpp"
#include "support.hpp"

using namespace cubham;

namespace {

std::uint64_t count(int n, int girth) {
  GenOptions o;
  o.n = n;
  o.min_girth = girth;
  return generate(o, [](const CubicGraph&) {});
}

// All labelled cubic graphs on n vertices, modulo isomorphism.
std::set<std::string> brute_cubic(int n) {
  std::set<std::string> out;
  std::vector<int> deg(n, 0);
  std::vector<Edge> es;
  auto rec = [&](auto& self, int v, int from) -> void {
    while (v < n && deg[v] == 3) {
      ++v;
      from = v + 1;
    }
    if (v == n) {
      auto g = CubicGraph::from_edges(n, es);
      if (is_connected(g)) out.insert(canonical_form(g));
      return;
    }
    for (int w = from; w < n; ++w) {
      if (deg[w] == 3) continue;
      es.push_back({v, w});
      ++deg[v];
      ++deg[w];
      self(self, v, w + 1);
      --deg[v];
      --deg[w];
      es.pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

// All 3-regular biadjacency matrices with h rows and h columns.
std::set<std::string> brute_bipartite(int h) {
  std::set<std::string> out;
  std::vector<int> coldeg(h, 0);
  std::vector<Edge> es;
  auto rec = [&](auto& self, int r) -> void {
    if (r == h) {
      auto g = CubicGraph::from_edges(2 * h, es);
      if (is_connected(g)) out.insert(canonical_form(g));
      return;
    }
    for (int a = 0; a < h; ++a) {
      for (int b = a + 1; b < h; ++b) {
        for (int c = b + 1; c < h; ++c) {
          if (coldeg[a] == 3 || coldeg[b] == 3 || coldeg[c] == 3) continue;
          for (int x : {a, b, c}) {
            ++coldeg[x];
            es.push_back({r, h + x});
          }
          self(self, r + 1);
          for (int x : {a, b, c}) {
            --coldeg[x];
            es.pop_back();
          }
        }
      }
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("bipartite cubic counts") {
  std::vector<std::uint64_t> g4 = {1, 1, 2, 5, 13, 38, 149};
  for (int i = 0; i < static_cast<int>(g4.size()); ++i) CHECK(count(6 + 2 * i, 4) == g4[i]);
  CHECK(count(14, 6) == 1);
  CHECK(count(16, 6) == 1);
  CHECK(count(18, 6) == 3);
  CHECK(count(20, 6) == 10);
}

TEST_CASE("generated graphs are pairwise non-isomorphic and well formed") {
  GenOptions o;
  o.n = 16;
  std::set<std::string> seen;
  generate(o, [&](const CubicGraph& g) {
    CHECK(g.is_cubic());
    CHECK(is_connected(g));
    CHECK(try_bipartition(g).has_value());
    CHECK(seen.insert(canonical_form(g)).second);
  });
  CHECK(seen.size() == 38);
}

TEST_CASE("matches brute force for small orders") {
  for (int n : {6, 8, 10, 12}) {
    GenOptions o;
    o.n = n;
    std::set<std::string> got;
    generate(o, [&](const CubicGraph& g) { got.insert(canonical_form(g)); });
    CHECK(got == brute_bipartite(n / 2));
  }
  for (int n : {4, 6, 8}) {
    GenOptions o;
    o.n = n;
    o.bipartite = false;
    o.min_girth = 3;
    std::set<std::string> got;
    generate(o, [&](const CubicGraph& g) { got.insert(canonical_form(g)); });
    CHECK(got == brute_cubic(n));
  }
}

TEST_CASE("girth filter") {
  GenOptions o;
  o.n = 30;
  o.min_girth = 8;
  auto all = generate_all(o);
  CHECK(all.size() == 1);
  for (const auto& g : all) CHECK(girth(g) >= 8);
}

TEST_CASE("shards partition the output") {
  GenOptions o;
  o.n = 18;
  std::set<std::string> whole, parts;
  generate(o, [&](const CubicGraph& g) { whole.insert(canonical_form(g)); });
  std::uint64_t total = 0;
  for (int s = 0; s < 3; ++s) {
    o.shard = s;
    o.shards = 3;
    total += generate(o, [&](const CubicGraph& g) { parts.insert(canonical_form(g)); });
  }
  CHECK(total == whole.size());
  CHECK(parts == whole);
}

TEST_CASE("connectivity filter") {
  GenOptions o;
  o.n = 16;
  o.min_connectivity = 3;
  for (const auto& g : generate_all(o)) CHECK(is_3_connected(g));
  o.min_connectivity = 4;
  for (const auto& g : generate_all(o)) CHECK(*cyclic_connectivity(g) >= 4);
}

TEST_CASE("5-pieces") {
  std::vector<std::uint64_t> expect = {1, 2, 12, 90};
  for (int i = 0; i < 4; ++i) {
    int n = 11 + 2 * i;
    std::set<std::string> seen;
    auto c = generate_5pieces(n, [&](const FivePiece& p) {
      CHECK(p.graph.degree(p.special) == 2);
      CHECK(girth(p.graph) >= 6);
      CHECK(seen.insert(canonical_form(p.graph)).second);
    });
    CHECK(c == expect[i]);
  }
}

TEST_CASE("subcubic generation") {
  std::vector<std::uint64_t> cubic = {1, 2, 5, 19, 85, 509};
  for (int i = 0; i < 6; ++i) CHECK(generate_subcubic(4 + 2 * i, 3, [](const CubicGraph&) {}) == cubic[i]);
  for (int n = 3; n <= 9; ++n) {
    std::set<std::string> seen;
    generate_subcubic(n, 2, [&](const CubicGraph& g) {
      CHECK(is_connected(g));
      CHECK(seen.insert(canonical_form(g)).second);
    });
  }
  CHECK_THROWS(generate_subcubic(2, 2, [](const CubicGraph&) {}));
}
