#include <random>

#include "cubham/analysis.hpp"
#include "cubham/formats.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cubham;
using namespace testsupport;

TEST_CASE("bipartition") {
  auto b = bipartition(k33());
  REQUIRE(std::holds_alternative<Bipartition>(b));
  auto& col = std::get<Bipartition>(b).color;
  CHECK(col[0] == 0);
  CHECK(std::count(col.begin(), col.end(), 0) == 3);
  auto nb = bipartition(k4());
  REQUIRE(std::holds_alternative<NotBipartite>(nb));
  CHECK(std::get<NotBipartite>(nb).odd_cycle.size() == 3);
  auto pc = bipartition(petersen());
  REQUIRE(std::holds_alternative<NotBipartite>(pc));
  auto cyc = std::get<NotBipartite>(pc).odd_cycle;
  CHECK(cyc.size() % 2 == 1);
  for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(petersen().adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
}

TEST_CASE("parity") {
  auto g = heawood();
  auto b = *try_bipartition(g);
  auto p = degree2_parity(g, b);
  CHECK(p.n20 == 0);
  CHECK(p.n21 == 0);
  CHECK(p.consistent);
}

TEST_CASE("girth") {
  CHECK(girth(k4()) == 3);
  CHECK(girth(k33()) == 4);
  CHECK(girth(cube()) == 4);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(heawood()) == 6);
}

TEST_CASE("3-connectivity") {
  CHECK(is_3_connected(k33()));
  CHECK(is_3_connected(k4()));
  CHECK(is_3_connected(petersen()));
  // two K4 minus an edge, joined by two edges: a 2-edge cut
  std::vector<Edge> es{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {2, 6}, {3, 7}};
  CHECK_FALSE(is_3_connected(CubicGraph::from_edges(8, es)));
}

TEST_CASE("cyclic connectivity on small graphs") {
  CHECK(*cyclic_connectivity(cube()) == 4);
  CHECK(*cyclic_connectivity(petersen()) == 5);
  CHECK(*cyclic_connectivity(heawood()) == 6);
  CHECK_THROWS(cyclic_connectivity(k33()));
  auto cuts = find_cyclic_cuts(cube(), 4);
  CHECK(cuts.size() == 3);
  for (const auto& c : cuts) {
    CHECK(c.side_a.size() == 4);
    CHECK(c.side_b.size() == 4);
  }
  CHECK(find_cyclic_cuts(cube(), 3).empty());
}

TEST_CASE("cyclic connectivity matches brute force") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int rep = 0; rep < 400 && checked < 120; ++rep) {
    int n = 8 + 2 * static_cast<int>(rng() % 4);
    auto g = random_subcubic(n, rng, true);
    ++checked;
    int gth = girth(g);
    int bf = brute_cyclic_connectivity(g, gth);
    auto cc = cyclic_connectivity(g);
    REQUIRE(cc.has_value());
    CHECK(*cc == bf);
    CHECK(*cc <= gth);
    CHECK(static_cast<int>(!find_cyclic_cuts(g, *cc).empty()) == 1);
  }
  CHECK(checked > 20);
}
