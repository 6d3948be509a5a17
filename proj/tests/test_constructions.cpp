#include <doctest.h>

#include "cubham/analysis.hpp"
#include "cubham/constructions.hpp"
#include "cubham/formats.hpp"
#include "cubham/generator.hpp"
#include "cubham/hamsolver.hpp"
#include "support.hpp"

using namespace cubham;
using testsupport::heawood;
using testsupport::k33;

namespace {

Multigraph theta() { return Multigraph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}}); }
Multigraph k4_multi() { return Multigraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

bool available(const std::string& key) {
  for (const auto& info : named_graphs()) {
    if (info.key == key) return info.available;
  }
  return false;
}

// first girth-6 graph on 20 vertices with a usable (v, e) pair
TripleSpec small_spec() {
  GenOptions o;
  o.n = 20;
  o.min_girth = 6;
  for (const auto& g : generate_all(o)) {
    auto pairs = triple_pairs(g);
    if (!pairs.empty()) return {g, pairs[0].first, g.edge(pairs[0].second), theta()};
  }
  FAIL("no base graph found");
  return {};
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("triple spec validation") {
  auto spec = small_spec();
  CHECK(validate_triple_spec(spec).ok);
  // a neighbour of a neighbour of v is too close
  auto h = spec.base;
  int w = h.neighbors(spec.v)[0];
  int x = h.neighbors(w)[0] == spec.v ? h.neighbors(w)[1] : h.neighbors(w)[0];
  int y = h.neighbors(x)[0] == w ? h.neighbors(x)[1] : h.neighbors(x)[0];
  TripleSpec close{h, spec.v, Edge{x, y}, theta()};
  auto r = validate_triple_spec(close);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("d(v,x)") != std::string::npos);
  // girth 4 forces a cyclic cut of size at most 4 through v, x or both sides
  auto cube = testsupport::cube();
  for (int v = 0; v < cube.order(); ++v) {
    for (int e = 0; e < cube.size(); ++e) CHECK_FALSE(validate_triple_spec({cube, v, cube.edge(e), theta()}).ok);
  }
  auto bad_m = Multigraph::from_edges(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 3}});
  CHECK_FALSE(validate_triple_spec({spec.base, spec.v, spec.e, bad_m}).ok);
}

TEST_CASE("triple operation on a girth-6 base") {
  auto spec = small_spec();
  auto t = triple_operation(spec);
  CHECK(t.order() == 2 * (3 * 19 + 3));
  CHECK(t.is_cubic());
  CHECK(try_bipartition(t).has_value());
  auto cc = cyclic_connectivity(t);
  REQUIRE(cc.has_value());
  CHECK(*cc >= 5);
  spec.m = k4_multi();
  auto t4 = triple_operation(spec);
  CHECK(t4.order() == 4 * 60);
  CHECK(try_bipartition(t4).has_value());
  spec.v = -1;
  CHECK_THROWS_AS(triple_operation(spec), GraphError);
}

TEST_CASE("inflation") {
  auto g = parse_graph6("S???????DCPGaOSGHGAG_HC?cO?d??d??");
  // not 3-connected, so rejected
  CHECK_THROWS_AS(inflate(g, k33()), GraphError);
  CHECK_THROWS_AS(inflate(heawood(), k33()), GraphError);  // hamiltonian
  if (available("GK50")) {
    auto gk = named_graph("GK50");
    auto a = inflate(gk, k33());
    CHECK(a.order() == 250);
    CHECK(a.is_cubic());
    CHECK(try_bipartition(a).has_value());
    auto b = inflate(gk, testsupport::cube());
    CHECK(b.order() == 350);
    CHECK(girth(b) == 4);
    CHECK(is_3_connected(b));
    CHECK(try_bipartition(b).has_value());
  }
}

TEST_CASE("named graphs") {
  auto all = named_graphs();
  CHECK(all.size() == 10);
  CHECK_THROWS_AS(named_graph("nope"), GraphError);
  for (const auto& info : all) {
    if (!info.available) {
      CHECK_THROWS_AS(named_graph(info.key), GraphError);
      continue;
    }
    auto g = named_graph(info.key);
    CHECK(g.order() == info.order);
    CHECK(try_bipartition(g).has_value() == (info.key != "BBL38"));
  }
  if (available("planar-26")) CHECK_FALSE(is_3_connected(named_graph("planar-26")));
  if (available("GK50")) {
    auto gk = named_graph("GK50");
    CHECK(girth(gk) == 6);
    CHECK(cyclic_connectivity(gk) == 4);
    CHECK(find_cyclic_cuts(gk, 4).size() == 8);
    CHECK(is_3_connected(gk));
    CHECK_FALSE(triple_pairs(gk).empty());
  }
}
