#include "cubham/constructions.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cubham/analysis.hpp"
#include "cubham/formats.hpp"
#include "cubham/hamsolver.hpp"

namespace cubham {
namespace {

struct BaseFacts {
  std::optional<int> cc;
  std::vector<EdgeCut> cuts4;
};

BaseFacts base_facts(const CubicGraph& g) { return {cyclic_connectivity(g), find_cyclic_cuts(g, 4)}; }

std::string check_pair(const CubicGraph& g, const BaseFacts& f, int v, Edge e) {
  int x = e.u, y = e.v;
  auto d = distances_from(g, v);
  if (d[x] < 3 || d[y] < 3) return "d(v,x) and d(v,y) must be at least 3";
  for (const auto& cut : f.cuts4) {
    for (int id : cut.edges) {
      const Edge& ce = g.edge(id);
      if (ce.u == v || ce.v == v || ce.u == x || ce.v == x) return "a 4-edge cut has an edge at v or x";
    }
    bool va = std::find(cut.side_a.begin(), cut.side_a.end(), v) != cut.side_a.end();
    bool xa = std::find(cut.side_a.begin(), cut.side_a.end(), x) != cut.side_a.end();
    if (va == xa) return "a 4-edge cut leaves v and x on the same side";
  }
  return {};
}

std::string check_base(const CubicGraph& g, const BaseFacts& f) {
  if (!g.is_cubic()) return "base graph is not cubic";
  if (!is_connected(g)) return "base graph is not connected";
  if (f.cc && *f.cc < 4) return "base graph is not cyclically 4-connected";
  return {};
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("CUBHAM_DATA_DIR")) return env;
  return CUBHAM_DATA_DIR;
}

nlohmann::json load_manifest() {
  auto path = data_dir() / "named" / "manifest.json";
  std::ifstream in(path);
  if (!in) throw GraphError("missing fixture manifest " + path.string());
  return nlohmann::json::parse(in);
}

}  // namespace

SpecReport validate_triple_spec(const TripleSpec& spec) {
  const auto& g = spec.base;
  auto fail = [](std::string why) { return SpecReport{false, std::move(why)}; };
  if (spec.v < 0 || spec.v >= g.order()) return fail("v is not a vertex");
  if (!g.adjacent(spec.e.u, spec.e.v)) return fail("e is not an edge");
  auto facts = base_facts(g);
  if (auto why = check_base(g, facts); !why.empty()) return fail(why);
  if (auto why = check_pair(g, facts, spec.v, spec.e); !why.empty()) return fail(why);
  if (spec.m.order() == 0) return fail("multigraph is empty");
  if (!spec.m.is_3_edge_connected()) return fail("multigraph is not 3-edge-connected");
  return {};
}

std::vector<std::pair<int, int>> triple_pairs(const CubicGraph& g) {
  std::vector<std::pair<int, int>> out;
  auto facts = base_facts(g);
  if (!check_base(g, facts).empty()) return out;
  for (int v = 0; v < g.order(); ++v) {
    for (int e = 0; e < g.size(); ++e) {
      // both orientations of e: x is the end that must avoid the cuts
      for (Edge xy : {g.edge(e), Edge{g.edge(e).v, g.edge(e).u}}) {
        if (check_pair(g, facts, v, xy).empty()) {
          out.push_back({v, e});
          break;
        }
      }
    }
  }
  return out;
}

CubicGraph triple_operation(const TripleSpec& spec) {
  auto report = validate_triple_spec(spec);
  if (!report.ok) throw GraphError("invalid triple spec: " + report.violation);
  const auto& g = spec.base;
  int n = g.order(), bsz = n - 1, tsz = 3 * bsz + 3;
  std::vector<int> idx(n, -1);
  for (int u = 0, k = 0; u < n; ++u) {
    if (u != spec.v) idx[u] = k++;
  }
  auto w = g.neighbors(spec.v);
  int x = idx[spec.e.u], y = idx[spec.e.v];
  std::vector<Edge> es;
  for (int a = 0; a < spec.m.order(); ++a) {
    for (int i = 0; i < 3; ++i) {
      int off = a * tsz + i * bsz;
      for (const Edge& e : g.edges()) {
        if (e.u == spec.v || e.v == spec.v) continue;
        if ((e.u == spec.e.u && e.v == spec.e.v) || (e.u == spec.e.v && e.v == spec.e.u)) continue;
        es.push_back({off + idx[e.u], off + idx[e.v]});
      }
      for (int j = 0; j < 3; ++j) es.push_back({a * tsz + 3 * bsz + j, off + idx[w[j]]});
    }
  }
  for (int f = 0; f < spec.m.size(); ++f) {
    const Edge& me = spec.m.edges()[f];
    auto brick = [&](int a) {
      const auto& inc = spec.m.incident_edges(a);
      int i = static_cast<int>(std::find(inc.begin(), inc.end(), f) - inc.begin());
      return a * tsz + i * bsz;
    };
    int ba = brick(me.u), bb = brick(me.v);
    es.push_back({ba + x, bb + y});
    es.push_back({ba + y, bb + x});
  }
  return CubicGraph::from_edges(spec.m.order() * tsz, es);
}

CubicGraph inflate(const CubicGraph& g, const CubicGraph& gp) {
  if (!g.is_cubic() || !gp.is_cubic()) throw GraphError("inflate needs cubic graphs");
  if (!try_bipartition(g) || !try_bipartition(gp)) throw GraphError("inflate needs bipartite graphs");
  if (!is_3_connected(g) || !is_3_connected(gp)) throw GraphError("inflate needs 3-connected graphs");
  if (is_hamiltonian(g)) throw GraphError("inflate needs a non-hamiltonian outer graph");
  int p = gp.order() - 1;
  auto ports = gp.neighbors(0);
  std::vector<Edge> es;
  for (int k = 0; k < g.order(); ++k) {
    for (const Edge& e : gp.edges()) {
      if (e.u == 0) continue;
      es.push_back({k * p + e.u - 1, k * p + e.v - 1});
    }
  }
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    auto port = [&](int a) {
      auto inc = g.incident_edges(a);
      int slot = static_cast<int>(std::find(inc.begin(), inc.end(), id) - inc.begin());
      return a * p + ports[slot] - 1;
    };
    es.push_back({port(e.u), port(e.v)});
  }
  return CubicGraph::from_edges(g.order() * p, es);
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::vector<NamedInfo> named_graphs() {
  std::vector<NamedInfo> out;
  auto manifest = load_manifest();
  for (const auto& j : manifest.at("graphs")) {
    NamedInfo info;
    info.key = j.at("key");
    info.hog_id = j.at("hog_id");
    info.order = j.at("order");
    info.hamiltonian = j.at("hamiltonian");
    info.available = j.contains("file") && !j.at("file").is_null();
    info.source = j.value("source", "");
    out.push_back(info);
  }
  return out;
}

CubicGraph named_graph(std::string_view key) {
  auto manifest = load_manifest();
  for (const auto& j : manifest.at("graphs")) {
    if (j.at("key") != key) continue;
    if (!j.contains("file") || j.at("file").is_null()) {
      throw GraphError("no fixture available for " + std::string(key));
    }
    auto path = data_dir() / "named" / j.at("file").get<std::string>();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("missing fixture file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    std::string body = ss.str();
    if (sha256_hex(body) != j.at("sha256").get<std::string>()) {
      throw GraphError("checksum mismatch for " + std::string(key));
    }
    std::string line = body.substr(0, body.find('\n'));
    CubicGraph g = parse_any(line);
    if (g.order() != j.at("order").get<int>()) throw GraphError("fixture order mismatch for " + std::string(key));
    if (is_hamiltonian(g) != j.at("hamiltonian").get<bool>()) {
      throw GraphError("fixture hamiltonicity mismatch for " + std::string(key));
    }
    return g;
  }
  throw GraphError("unknown named graph " + std::string(key));
}

}  // namespace cubham
