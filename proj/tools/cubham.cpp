#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cubham/analysis.hpp"
#include "cubham/canon.hpp"
#include "cubham/constructions.hpp"
#include "cubham/cuts.hpp"
#include "cubham/formats.hpp"
#include "cubham/generator.hpp"
#include "cubham/hamsolver.hpp"
#include "cubham/reduction.hpp"

using namespace cubham;

namespace {

constexpr int kIntegrity = 2;

struct Common {
  bool lenient = false;
  int jobs = 1;
  bool count = false;
};

struct Item {
  std::string g6;
  CubicGraph g;
};

// Per-graph result: text to print, counters to add, integrity flag.
struct Outcome {
  std::string text;
  std::map<std::string, std::uint64_t> tally;
  bool bad = false;
};

using Handler = std::function<Outcome(const Item&)>;

std::string ids(const std::vector<int>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Reads graph6/sparse6 from stdin (first TSV field, '#' lines skipped),
// runs the handler on a worker pool and prints results in input order.
int run_stream(const Common& c, const Handler& fn, const std::vector<std::string>& count_keys) {
  const std::size_t batch = 256 * static_cast<std::size_t>(std::max(1, c.jobs));
  std::map<std::string, std::uint64_t> tally;
  for (const auto& k : count_keys) tally[k] = 0;
  bool bad = false;
  std::string line;
  std::uint64_t lineno = 0;
  bool eof = false;
  while (!eof) {
    std::vector<Item> items;
    while (items.size() < batch) {
      if (!std::getline(std::cin, line)) {
        eof = true;
        break;
      }
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::string field = line.substr(0, line.find('\t'));
      try {
        items.push_back({field, parse_any(field)});
      } catch (const std::exception& e) {
        std::cerr << "line " << lineno << ": " << e.what() << "\n";
        if (!c.lenient) return kIntegrity;
      }
    }
    std::vector<Outcome> out(items.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < items.size();) {
        try {
          out[i] = fn(items[i]);
        } catch (const std::exception& e) {
          out[i].text = items[i].g6 + "\tERROR\t" + e.what();
          out[i].bad = true;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < c.jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& o : out) {
      if (!c.count && !o.text.empty()) std::cout << o.text << "\n";
      for (auto& [k, v] : o.tally) tally[k] += v;
      bad |= o.bad;
    }
  }
  if (c.count) {
    for (const auto& [k, v] : tally) std::cout << k << "\t" << v << "\n";
  }
  std::cout.flush();
  return bad ? kIntegrity : 0;
}

std::pair<int, int> parse_split(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw CLI::ValidationError("--split", "expected i/m");
  int i = std::stoi(s.substr(0, slash)), m = std::stoi(s.substr(slash + 1));
  if (m < 1 || i < 0 || i >= m) throw CLI::ValidationError("--split", "need 0 <= i < m");
  return {i, m};
}

// A named fixture key, otherwise a graph6/sparse6 string.
CubicGraph load_graph(const std::string& s) {
  for (const auto& info : named_graphs()) {
    if (info.key == s) return named_graph(s);
  }
  return parse_any(s);
}

Multigraph load_multigraph(const std::string& s) {
  if (s == "theta") return Multigraph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}});
  if (s == "K4") return Multigraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return parse_sparse6(s);
}

std::string cycle_text(const HamCycle& c) {
  std::string s;
  for (std::size_t i = 0; i < c.order.size(); ++i) s += (i ? " " : "") + std::to_string(c.order[i]);
  return s;
}

Outcome ham_one(const Item& it, bool show_cycle, std::uint64_t budget, bool relabel, std::uint64_t seed) {
  Outcome o;
  SolveOptions opts;
  opts.node_limit = budget;
  auto r = solve(it.g, {}, {}, opts);
  std::string verdict = r.status == SolveStatus::Found ? "HAM" : r.status == SolveStatus::None ? "NONHAM" : "UNDECIDED";
  o.text = it.g6 + "\t" + verdict;
  o.tally[verdict] = 1;
  if (r.status == SolveStatus::Found && !validate_cycle(it.g, *r.cycle)) {
    o.bad = true;
    o.text += "\tINVALID-CYCLE";
  }
  if (relabel && r.status != SolveStatus::Undecided) {
    // the seed is mixed with the graph so results do not depend on batching
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(it.g6));
    std::vector<int> p(it.g.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto r2 = solve(it.g.relabeled(p), {}, {}, opts);
    if (r2.status != SolveStatus::Undecided && r2.status != r.status) {
      o.bad = true;
      o.text += "\tRELABEL-MISMATCH";
    }
  }
  if (r.status == SolveStatus::Undecided) o.text += "\t" + std::to_string(r.nodes);
  if (show_cycle && r.cycle) o.text += "\t" + cycle_text(*r.cycle);
  return o;
}

Outcome props_one(const Item& it) {
  const auto& g = it.g;
  Outcome o;
  bool bip = try_bipartition(g).has_value();
  bool conn = is_connected(g);
  std::string cc = "-";
  if (g.is_cubic() && conn && g.order() >= 8) {
    auto v = cyclic_connectivity(g);
    cc = v ? std::to_string(*v) : "none";
  }
  std::ostringstream s;
  s << it.g6 << "\t" << g.order() << "\t" << girth(g) << "\t" << bip << "\t" << (conn && is_3_connected(g)) << "\t" << cc;
  o.text = s.str();
  return o;
}

Outcome classify_one(const Item& it, Type1Rule rule) {
  Outcome o;
  if (!is_hamiltonian(it.g)) {
    o.text = it.g6 + "\tNONHAM";
    o.tally["nonham"] = 1;
    return o;
  }
  auto reps = classify_edges(it.g, rule);
  std::vector<int> t1, t2;
  for (int e = 0; e < static_cast<int>(reps.size()); ++e) {
    if (reps[e].type1) t1.push_back(e);
    if (reps[e].type2) t2.push_back(e);
  }
  auto ff = forced_forbidden(it.g);
  o.text = it.g6 + "\tHAM\t" + ids(t1) + "\t" + ids(t2) + "\t" + ids(ff.forced) + "\t" + ids(ff.forbidden);
  o.tally["ham"] = 1;
  o.tally["with_type1"] = !t1.empty();
  o.tally["with_type2"] = !t2.empty();
  o.tally["with_forced"] = !ff.forced.empty();
  o.tally["with_forbidden"] = !ff.forbidden.empty();
  return o;
}

Outcome classify_piece(const Item& it) {
  Outcome o;
  auto p = make_five_piece(it.g);
  auto pc = piece_class(p);
  o.text = it.g6 + "\t" + std::to_string(pc.cls) + "\t" + (pc.c1_minus_c2 ? "C1-C2" : "-");
  o.tally["total"] = 1;
  o.tally["class" + std::to_string(pc.cls)] = 1;
  o.tally["c1_minus_c2"] = pc.c1_minus_c2;
  return o;
}

// Reduced graph with its tuple, up to isomorphism and tuple reversal.
std::string tuple_key(const Reduced& r) {
  std::vector<int> fwd(r.graph.order(), 0), rev(r.graph.order(), 0);
  for (int k = 0; k < 4; ++k) {
    const Edge& e = r.new_edges[k];
    fwd[e.u] = 2 * k + 1;
    fwd[e.v] = 2 * k + 2;
    // reversal also swaps the ends of each edge
    rev[e.v] = 2 * (3 - k) + 1;
    rev[e.u] = 2 * (3 - k) + 2;
  }
  return std::min(canonical_form(r.graph, fwd), canonical_form(r.graph, rev));
}

Outcome reduce_one(const Item& it) {
  Outcome o;
  auto form = canonical_form(it.g);
  auto sites = find_reducible_sites(it.g);
  std::set<std::string> seen;
  int without = 0;
  for (const auto& s : sites) {
    auto r = reduce(it.g, s);
    if (canonical_form(expand(r.graph, r.new_edges).graph) != form) o.bad = true;
    auto ext = find_extendable_cycle(r.graph, r.edge_ids);
    if (ext && !validate_cycle(it.g, lift_cycle(it.g, s, r, ext->cycle))) o.bad = true;
    if (seen.insert(tuple_key(r)).second && !ext) ++without;
  }
  o.text = form + "\t" + std::to_string(sites.size()) + "\t" + std::to_string(seen.size()) + "\t" +
           std::to_string(without);
  if (o.bad) o.text += "\tFAILED";
  o.tally["graphs"] = 1;
  o.tally["reducible"] = !sites.empty();
  o.tally["sites"] = sites.size();
  o.tally["tuples"] = seen.size();
  o.tally["without_extendable"] = without;
  return o;
}

Outcome cuts_one(const Item& it, int k) {
  Outcome o;
  int size = k;
  if (size <= 0) {
    auto cc = cyclic_connectivity(it.g);
    if (!cc) {
      o.text = it.g6 + "\tnone\t0";
      return o;
    }
    size = *cc;
  }
  auto cuts = find_cyclic_cuts(it.g, size);
  std::string s = it.g6 + "\t" + std::to_string(size) + "\t" + std::to_string(cuts.size());
  for (const auto& c : cuts) {
    s += "\t";
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      const Edge& e = it.g.edge(c.edges[i]);
      s += (i ? "," : "") + std::to_string(e.u) + "-" + std::to_string(e.v);
    }
  }
  o.text = s;
  o.tally["cuts"] = cuts.size();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tools for hamiltonicity of cubic bipartite graphs"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--lenient", c.lenient, "Report and skip malformed input lines");
    sub->add_option("--jobs,-j", c.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("--count", c.count, "Print totals instead of per-graph lines");
  };

  auto* gen = app.add_subcommand("gen", "Generate connected cubic graphs");
  GenOptions go;
  std::string split = "0/1";
  bool irreducible = false;
  gen->add_option("-n", go.n, "Vertex count")->required();
  gen->add_option("--girth", go.min_girth, "Minimum girth (4, 6 or 8)");
  gen->add_option("--connectivity", go.min_connectivity, "1-3 vertex connectivity, 4+ cyclic connectivity");
  gen->add_flag("--bipartite,!--any", go.bipartite, "Bipartite graphs only (default)");
  gen->add_option("--split", split, "Shard i/m");
  gen->add_flag("--irreducible", irreducible, "Drop graphs with a reducible 8-cycle");
  gen->add_flag("--count", c.count, "Print the count only");

  auto* pieces = app.add_subcommand("pieces", "Generate 5-pieces");
  int pn = 0;
  pieces->add_option("-n", pn, "Vertex count (odd)")->required();
  pieces->add_option("--split", split, "Shard i/m");
  pieces->add_flag("--count", c.count, "Print the count only");

  auto* ham = app.add_subcommand("ham", "Decide hamiltonicity");
  common(ham);
  bool show_cycle = false, relabel = false;
  std::uint64_t budget = 0, seed = 1;
  ham->add_flag("--cycle", show_cycle, "Append a hamiltonian cycle");
  ham->add_option("--budget", budget, "Search node limit, 0 for none");
  ham->add_flag("--relabel-check", relabel, "Re-solve a random relabelling and compare");
  ham->add_option("--seed", seed, "Seed for --relabel-check");

  auto* classify = app.add_subcommand("classify", "Edge types or 5-piece classes");
  common(classify);
  bool piece_mode = false;
  std::string rule_name = "at-most-two-paths-covered";
  classify->add_flag("--pieces", piece_mode, "Input lines are 5-pieces");
  classify->add_option("--type1-rule", rule_name, "at-most-two-paths-covered or some-path-uncovered")
      ->check(CLI::IsMember({"at-most-two-paths-covered", "some-path-uncovered"}));

  auto* red = app.add_subcommand("reduce", "Reducible 8-cycle statistics");
  common(red);

  auto* construct = app.add_subcommand("construct", "Build graphs");
  construct->require_subcommand(1);
  auto* triple = construct->add_subcommand("triple", "Triple operation");
  std::string base, mg = "theta";
  int tv = -1;
  std::vector<int> txy;
  bool list_pairs = false;
  triple->add_option("--base", base, "Named graph or graph6")->required();
  triple->add_option("--v", tv, "Removed vertex");
  triple->add_option("--edge", txy, "Removed edge x,y")->delimiter(',')->expected(2);
  triple->add_option("--multigraph", mg, "theta, K4 or sparse6");
  triple->add_flag("--list-pairs", list_pairs, "Print the usable (v, x, y) choices instead");
  auto* infl = construct->add_subcommand("inflate", "Replace vertices by copies of a graph");
  std::string outer, inner;
  infl->add_option("--outer", outer, "Named graph or graph6")->required();
  infl->add_option("--inner", inner, "Named graph or graph6")->required();
  auto* named = construct->add_subcommand("named", "Print a vendored graph");
  std::string key;
  named->add_option("key", key, "Fixture key; omit to list");

  auto* props = app.add_subcommand("props", "n, girth, bipartite, 3-connected, cyclic connectivity");
  common(props);

  auto* cuts = app.add_subcommand("cuts", "Cyclic edge cuts");
  common(cuts);
  int k = 0;
  cuts->add_option("-k", k, "Cut size, default the cyclic connectivity");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      std::tie(go.shard, go.shards) = parse_split(split);
      std::uint64_t kept = 0;
      generate(go, [&](const CubicGraph& g) {
        if (irreducible && is_reducible(g)) return;
        ++kept;
        if (!c.count) std::cout << write_graph6(g) << "\n";
      });
      if (c.count) std::cout << kept << "\n";
      return 0;
    }
    if (*pieces) {
      auto [i, m] = parse_split(split);
      auto n = generate_5pieces(
          pn, [&](const FivePiece& p) { if (!c.count) std::cout << write_graph6(p.graph) << "\n"; }, i, m);
      if (c.count) std::cout << n << "\n";
      return 0;
    }
    if (*ham) {
      return run_stream(c, [&](const Item& it) { return ham_one(it, show_cycle, budget, relabel, seed); },
                        {"HAM", "NONHAM", "UNDECIDED"});
    }
    if (*classify) {
      if (piece_mode) {
        return run_stream(c, classify_piece, {"total", "class0", "class1", "class2", "c1_minus_c2"});
      }
      auto rule = rule_name == "some-path-uncovered" ? Type1Rule::SomeUncovered : Type1Rule::AtMostTwoCovered;
      std::cout << "# type1_rule=" << type1_rule_name(rule) << "\n";
      std::cout << "# graph6\tham\ttype1\ttype2\tforced\tforbidden\n";
      return run_stream(c, [&](const Item& it) { return classify_one(it, rule); }, {"ham", "nonham"});
    }
    if (*red) {
      return run_stream(c, reduce_one, {"graphs", "reducible", "sites", "tuples", "without_extendable"});
    }
    if (*props) {
      if (!c.count) std::cout << "# graph6\tn\tgirth\tbipartite\t3-connected\tcyclic_connectivity\n";
      return run_stream(c, props_one, {});
    }
    if (*cuts) {
      return run_stream(c, [&](const Item& it) { return cuts_one(it, k); }, {"cuts"});
    }
    if (*triple) {
      auto g = load_graph(base);
      if (list_pairs) {
        for (auto [v, e] : triple_pairs(g)) {
          std::cout << v << "\t" << g.edge(e).u << "\t" << g.edge(e).v << "\n";
        }
        return 0;
      }
      TripleSpec spec{g, tv, {}, load_multigraph(mg)};
      if (tv < 0 || txy.size() != 2) {
        auto pairs = triple_pairs(g);
        if (pairs.empty()) throw GraphError("base graph has no usable (v, e) pair");
        spec.v = pairs[0].first;
        spec.e = g.edge(pairs[0].second);
        // x is the end that avoids the 4-cuts
        if (!validate_triple_spec(spec).ok) std::swap(spec.e.u, spec.e.v);
      } else {
        spec.e = Edge{txy[0], txy[1]};
      }
      std::cout << write_graph6(triple_operation(spec)) << "\n";
      return 0;
    }
    if (*infl) {
      std::cout << write_graph6(inflate(load_graph(outer), load_graph(inner))) << "\n";
      return 0;
    }
    if (*named) {
      if (key.empty()) {
        for (const auto& info : named_graphs()) {
          std::cout << info.key << "\t" << info.hog_id << "\t" << info.order << "\t"
                    << (info.available ? "available" : "missing") << "\n";
        }
        return 0;
      }
      std::cout << write_graph6(named_graph(key)) << "\n";
      return 0;
    }
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIntegrity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
