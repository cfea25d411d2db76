#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "acceptance.hpp"
#include "graphfair/checkers.hpp"
#include "graphfair/config.hpp"
#include "graphfair/envy.hpp"
#include "graphfair/graph.hpp"
#include "graphfair/instances.hpp"
#include "graphfair/io.hpp"
#include "graphfair/mms.hpp"
#include "graphfair/oracles.hpp"

namespace graphfair::tools {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> params;
  for (const std::string& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("parameter '" + tok + "' is not of the form key=value");
    }
    params[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return params;
}

// Instance arguments resolve as a file path first, then as a catalog name,
// optionally with inline parameters: "thm12_star:n=2,m=5".
Instance resolve_instance(const std::string& token) {
  if (std::filesystem::exists(token)) {
    Instance inst = parse_instance(read_file(token));
    const auto problems = validate(inst);
    if (!problems.empty()) {
      throw std::invalid_argument(token + ": " + problems.front().code + ": " +
                                  problems.front().message);
    }
    return inst;
  }
  std::string name = token;
  std::vector<std::string> tokens;
  const auto colon = token.find(':');
  if (colon != std::string::npos) {
    name = token.substr(0, colon);
    std::istringstream rest(token.substr(colon + 1));
    std::string piece;
    while (std::getline(rest, piece, ',')) tokens.push_back(piece);
  }
  return make_catalog(name, parse_params(tokens));
}

Graph named_graph(const std::string& kind, int m, int a, int b) {
  if (kind == "kab") {
    if (a < 1 || b < 1) throw std::invalid_argument("kab needs --a and --b");
    return complete_bipartite(a, b);
  }
  if (m < 1) throw std::invalid_argument("graph '" + kind + "' needs --m");
  std::vector<std::pair<int, int>> edges;
  if (kind == "path") {
    for (int v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
  } else if (kind == "cycle") {
    if (m < 3) throw std::invalid_argument("a cycle needs at least three vertices");
    for (int v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, m - 1);
  } else if (kind == "star") {
    if (m < 2) throw std::invalid_argument("a star needs at least two vertices");
    for (int v = 1; v < m; ++v) edges.emplace_back(0, v);
  } else if (kind == "complete") {
    for (int u = 0; u < m; ++u) {
      for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    }
  } else {
    throw std::invalid_argument("unknown graph '" + kind +
                                "' (expected a file or path/cycle/star/complete/kab)");
  }
  return Graph(m, std::move(edges));
}

bool is_star_graph(const Graph& g) {
  if (g.vertex_count() < 2 || !g.is_tree()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == g.vertex_count() - 1) return true;
  }
  return false;
}

bool is_biconnected(const Graph& g) {
  return g.vertex_count() >= 3 && block_tree(g).blocks.size() == 1;
}

struct BipartiteShape {
  std::vector<int> left;
  std::vector<int> right;
};

std::optional<BipartiteShape> complete_bipartite_shape(const Graph& g) {
  const int m = g.vertex_count();
  if (m < 2 || g.degree(0) == 0) return std::nullopt;
  std::vector<char> right(m, 0);
  for (int w : g.neighbors(0)) right[w] = 1;
  BipartiteShape shape;
  for (int v = 0; v < m; ++v) (right[v] ? shape.right : shape.left).push_back(v);
  const auto a = shape.left.size();
  const auto b = shape.right.size();
  if (static_cast<std::size_t>(g.edge_count()) != a * b) return std::nullopt;
  for (const auto& [u, v] : g.edges()) {
    if (right[u] == right[v]) return std::nullopt;
  }
  return shape;
}

bool all_additive(const Instance& inst) {
  for (const auto& u : inst.valuations) {
    if (!u.is_additive()) return false;
  }
  return true;
}

struct AllocateOutcome {
  std::string algorithm;
  Allocation allocation;
  int k = -1;  // achieved envy bound, when the algorithm yields one
};

AllocateOutcome run_algorithm(const std::string& name, const Instance& inst) {
  const Graph& g = inst.graph;
  if (name == "tree-gmms") return {name, allocate_tree_gmms(inst), -1};
  if (name == "star") return {name, allocate_star(inst), -1};
  if (name == "path-ips") return {name, allocate_path_ips(inst).allocation, -1};
  if (name == "spanning-tree") return {name, allocate_any_graph(inst), -1};
  if (name == "cut-vertex" || name == "biconnected") {
    if (inst.agents != 2) throw std::invalid_argument(name + " splitting needs exactly two agents");
    const AdditiveValuation* u0 = inst.valuations[0].additive();
    if (u0 == nullptr) {
      throw std::invalid_argument(name + " splitting needs an additive first valuation");
    }
    const ConnectedBipartition parts =
        name == "cut-vertex" ? bipartition_cut_vertex(g, *u0) : bipartition_biconnected(g, *u0);
    return {name, cut_and_choose(parts, inst.valuations[1]), -1};
  }
  if (name == "bipolar-ef1") {
    if (inst.agents != 2) throw std::invalid_argument("the prefix scan needs exactly two agents");
    const auto order = bipolar_if_exists(g);
    if (!order) throw std::invalid_argument("the graph has no bipolar ordering");
    return {name, ef1_two_on_bipolar(*order, inst.valuations[0], inst.valuations[1]), 1};
  }
  if (name == "efk-two") {
    const EfkAllocation res = efk_two_allocate(inst);
    return {name, res.allocation, res.k};
  }
  if (name == "envy-cycle") return {name, envy_cycle_bipartite(inst), 1};
  if (name == "double-round-robin") return {name, double_round_robin(inst), 1};
  throw std::invalid_argument(
      "unknown algorithm '" + name +
      "' (known: tree-gmms, star, path-ips, spanning-tree, cut-vertex, biconnected, "
      "bipolar-ef1, efk-two, envy-cycle, double-round-robin)");
}

// Class detection order: path, star, tree, biconnected, complete bipartite,
// then the general fallback. Empty result means no algorithm carries the
// requested guarantee for this instance.
std::string pick_algorithm(const Instance& inst, const std::string& goal) {
  const Graph& g = inst.graph;
  const int n = inst.agents;
  const int m = g.vertex_count();
  const bool additive = all_additive(inst);
  const auto bipartite = complete_bipartite_shape(g);
  const bool bipartite_fits =
      bipartite.has_value() &&
      n <= static_cast<int>(std::min(bipartite->left.size(), bipartite->right.size()));
  if (goal == "mms") {
    if (g.is_path_graph()) return "tree-gmms";
    if (is_star_graph(g) && additive && n >= 2 && n <= m) return "star";
    if (g.is_tree()) return "tree-gmms";
    if (n == 2 && inst.valuations[0].is_additive()) {
      if (is_biconnected(g)) return "biconnected";
      if (m >= 2 && vertex_connectivity(g) == 1) return "cut-vertex";
    }
    return "spanning-tree";
  }
  if (goal == "ef1") {
    if (n == 2 && bipolar_if_exists(g).has_value()) return "bipolar-ef1";
    if (bipartite_fits) return "envy-cycle";
    return "";
  }
  if (goal == "efk") {
    if (n == 2) return "efk-two";
    if (bipartite_fits) return "envy-cycle";
    return "";
  }
  if (goal == "ips") {
    if (g.is_path_graph() && additive) return "path-ips";
    return "";
  }
  throw std::invalid_argument("unknown goal '" + goal + "' (known: mms, ef1, efk, ips)");
}

int cmd_analyze(const Instance& inst, bool as_json, std::ostream& out) {
  const Graph& g = inst.graph;
  const int m = g.vertex_count();
  const BlockTree bt = block_tree(g);
  const auto bipolar = bipolar_if_exists(g);
  const EfkPlan plan = optimal_efk_two(g);

  std::map<int, bool> linked;
  bool linked_capped = false;
  for (int k = 1; 2 + k <= m; ++k) {
    try {
      linked[k] = is_ab_linked(g, 2, k);
    } catch (const CapExceeded&) {
      linked_capped = true;
      break;
    }
  }

  std::optional<int> connectivity;
  std::optional<DeletionWitness> deletion;
  if (m >= 2) {
    connectivity = vertex_connectivity(g);
    deletion = max_components_single_deletion(g);
  }

  if (as_json) {
    json doc;
    doc["vertices"] = m;
    doc["edge_count"] = g.edge_count();
    doc["connectivity"] = connectivity ? json(*connectivity) : json(nullptr);
    doc["max_components_single_deletion"] =
        deletion ? json{{"components", deletion->components}, {"vertex", deletion->vertex}}
                 : json(nullptr);
    doc["blocks"] = bt.blocks;
    doc["cut_vertices"] = bt.cut_vertices;
    doc["block_tree_is_path"] = bt.is_path();
    doc["bipolar_order"] = bipolar ? json(*bipolar) : json(nullptr);
    doc["k_star"] = plan.k;
    json lj = json::object();
    for (const auto& [k, v] : linked) lj[std::to_string(k)] = v;
    doc["linked_2_k"] = lj;
    doc["linked_capped"] = linked_capped;
    out << doc.dump(2) << '\n';
    return 0;
  }

  out << "vertices: " << m << "\n";
  out << "edges: " << g.edge_count() << "\n";
  if (connectivity) out << "vertex connectivity: " << *connectivity << "\n";
  if (deletion) {
    out << "max components after one deletion: " << deletion->components << " (vertex "
        << deletion->vertex << ")\n";
  }
  out << "blocks: " << bt.blocks.size() << " (sizes";
  for (const auto& blk : bt.blocks) out << ' ' << blk.size();
  out << "); cut vertices: " << bt.cut_vertices.size() << "; block tree is a path: "
      << (bt.is_path() ? "yes" : "no") << "\n";
  out << "bipolar ordering:";
  if (bipolar) {
    for (int v : *bipolar) out << ' ' << v;
    out << "\n";
  } else {
    out << " none\n";
  }
  out << "two-agent envy bound k*: " << plan.k << "\n";
  for (const auto& [k, v] : linked) {
    out << "(2," << k << ")-linked: " << (v ? "yes" : "no") << "\n";
  }
  if (linked_capped) out << "(2,k)-linkedness beyond that skipped: vertex cap\n";
  return 0;
}

int cmd_allocate(const Instance& inst, const std::string& goal, const std::string& forced,
                 const std::string& output, bool as_json, std::ostream& out, std::ostream& err) {
  std::string algorithm = forced;
  if (algorithm.empty()) {
    algorithm = pick_algorithm(inst, goal);
    if (algorithm.empty()) {
      err << "no algorithm with a " << goal << " guarantee applies to this instance\n";
      return 1;
    }
  }
  const AllocateOutcome res = run_algorithm(algorithm, inst);
  const bool connected = is_connected_allocation(inst.graph, res.allocation);

  std::vector<AgentMmsReport> report;
  bool have_shares = true;
  try {
    report = mms_ratio_report(inst, res.allocation);
  } catch (const CapExceeded&) {
    have_shares = false;
  }

  if (!output.empty()) write_file(output, serialize_allocation(res.allocation));

  if (as_json) {
    json doc;
    doc["algorithm"] = res.algorithm;
    doc["allocation"] = json::parse(serialize_allocation(res.allocation));
    doc["connected"] = connected;
    if (res.k >= 0) doc["k"] = res.k;
    json rj = json::array();
    for (int a = 0; a < inst.agents; ++a) {
      json row;
      row["agent"] = a;
      row["value"] = inst.valuations[a].value(res.allocation.bundles[a]).str();
      if (have_shares) {
        row["share"] = report[a].mms.str();
        row["ratio"] = report[a].ratio.str();
      } else {
        row["share"] = nullptr;
        row["ratio"] = nullptr;
      }
      rj.push_back(row);
    }
    doc["report"] = rj;
    if (!output.empty()) doc["written_to"] = output;
    out << doc.dump(2) << '\n';
    return 0;
  }

  out << "algorithm: " << res.algorithm << "\n";
  for (int a = 0; a < inst.agents; ++a) {
    out << "agent " << a << ": goods [";
    const auto& bundle = res.allocation.bundles[a];
    for (std::size_t i = 0; i < bundle.size(); ++i) out << (i ? " " : "") << bundle[i];
    out << "]  value " << inst.valuations[a].value(bundle).str();
    if (have_shares) {
      out << "  share " << report[a].mms.str() << "  ratio " << report[a].ratio.str();
    }
    out << "\n";
  }
  out << "connected: " << (connected ? "yes" : "no") << "\n";
  if (res.k >= 0) out << "envy bound k: " << res.k << "\n";
  if (!output.empty()) out << "allocation written to " << output << "\n";
  return 0;
}

struct CheckOutcome {
  bool pass = false;
  std::string witness;  // empty on pass
  json details = json(nullptr);
};

CheckOutcome run_check(const Instance& inst, const Allocation& alloc, const std::string& criterion) {
  CheckOutcome res;
  if (!is_partition(inst, alloc)) {
    res.witness = "allocation is not a partition of the instance goods";
    res.details = {{"kind", "partition"}};
    return res;
  }
  std::string head = criterion;
  std::string tail;
  const auto colon = criterion.find(':');
  if (colon != std::string::npos) {
    head = criterion.substr(0, colon);
    tail = criterion.substr(colon + 1);
  }
  if (head == "connected") {
    const auto bad = disconnected_bundle(inst.graph, alloc);
    res.pass = !bad.has_value();
    if (bad) {
      res.witness = "bundle of agent " + std::to_string(*bad) + " induces a disconnected subgraph";
      res.details = {{"kind", "disconnected"}, {"agent", *bad}};
    }
    return res;
  }
  if (head == "ef" || head == "ef1" || head == "efk") {
    int k = 0;
    if (head == "ef1") k = 1;
    if (head == "efk") {
      try {
        std::size_t used = 0;
        k = std::stoi(tail, &used);
        if (used != tail.size() || k < 0) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("efk needs a nonnegative integer, as in efk:2");
      }
    }
    const auto bad = efk_violation(inst, alloc, k);
    res.pass = !bad.has_value();
    if (bad) {
      res.witness = "agent " + std::to_string(bad->envious) + " envies agent " +
                    std::to_string(bad->envied) + " even after removing " + std::to_string(k) +
                    " good(s)";
      res.details = {{"kind", "envy"}, {"envious", bad->envious}, {"envied", bad->envied}, {"k", k}};
    }
    return res;
  }
  if (head == "efx") {
    const auto bad = efx_violation(inst, alloc);
    res.pass = !bad.has_value();
    if (bad) {
      res.witness = "agent " + std::to_string(bad->envious) + " envies agent " +
                    std::to_string(bad->envied) + " after removal of some single good";
      res.details = {{"kind", "efx"}, {"envious", bad->envious}, {"envied", bad->envied}};
    }
    return res;
  }
  if (head == "mms") {
    const auto alpha = Rational::parse(tail.empty() ? "1" : tail);
    if (!alpha || alpha->is_negative()) {
      throw std::invalid_argument("mms needs a nonnegative rational fraction, as in mms:3/4");
    }
    const auto report = mms_ratio_report(inst, alloc);
    res.pass = true;
    for (std::size_t a = 0; a < report.size(); ++a) {
      if (report[a].ratio < *alpha) {
        res.pass = false;
        res.witness = "agent " + std::to_string(a) + " has ratio " + report[a].ratio.str() +
                      " below " + alpha->str() + " (value " + report[a].value.str() + ", share " +
                      report[a].mms.str() + ")";
        res.details = {{"kind", "mms"},
                       {"agent", a},
                       {"ratio", report[a].ratio.str()},
                       {"threshold", alpha->str()}};
        break;
      }
    }
    return res;
  }
  if (head == "ips") {
    res.pass = true;
    for (int a = 0; a < inst.agents; ++a) {
      const AdditiveValuation* u = inst.valuations[a].additive();
      if (u == nullptr) {
        throw std::invalid_argument("the proportional share test needs additive valuations");
      }
      if (!is_ips_bundle(*u, alloc.bundles[a], inst.agents, a)) {
        res.pass = false;
        res.witness = "agent " + std::to_string(a) + " falls below her proportional share bound";
        res.details = {{"kind", "ips"}, {"agent", a}};
        break;
      }
    }
    return res;
  }
  throw std::invalid_argument("unknown criterion '" + criterion +
                              "' (known: connected, ef, ef1, efk:K, efx, mms:A, ips)");
}

int cmd_oracle(const Instance& inst, const std::string& what, bool as_json, std::ostream& out) {
  json results = json::array();
  std::ostringstream text;
  for (int a = 0; a < inst.agents; ++a) {
    const Valuation& u = inst.valuations[a];
    if (what == "mms" || what == "gmms") {
      const PartitionResult r = what == "mms" ? exact_mms(u, inst.agents)
                                              : exact_gmms(inst.graph, u, inst.agents);
      results.push_back({{"agent", a}, {"value", r.value.str()}, {"parts", r.bundles}});
      text << "agent " << a << ": " << r.value.str() << "  parts";
      for (const auto& p : r.bundles) {
        text << " [";
        for (std::size_t i = 0; i < p.size(); ++i) text << (i ? " " : "") << p[i];
        text << "]";
      }
      text << "\n";
    } else if (what == "poc-ratio") {
      const Rational r = poc_ratio(inst.graph, u, inst.agents);
      results.push_back({{"agent", a}, {"value", r.str()}});
      text << "agent " << a << ": " << r.str() << "\n";
    } else {
      throw std::invalid_argument("unknown oracle '" + what + "' (known: mms, gmms, poc-ratio)");
    }
  }
  if (as_json) {
    out << json{{"what", what}, {"results", results}}.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return 0;
}

int cmd_bench(bool as_json, std::ostream& out) {
  if (as_json) {
    const auto results = run_acceptance(nullptr);
    const auto rows = ratio_table();
    bool pass = true;
    json cj = json::array();
    for (const auto& r : results) {
      pass = pass && r.pass;
      cj.push_back({{"id", r.id},
                    {"name", r.name},
                    {"pass", r.pass},
                    {"seconds", r.seconds},
                    {"detail", r.detail}});
    }
    json tj = json::array();
    for (const auto& r : rows) {
      pass = pass && r.match;
      tj.push_back({{"family", r.family},
                    {"regime", r.regime},
                    {"bound", r.bound},
                    {"witness", r.witness},
                    {"computed", r.computed},
                    {"match", r.match}});
    }
    out << json{{"criteria", cj}, {"ratios", tj}, {"pass", pass}}.dump(2) << '\n';
    return pass ? 0 : 1;
  }
  const auto results = run_acceptance(&out);
  out << '\n';
  const auto rows = ratio_table();
  print_ratio_table(rows, out);
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  for (const auto& r : rows) pass = pass && r.match;
  out << '\n' << (pass ? "all criteria pass" : "FAILURES above") << '\n';
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (const char* cap_text = std::getenv("GRAPHFAIR_CAP")) {
    int cap = 0;
    std::istringstream in(cap_text);
    char extra = 0;
    if (!(in >> cap) || in.get(extra) || cap < 1) {
      err << "GRAPHFAIR_CAP must be a positive integer, got '" << cap_text << "'\n";
      return 2;
    }
    apply_cap_override(cap);
  }

  CLI::App app{"fair division of graph-connected goods"};
  app.require_subcommand(1);

  std::string inst_arg;
  std::string alloc_arg;
  std::string goal;
  std::string algorithm;
  std::string output;
  std::string criterion;
  std::string what;
  std::string graph_arg;
  std::string gen_name;
  std::vector<std::string> gen_params;
  bool as_json = false;
  int opt_m = 0;
  int opt_a = 0;
  int opt_b = 0;
  int opt_n = 0;
  int max_value = 8;
  long long budget = 200000;
  std::uint64_t seed = 1;
  std::string bench_what;

  CLI::App* analyze = app.add_subcommand("analyze", "structural summary of an instance graph");
  analyze->add_option("instance", inst_arg, "instance file or catalog name")->required();
  analyze->add_flag("--json", as_json, "machine readable output");

  CLI::App* allocate = app.add_subcommand("allocate", "compute a fair connected allocation");
  allocate->add_option("instance", inst_arg, "instance file or catalog name")->required();
  allocate->add_option("--goal", goal, "mms, ef1, efk or ips")->required();
  allocate->add_option("--algorithm", algorithm, "force a specific algorithm");
  allocate->add_option("-o,--output", output, "write the allocation to this file");
  allocate->add_flag("--json", as_json, "machine readable output");

  CLI::App* check = app.add_subcommand("check", "test an allocation against a fairness criterion");
  check->add_option("instance", inst_arg, "instance file or catalog name")->required();
  check->add_option("allocation", alloc_arg, "allocation file")->required();
  check->add_option("--criterion", criterion, "connected, ef, ef1, efk:K, efx, mms:A or ips")
      ->required();
  check->add_flag("--json", as_json, "machine readable output");

  CLI::App* oracle = app.add_subcommand("oracle", "exact shares by exhaustive search");
  oracle->add_option("instance", inst_arg, "instance file or catalog name")->required();
  oracle->add_option("--what", what, "mms, gmms or poc-ratio")->required();
  oracle->add_flag("--json", as_json, "machine readable output");

  CLI::App* search = app.add_subcommand("oracle-search", "search valuations for a low ratio");
  search->add_option("graph", graph_arg, "instance file or path/cycle/star/complete/kab")
      ->required();
  search->add_option("--n", opt_n, "number of agents")->required();
  search->add_option("--m", opt_m, "vertex count for named graphs");
  search->add_option("--a", opt_a, "left side size for kab");
  search->add_option("--b", opt_b, "right side size for kab");
  search->add_option("--max-value", max_value, "largest integer good value (default 8)");
  search->add_option("--budget", budget, "ratio evaluation budget (default 200000)");
  search->add_option("--seed", seed, "random seed (default 1)");
  search->add_flag("--json", as_json, "machine readable output");

  bool gen_list = false;
  CLI::App* gen = app.add_subcommand("gen", "write a catalog instance");
  gen->add_option("name", gen_name, "catalog name (see --list)");
  gen->add_option("params", gen_params, "key=value parameters");
  gen->add_option("-o,--output", output, "write the instance to this file");
  gen->add_flag("--list", gen_list, "print the catalog and exit");
  gen->add_flag("--json", as_json, "machine readable output");

  CLI::App* bench = app.add_subcommand("bench", "run the acceptance suite and ratio table");
  bench->add_option("what", bench_what, "'paper' runs the full suite")->required();
  bench->add_flag("--json", as_json, "machine readable output");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("graphfair");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(resolve_instance(inst_arg), as_json, out);
    if (app.got_subcommand(allocate)) {
      return cmd_allocate(resolve_instance(inst_arg), goal, algorithm, output, as_json, out, err);
    }
    if (app.got_subcommand(check)) {
      const Instance inst = resolve_instance(inst_arg);
      const Allocation alloc = parse_allocation(read_file(alloc_arg));
      const CheckOutcome res = run_check(inst, alloc, criterion);
      if (as_json) {
        json doc{{"criterion", criterion}, {"pass", res.pass}};
        doc["witness"] = res.pass ? json(nullptr) : json(res.witness);
        doc["details"] = res.details;
        out << doc.dump(2) << '\n';
      } else {
        out << (res.pass ? "pass" : "fail: " + res.witness) << '\n';
      }
      return res.pass ? 0 : 1;
    }
    if (app.got_subcommand(oracle)) return cmd_oracle(resolve_instance(inst_arg), what, as_json, out);
    if (app.got_subcommand(search)) {
      Graph g;
      if (std::filesystem::exists(graph_arg)) {
        g = resolve_instance(graph_arg).graph;
      } else {
        g = named_graph(graph_arg, opt_m, opt_a, opt_b);
      }
      const PocSearchResult res = poc_search(g, opt_n, max_value, budget, seed);
      if (as_json) {
        json values = json::array();
        for (const Rational& v : res.values) values.push_back(v.str());
        out << json{{"ratio", res.ratio.str()},
                    {"values", values},
                    {"evaluations", res.evaluations},
                    {"exhaustive", res.exhaustive}}
                   .dump(2)
            << '\n';
      } else {
        out << "ratio: " << res.ratio.str() << "\nvalues:";
        for (const Rational& v : res.values) out << ' ' << v.str();
        out << "\nevaluations: " << res.evaluations
            << "\nexhaustive: " << (res.exhaustive ? "yes" : "no") << '\n';
      }
      return 0;
    }
    if (app.got_subcommand(gen)) {
      if (gen_list) {
        for (const std::string& entry : catalog_names()) out << entry << '\n';
        return 0;
      }
      if (gen_name.empty()) {
        err << "gen needs a catalog name (or --list)\n";
        return 2;
      }
      std::string name = gen_name;
      std::vector<std::string> tokens = gen_params;
      const auto colon = gen_name.find(':');
      if (colon != std::string::npos) {
        name = gen_name.substr(0, colon);
        std::istringstream rest(gen_name.substr(colon + 1));
        std::string piece;
        while (std::getline(rest, piece, ',')) tokens.push_back(piece);
      }
      const Instance inst = make_catalog(name, parse_params(tokens));
      const std::string text = serialize_instance(inst);
      if (!output.empty()) {
        write_file(output, text);
        out << "instance written to " << output << '\n';
      } else {
        out << text << '\n';
      }
      return 0;
    }
    if (app.got_subcommand(bench)) {
      if (bench_what != "paper") {
        err << "unknown bench target '" << bench_what << "' (known: paper)\n";
        return 2;
      }
      return cmd_bench(as_json, out);
    }
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const GuaranteeViolation& e) {
    err << "internal guarantee violated: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace graphfair::tools
