#include "oscopt/instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oscopt {
namespace {

struct KindName {
  ProblemKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {ProblemKind::sat, "sat"},
    {ProblemKind::ip01, "ip01"},
    {ProblemKind::hamilton_path, "hamilton-path"},
    {ProblemKind::hamilton_circle, "hamilton-circle"},
    {ProblemKind::tsp, "tsp"},
    {ProblemKind::clique, "clique"},
    {ProblemKind::set_packing, "set-packing"},
    {ProblemKind::node_cover, "node-cover"},
    {ProblemKind::set_cover, "set-cover"},
    {ProblemKind::chromatic_number, "chromatic-number"},
    {ProblemKind::feedback_node_set, "feedback-node-set"},
    {ProblemKind::feedback_arc_set, "feedback-arc-set"},
    {ProblemKind::clique_cover, "clique-cover"},
    {ProblemKind::exact_cover, "exact-cover"},
    {ProblemKind::hitting_set, "hitting-set"},
    {ProblemKind::three_dim_matching, "3d-matching"},
    {ProblemKind::number_partitioning, "number-partitioning"},
    {ProblemKind::knapsack, "knapsack"},
    {ProblemKind::graph_partitioning, "graph-partitioning"},
    {ProblemKind::min_cut, "min-cut"},
    {ProblemKind::independent_set, "independent-set"},
    {ProblemKind::max_cut, "max-cut"},
    {ProblemKind::maze, "maze"},
    {ProblemKind::shortest_path, "shortest-path"},
    {ProblemKind::logic_gate, "logic-gate"},
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

const char* kind_name(ProblemKind k) {
  for (const auto& e : kKindNames)
    if (e.kind == k) return e.name;
  throw std::invalid_argument("unknown problem kind");
}

ProblemKind kind_from_name(const std::string& name) {
  for (const auto& e : kKindNames)
    if (name == e.name) return e.kind;
  throw std::invalid_argument("unknown problem kind: " + name);
}

const std::vector<ProblemKind>& all_problem_kinds() {
  static const std::vector<ProblemKind> kinds = [] {
    std::vector<ProblemKind> v;
    for (const auto& e : kKindNames) v.push_back(e.kind);
    return v;
  }();
  return kinds;
}

bool GraphData::has_edge(int u, int v) const {
  for (const auto& e : edges) {
    if (e[0] == u && e[1] == v) return true;
    if (!directed && e[0] == v && e[1] == u) return true;
  }
  return false;
}

std::vector<std::vector<int>> GraphData::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : edges) {
    adj[static_cast<size_t>(e[0])].push_back(e[1]);
    if (!directed) adj[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

GraphData GraphData::complement() const {
  if (directed) throw std::invalid_argument("complement of a directed graph");
  GraphData g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!has_edge(u, v)) g.edges.push_back({u, v});
  return g;
}

void GraphData::validate() const {
  require(n >= 0, "graph: negative vertex count");
  require(weights.empty() || weights.size() == edges.size(),
          "graph: weights must parallel edges");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    require(e[0] >= 0 && e[0] < n && e[1] >= 0 && e[1] < n,
            "graph: edge endpoint out of range");
    require(e[0] != e[1], "graph: self-loop");
    auto key = directed ? std::make_pair(e[0], e[1])
                        : std::make_pair(std::min(e[0], e[1]),
                                         std::max(e[0], e[1]));
    require(seen.insert(key).second, "graph: duplicate edge");
  }
  for (double w : weights)
    require(std::isfinite(w), "graph: non-finite edge weight");
}

void ProblemInstance::validate() const {
  auto check_subsets = [&](int universe) {
    for (const auto& s : subsets) {
      std::set<int> uniq(s.begin(), s.end());
      require(uniq.size() == s.size(), "set system: repeated element in a set");
      for (int e : s)
        require(e >= 0 && e < universe, "set system: element out of range");
    }
  };
  switch (kind) {
    case ProblemKind::sat:
      break;
    case ProblemKind::ip01: {
      require(!C.empty(), "ip01: no constraint rows");
      require(C.size() == b.size(), "ip01: row/rhs count mismatch");
      size_t n = C.front().size();
      require(n > 0, "ip01: empty rows");
      for (const auto& row : C)
        require(row.size() == n, "ip01: ragged constraint matrix");
      if (!a.empty()) {
        require(a.size() == n, "ip01: objective length mismatch");
        require(lambda > 0.0 && lambda < 1.0, "ip01: lambda must be in (0,1)");
      }
      break;
    }
    case ProblemKind::hamilton_path:
    case ProblemKind::hamilton_circle:
      graph.validate();
      require(graph.n >= 2, "hamilton: need at least two vertices");
      break;
    case ProblemKind::tsp: {
      int n = static_cast<int>(tsp_weights.size());
      require(n >= 3, "tsp: need at least three cities");
      for (int i = 0; i < n; ++i) {
        require(static_cast<int>(tsp_weights[static_cast<size_t>(i)].size()) ==
                    n,
                "tsp: weight matrix must be square");
        for (int j = 0; j < n; ++j) {
          double w = tsp_weights[static_cast<size_t>(i)][static_cast<size_t>(j)];
          require(std::isfinite(w) && w >= 0.0, "tsp: weights must be >= 0");
          require(w == tsp_weights[static_cast<size_t>(j)][static_cast<size_t>(
                           i)],
                  "tsp: weight matrix must be symmetric");
        }
        require(tsp_weights[static_cast<size_t>(i)][static_cast<size_t>(i)] ==
                    0.0,
                "tsp: diagonal must be zero");
      }
      break;
    }
    case ProblemKind::clique:
    case ProblemKind::independent_set:
      graph.validate();
      require(!graph.directed, "undirected graph expected");
      require(k.has_value() && *k >= 0 && *k <= graph.n, "k out of range");
      break;
    case ProblemKind::node_cover:
      graph.validate();
      require(k.has_value() && *k >= 0 && *k <= graph.n, "k out of range");
      break;
    case ProblemKind::set_packing:
      require(k.has_value() && *k >= 1, "set-packing: need k >= 1");
      check_subsets(universe_size);
      break;
    case ProblemKind::set_cover:
      require(universe_size >= 1, "set-cover: empty universe");
      require(lambda > 0.0 && lambda < 1.0, "set-cover: lambda in (0,1)");
      check_subsets(universe_size);
      break;
    case ProblemKind::chromatic_number:
    case ProblemKind::clique_cover:
      graph.validate();
      require(!graph.directed, "undirected graph expected");
      if (k) require(*k >= 1, "need k >= 1");
      break;
    case ProblemKind::feedback_node_set:
    case ProblemKind::feedback_arc_set:
      graph.validate();
      require(graph.directed, "feedback problems need a directed graph");
      require(lambda > 0.0 && lambda < 1.0, "lambda must be in (0,1)");
      break;
    case ProblemKind::exact_cover:
      require(universe_size >= 1, "exact-cover: empty universe");
      check_subsets(universe_size);
      break;
    case ProblemKind::hitting_set:
      require(k.has_value() && *k >= 0, "hitting-set: need k >= 0");
      require(!subsets.empty(), "hitting-set: no sets to hit");
      check_subsets(universe_size);
      break;
    case ProblemKind::three_dim_matching:
      require(t_size >= 1, "3d-matching: empty ground set");
      for (const auto& tr : triples)
        for (int c : tr)
          require(c >= 0 && c < t_size, "3d-matching: coordinate out of range");
      break;
    case ProblemKind::number_partitioning:
      require(!numbers.empty(), "number-partitioning: empty set");
      for (long long v : numbers)
        require(v > 0, "number-partitioning: entries must be positive");
      break;
    case ProblemKind::knapsack:
      require(!a.empty(), "knapsack: no item weights");
      require(b.size() == 1, "knapsack: need one target");
      break;
    case ProblemKind::graph_partitioning:
      graph.validate();
      require(!graph.directed, "undirected graph expected");
      require(graph.n % 2 == 0, "graph-partitioning: |V| must be even");
      break;
    case ProblemKind::min_cut:
      graph.validate();
      require(!graph.directed, "undirected graph expected");
      require(graph.n >= 2, "min-cut: need at least two vertices");
      break;
    case ProblemKind::max_cut:
      graph.validate();
      require(!graph.directed, "undirected graph expected");
      break;
    case ProblemKind::maze:
      maze_spec.validate();
      break;
    case ProblemKind::shortest_path:
      graph.validate();
      require(s >= 0 && s < graph.n && t >= 0 && t < graph.n,
              "shortest-path: endpoint out of range");
      require(k.has_value() && *k >= 1, "shortest-path: need position budget k >= 1");
      break;
    case ProblemKind::logic_gate: {
      int expected = (gate == GateKind::not_gate || gate == GateKind::buf_gate)
                         ? 1
                         : 2;
      require(static_cast<int>(gate_inputs.size()) >= expected,
              "logic-gate: missing inputs");
      break;
    }
  }
}

nlohmann::json ProblemInstance::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = kind_name(kind);
  if (!name.empty()) j["name"] = name;
  auto graph_json = [&] {
    nlohmann::json g;
    g["num_vertices"] = graph.n;
    g["edges"] = graph.edges;
    if (graph.directed) g["directed"] = true;
    if (!graph.weights.empty()) g["weights"] = graph.weights;
    return g;
  };
  switch (kind) {
    case ProblemKind::sat: {
      j["num_vars"] = cnf.num_vars();
      j["clauses"] = cnf.clauses();
      break;
    }
    case ProblemKind::ip01:
      j["C"] = C;
      j["b"] = b;
      if (!a.empty()) {
        j["a"] = a;
        j["lambda"] = lambda;
      }
      break;
    case ProblemKind::hamilton_path:
    case ProblemKind::hamilton_circle:
      j["graph"] = graph_json();
      break;
    case ProblemKind::tsp:
      j["weights"] = tsp_weights;
      if (k) j["k"] = *k;
      break;
    case ProblemKind::clique:
    case ProblemKind::node_cover:
    case ProblemKind::independent_set:
      j["graph"] = graph_json();
      j["k"] = *k;
      break;
    case ProblemKind::set_packing:
    case ProblemKind::hitting_set:
      j["universe_size"] = universe_size;
      j["subsets"] = subsets;
      j["k"] = *k;
      break;
    case ProblemKind::set_cover:
      j["universe_size"] = universe_size;
      j["subsets"] = subsets;
      j["lambda"] = lambda;
      if (k) j["k"] = *k;
      break;
    case ProblemKind::exact_cover:
      j["universe_size"] = universe_size;
      j["subsets"] = subsets;
      break;
    case ProblemKind::chromatic_number:
    case ProblemKind::clique_cover:
      j["graph"] = graph_json();
      if (k) j["k"] = *k;
      break;
    case ProblemKind::feedback_node_set:
    case ProblemKind::feedback_arc_set:
      j["graph"] = graph_json();
      j["lambda"] = lambda;
      if (k) j["k"] = *k;
      break;
    case ProblemKind::three_dim_matching:
      j["t_size"] = t_size;
      j["triples"] = triples;
      break;
    case ProblemKind::number_partitioning:
      j["numbers"] = numbers;
      break;
    case ProblemKind::knapsack:
      j["a"] = a;
      j["b"] = b.front();
      break;
    case ProblemKind::graph_partitioning:
    case ProblemKind::min_cut:
    case ProblemKind::max_cut:
      j["graph"] = graph_json();
      if (k) j["k"] = *k;
      break;
    case ProblemKind::maze:
      j["maze"] = maze_spec.to_json();
      break;
    case ProblemKind::shortest_path:
      j["graph"] = graph_json();
      j["s"] = s;
      j["t"] = t;
      j["k"] = *k;
      break;
    case ProblemKind::logic_gate:
      j["gate"] = gate_name(gate);
      j["inputs"] = gate_inputs;
      break;
  }
  return j;
}

ProblemInstance ProblemInstance::from_json(const nlohmann::json& j) {
  require(j.is_object(), "instance: expected a JSON object");
  require(j.value("schema", 0) == 1, "instance: unsupported schema");
  require(j.contains("kind"), "instance: missing kind");
  ProblemInstance inst;
  inst.kind = kind_from_name(j.at("kind").get<std::string>());
  inst.name = j.value("name", std::string());
  auto read_graph = [&](const nlohmann::json& g) {
    GraphData gd;
    gd.n = g.at("num_vertices").get<int>();
    gd.directed = g.value("directed", false);
    gd.edges = g.value("edges", std::vector<std::array<int, 2>>{});
    gd.weights = g.value("weights", std::vector<double>{});
    return gd;
  };
  if (j.contains("graph")) inst.graph = read_graph(j.at("graph"));
  if (j.contains("k")) inst.k = j.at("k").get<int>();
  inst.lambda = j.value("lambda", 0.5);
  switch (inst.kind) {
    case ProblemKind::sat: {
      inst.cnf.set_num_vars(j.value("num_vars", 0));
      for (const auto& cl : j.at("clauses"))
        inst.cnf.add_clause(cl.get<std::vector<int>>());
      break;
    }
    case ProblemKind::ip01:
      inst.C = j.at("C").get<std::vector<std::vector<long long>>>();
      inst.b = j.at("b").get<std::vector<long long>>();
      if (j.contains("a")) inst.a = j.at("a").get<std::vector<long long>>();
      break;
    case ProblemKind::tsp:
      inst.tsp_weights = j.at("weights").get<std::vector<std::vector<double>>>();
      break;
    case ProblemKind::set_packing:
    case ProblemKind::set_cover:
    case ProblemKind::exact_cover:
    case ProblemKind::hitting_set:
      inst.universe_size = j.at("universe_size").get<int>();
      inst.subsets = j.at("subsets").get<std::vector<std::vector<int>>>();
      break;
    case ProblemKind::three_dim_matching:
      inst.t_size = j.at("t_size").get<int>();
      inst.triples = j.at("triples").get<std::vector<std::array<int, 3>>>();
      break;
    case ProblemKind::number_partitioning:
      inst.numbers = j.at("numbers").get<std::vector<long long>>();
      break;
    case ProblemKind::knapsack:
      inst.a = j.at("a").get<std::vector<long long>>();
      inst.b = {j.at("b").get<long long>()};
      break;
    case ProblemKind::maze:
      inst.maze_spec = MazeSpec::from_json(j.at("maze"));
      break;
    case ProblemKind::shortest_path:
      inst.s = j.at("s").get<int>();
      inst.t = j.at("t").get<int>();
      break;
    case ProblemKind::logic_gate:
      inst.gate = gate_from_name(j.at("gate").get<std::string>());
      inst.gate_inputs = j.at("inputs").get<std::vector<bool>>();
      break;
    default:
      break;  // graph-only kinds handled above
  }
  inst.validate();
  return inst;
}

ProblemInstance delegate_set_packing(const ProblemInstance& inst) {
  ProblemInstance out;
  out.kind = ProblemKind::clique;
  out.name = inst.name;
  out.k = inst.k;
  // Vertices are the candidate sets; an edge joins two disjoint sets, so a
  // clique of size k is exactly a packing of size k.
  const int m = static_cast<int>(inst.subsets.size());
  out.graph.n = m;
  std::vector<std::set<int>> sets;
  sets.reserve(inst.subsets.size());
  for (const auto& s : inst.subsets) sets.emplace_back(s.begin(), s.end());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      bool disjoint = true;
      for (int e : sets[static_cast<size_t>(i)])
        if (sets[static_cast<size_t>(j)].count(e)) {
          disjoint = false;
          break;
        }
      if (disjoint) out.graph.edges.push_back({i, j});
    }
  }
  out.validate();
  return out;
}

ProblemInstance delegate_independent_set(const ProblemInstance& inst) {
  // S is independent in G exactly when V \ S covers every edge.
  ProblemInstance out;
  out.kind = ProblemKind::node_cover;
  out.name = inst.name;
  out.graph = inst.graph;
  out.k = inst.graph.n - *inst.k;
  out.validate();
  return out;
}

ProblemInstance delegate_hitting_set(const ProblemInstance& inst) {
  // Swap the roles of elements and sets: element e can "cover" collection
  // C_i whenever e is a member, so a hitting set is a set cover of the dual.
  ProblemInstance out;
  out.kind = ProblemKind::set_cover;
  out.name = inst.name;
  out.lambda = inst.lambda;
  out.universe_size = static_cast<int>(inst.subsets.size());
  out.subsets.assign(static_cast<size_t>(inst.universe_size), {});
  for (size_t i = 0; i < inst.subsets.size(); ++i)
    for (int e : inst.subsets[i])
      out.subsets[static_cast<size_t>(e)].push_back(static_cast<int>(i));
  out.validate();
  return out;
}

ProblemInstance delegate_clique_cover(const ProblemInstance& inst) {
  // Color classes of the complement graph are cliques of the original.
  ProblemInstance out;
  out.kind = ProblemKind::chromatic_number;
  out.name = inst.name;
  out.graph = inst.graph.complement();
  out.k = inst.k;
  out.validate();
  return out;
}

ProblemInstance delegate_three_dim_matching(const ProblemInstance& inst) {
  // Flatten each triple into a 3-element subset of a 3q universe; a perfect
  // matching is a packing of q pairwise disjoint such subsets.
  ProblemInstance out;
  out.kind = ProblemKind::set_packing;
  out.name = inst.name;
  const int q = inst.t_size;
  out.universe_size = 3 * q;
  out.subsets.reserve(inst.triples.size());
  for (const auto& t : inst.triples)
    out.subsets.push_back({t[0], q + t[1], 2 * q + t[2]});
  out.k = q;
  out.validate();
  return out;
}

ProblemInstance delegate_number_partitioning(const ProblemInstance& inst) {
  long long sum = 0;
  for (long long v : inst.numbers) sum += v;
  if (sum % 2 != 0)
    throw std::invalid_argument(
        "odd total cannot be split into equal halves");
  ProblemInstance out;
  out.kind = ProblemKind::ip01;
  out.name = inst.name;
  out.C.push_back(inst.numbers);
  out.b.push_back(sum / 2);
  out.validate();
  return out;
}

ProblemInstance delegate_knapsack(const ProblemInstance& inst) {
  ProblemInstance out;
  out.kind = ProblemKind::ip01;
  out.name = inst.name;
  out.C.push_back(inst.a);
  out.b.push_back(inst.b.front());
  out.validate();
  return out;
}

}  // namespace oscopt
