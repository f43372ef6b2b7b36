#pragma once
// Problem instances for every supported reduction, with a JSON surface
// (schema 1, "kind" discriminator) shared by the CLI, the encoders, the
// resource predictors and the brute-force oracle.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscopt/cnf.hpp"
#include "oscopt/netbuilder.hpp"

namespace oscopt {

enum class ProblemKind : std::uint8_t {
  sat,
  ip01,
  hamilton_path,
  hamilton_circle,
  tsp,
  clique,
  set_packing,
  node_cover,
  set_cover,
  chromatic_number,
  feedback_node_set,
  feedback_arc_set,
  clique_cover,
  exact_cover,
  hitting_set,
  three_dim_matching,
  number_partitioning,
  knapsack,
  graph_partitioning,
  min_cut,
  independent_set,
  max_cut,
  maze,
  shortest_path,
  logic_gate,
};

const char* kind_name(ProblemKind k);
ProblemKind kind_from_name(const std::string& name);
const std::vector<ProblemKind>& all_problem_kinds();

/// Simple graph, 0-based vertices.  Undirected edges are stored once with
/// u < v; directed edges as written.  `weights` (when present) parallels
/// `edges`.
struct GraphData {
  int n = 0;
  bool directed = false;
  std::vector<std::array<int, 2>> edges;
  std::vector<double> weights;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;  // direction-sensitive iff directed
  /// Out-neighbors (directed) / neighbors (undirected), sorted.
  std::vector<std::vector<int>> adjacency() const;
  GraphData complement() const;  // undirected only

  void validate() const;  // rejects self-loops, duplicates, bad indices
};

struct ProblemInstance {
  ProblemKind kind = ProblemKind::sat;
  std::string name;  // optional fixture label

  CnfFormula cnf;  // sat

  // ip01 (rows C x = b), knapsack (a x = b[0]), objective a with lambda
  std::vector<std::vector<long long>> C;
  std::vector<long long> b;
  std::vector<long long> a;
  double lambda = 0.5;

  GraphData graph;  // all graph-shaped kinds
  std::vector<std::vector<double>> tsp_weights;  // n x n symmetric, zero diagonal

  int universe_size = 0;                  // set systems
  std::vector<std::vector<int>> subsets;  // 0-based elements

  int t_size = 0;                            // 3-dimensional matching
  std::vector<std::array<int, 3>> triples;   // 0-based coordinates

  std::vector<long long> numbers;  // number partitioning

  std::optional<int> k;  // target size / color count / position budget

  int s = 0, t = 0;  // shortest path endpoints

  MazeSpec maze_spec;

  GateKind gate = GateKind::and_gate;
  std::vector<bool> gate_inputs;

  /// Structural checks per kind; throws std::invalid_argument.
  void validate() const;

  nlohmann::json to_json() const;
  static ProblemInstance from_json(const nlohmann::json& j);
};

/// Index-preserving rewrites onto the kind that actually gets built.
/// Witness indices of the target instance map one-to-one back to the source.
ProblemInstance delegate_set_packing(const ProblemInstance& inst);
ProblemInstance delegate_independent_set(const ProblemInstance& inst);
ProblemInstance delegate_hitting_set(const ProblemInstance& inst);
ProblemInstance delegate_clique_cover(const ProblemInstance& inst);
ProblemInstance delegate_three_dim_matching(const ProblemInstance& inst);
ProblemInstance delegate_number_partitioning(const ProblemInstance& inst);
ProblemInstance delegate_knapsack(const ProblemInstance& inst);

}  // namespace oscopt
