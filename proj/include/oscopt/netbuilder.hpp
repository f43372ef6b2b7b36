#pragma once
// Compilers from problem structure to coupling graphs:
//   * clause networks for CNF formulas (split or merged sources),
//   * product-term and sum-term energy fragments for objectives,
//   * maze / flow networks,
//   * two-phase logic gates.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "oscopt/clause_net.hpp"
#include "oscopt/cnf.hpp"
#include "oscopt/graph.hpp"

namespace oscopt {

struct SatNetworkOptions {
  ClauseWeights weights = default_clause_weights();
  bool merge_bias = false;  // replace F/T/B clause sources with one bias node
  double scale = 1.0;       // homogeneous scaling of every clause-side weight
};

/// A compiled clause network.  Node layout, in order: variable nodes x_i,
/// negation nodes nx_i, the Blue and True sources, the False source (split
/// mode only), clause nodes r_j, then one bias source per distinct clause
/// length (merged mode only).
///
/// For a formula with v variables and c clauses of one common length, node
/// and connection counts are 2v+c+3 and 3v+6c+3 (split) / 3v+4c+3 (merged);
/// with D distinct lengths the merged variant has 2v+c+2+D nodes.
struct SatNetwork {
  CouplingGraph graph;
  CnfFormula formula;
  SatNetworkOptions options;
  std::vector<int> var_node;      // x_i
  std::vector<int> neg_node;      // nx_i
  std::vector<int> clause_node;   // r_j
  int blue_node = -1;
  int true_node = -1;
  int false_node = -1;                  // -1 in merged mode
  std::map<int, int> bias_node;         // clause length -> node (merged mode)
  std::map<int, CertifiedClauseWeights> certified;  // per clause length

  /// Variable values read off the x_i labels (B decodes as false).
  std::vector<bool> decode(const PottsState& s) const;

  /// Full network state consistent with an assignment: x/nx complementary,
  /// every satisfied clause node at B, every unsatisfied one at F.
  PottsState state_for_assignment(const std::vector<bool>& assignment) const;
};

/// Compiles a CNF formula.  Throws UnsatisfiableError on an empty clause and
/// std::domain_error when some clause length cannot be certified.
SatNetwork build_sat_network(const CnfFormula& f,
                             const SatNetworkOptions& options = {});

// ---------------------------------------------------------------------------
// Objective fragments on Blue-restricted (two-phase) decision nodes.
// With x = 1 for T and 0 for F:
//   product term (i, j, w): adds energy w * (3 x_i x_j - 1)
//   sum term (i, c):        adds energy c * (1.5 x_i - 0.5)
// so a weight of q/2 per product term and c per sum term realizes
// 1.5 * (sum q x_i x_j + sum c x_i) + constant.

struct QuadraticTerm {
  int i = 0, j = 0;
  double w = 0.0;
};

/// One F-clamped auxiliary per distinct pair; terms on the same pair merge by
/// weight summation first.  Pattern per pair: (i,j,+w), (i,aux,-w), (j,aux,-w).
/// Returns the auxiliary node of each merged pair.
std::vector<int> add_energy_and(CouplingGraph& g,
                                std::vector<QuadraticTerm> terms);

/// Standalone fragment over `num_nodes` free nodes (for direct inspection).
CouplingGraph build_energy_and(int num_nodes, std::vector<QuadraticTerm> terms);

/// Couples node i to the T-clamped node with weight c per term (i, c); terms
/// on one node merge by summation.
void add_weighted_sum(CouplingGraph& g, int true_node,
                      const std::vector<std::pair<int, double>>& terms);

/// Standalone: nodes 0..coeffs-1 free, last node T-clamped.
CouplingGraph build_weighted_sum(const std::vector<double>& coeffs);

/// Strong positive link from `node` to a B-clamped node: 100x the largest
/// coupling magnitude currently incident on `node` (at least `floor`).
void add_blue_restriction(CouplingGraph& g, int node, int blue_node,
                          double floor = 1.0);

// ---------------------------------------------------------------------------
// Mazes.  Cells are indexed y*width + x; directions 0=N, 1=E, 2=S, 3=W with
// north = decreasing y.  Border sides are implicit walls.

struct MazeSpec {
  int width = 0, height = 0;
  int start = 0, end = 0;
  std::vector<std::array<int, 2>> walls;  // {cell, dir}

  int cells() const { return width * height; }
  int neighbor(int cell, int dir) const;  // -1 outside the grid
  bool open(int cell, int dir) const;     // wall-free and inside
  void validate() const;

  nlohmann::json to_json() const;
  static MazeSpec from_json(const nlohmann::json& j);
};

/// Cells couple to open neighbors with w_n, to the True source with w_t, to a
/// shared F-clamped node with w_n per walled side, and to Blue with the 100x
/// restriction.  Start and end are clamped True.  Requires the local rule
/// "True iff at least two True neighbors": w_t < 0 and w_t > 2 w_n.
struct MazeNetwork {
  CouplingGraph graph;
  MazeSpec spec;
  int true_node = -1, blue_node = -1, wall_node = -1;

  std::vector<int> true_cells(const PottsState& s) const;
  /// Walks the True set from start to end; empty when it is not a single
  /// clean corridor.
  std::vector<int> decode_path(const PottsState& s) const;
};

MazeNetwork build_maze_network(const MazeSpec& spec, double w_n = -1.0,
                               double w_t = -1.5);

// ---------------------------------------------------------------------------
// Logic gates on two-phase (Blue-restricted) oscillators.  Inputs are free
// nodes (clamp to apply signals); the output settles to the gate value.
// XOR and XNOR are not realizable with one output oscillator and are refused.

enum class GateKind : std::uint8_t { and_gate, or_gate, nand_gate, nor_gate,
                                     not_gate, buf_gate, xor_gate, xnor_gate };

const char* gate_name(GateKind k);
GateKind gate_from_name(const std::string& name);

struct GateNetwork {
  CouplingGraph graph;
  GateKind kind;
  std::vector<int> input_nodes;
  int output_node = -1;
  int blue_node = -1;
  int source_node = -1;  // F or T bias on the output; -1 for buf/not

  bool output(const PottsState& s) const;
};

/// num_inputs >= 2 for and/or/nand/nor; exactly 1 for not/buf.
GateNetwork build_logic_gate(GateKind kind, int num_inputs = 2);

/// Expected boolean value, for checking settled outputs.
bool gate_truth(GateKind kind, const std::vector<bool>& inputs);

}  // namespace oscopt
