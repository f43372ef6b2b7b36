#pragma once
// Encoders from problem instances to oscillator networks and decoders from
// settled states back to problem witnesses.
//
// Kinds that reduce through another kind (set packing -> clique, hitting set
// -> set cover, ...) are rewritten index-preservingly first, so one decoder
// per built kind suffices and witnesses map straight back to the source.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscopt/counts.hpp"
#include "oscopt/instances.hpp"
#include "oscopt/netbuilder.hpp"

namespace oscopt {

struct EncodeOptions {
  bool merge_bias = false;                       // clause-source style
  ClauseWeights weights = default_clause_weights();
};

/// Which of the four network shapes encode() produced.
enum class NetworkForm : std::uint8_t { clause, direct, maze, gate };

struct ReductionArtifact {
  ProblemInstance source;  // as handed to encode()
  ProblemInstance built;   // after delegation (== source for direct kinds)

  NetworkForm form = NetworkForm::clause;
  bool trivially_unsat = false;  // decided before any network was built
  std::string note;              // reason for a trivial verdict

  double scale = 1.0;  // clause-side weight scale in use

  SatNetwork sat;        // form == clause
  CouplingGraph direct;  // form == direct (also the empty trivial network)
  MazeNetwork maze;      // form == maze
  GateNetwork gate;      // form == gate

  std::vector<int> decision_nodes;  // direct form: witness-bearing nodes
  int core_bits = 0;  // width of the canonical enumeration (state_for_bits)

  long long energy_and_pairs = 0;
  long long objective_connections = 0;  // product + sum term records

  const CouplingGraph& graph() const;
  CouplingGraph& graph();
};

/// Compiles an instance.  Detects outright-unsatisfiable inputs (an empty
/// clause, an uncoverable element, an odd partition total) and returns a
/// trivially_unsat artifact with no network instead of throwing.
ReductionArtifact encode(const ProblemInstance& inst,
                         const EncodeOptions& options = {});

struct DecodedSolution {
  bool feasible = false;
  nlohmann::json witness;  // kind-specific; null when infeasible
  std::optional<double> objective;
};

/// Reads a settled network state back as a witness of the *source* problem.
/// Feasibility here means the state is a valid certificate; it is checked
/// combinatorially, never inferred from energies.
DecodedSolution decode_artifact(const ReductionArtifact& art,
                                const PottsState& s);

/// Canonical network state for `bits` over the artifact's core decision
/// variables (clause networks: formula variables, with dependent variables
/// such as the edge-retention indicators completed canonically; direct
/// networks: the decision nodes).  bits.size() must equal core_bits.
PottsState state_for_bits(const ReductionArtifact& art,
                          const std::vector<bool>& bits);

/// Exact counts of what encode() built, shaped like predict_resources().
CountReport measure_resources(const ReductionArtifact& art);

}  // namespace oscopt
