#pragma once
// Exhaustive ground truth, independent of the encoders: every check works
// straight off the problem definition, so encoder and solver output can be
// judged against it.

#include <optional>

#include <json.hpp>

#include "oscopt/instances.hpp"

namespace oscopt {

struct OracleVerdict {
  bool feasible = false;          // does any solution exist
  std::optional<double> optimum;  // optimization kinds only
  nlohmann::json witness;         // one optimal witness; null when infeasible
};

/// Enumerates the instance's native solution space (assignments, subsets,
/// permutations, colorings, height maps, ...).  Throws std::length_error
/// when the space exceeds `budget` states.
OracleVerdict brute_force(const ProblemInstance& inst,
                          long long budget = 1LL << 24);

/// Is this witness a valid certificate for the instance?
bool check_witness(const ProblemInstance& inst, const nlohmann::json& witness);

/// Objective value of a valid witness; nullopt for pure decision kinds.
std::optional<double> witness_objective(const ProblemInstance& inst,
                                        const nlohmann::json& witness);

}  // namespace oscopt
