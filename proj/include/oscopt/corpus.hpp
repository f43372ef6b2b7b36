#pragma once
// Built-in test fixtures: at least five deterministic instances per problem
// kind, mixing feasible and infeasible cases, all small enough for the
// brute-force oracle and exhaustive state checks.

#include <vector>

#include "oscopt/instances.hpp"

namespace oscopt {

std::vector<ProblemInstance> corpus_fixtures(ProblemKind kind);
std::vector<ProblemInstance> full_corpus();

}  // namespace oscopt
