#pragma once
// Closed-form resource predictions (SAT variable/clause/literal counts for the
// mixed k-SAT and 3-SAT pipelines, oscillator node/connection counts) and the
// published table rows they are checked against.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscopt/instances.hpp"

namespace oscopt {

struct CountRow {
  long long v = 0;        // variables
  long long c = 0;        // clauses
  long long l_total = 0;  // total literal count

  double l_avg() const { return c > 0 ? static_cast<double>(l_total) / c : 0.0; }
  bool operator==(const CountRow&) const = default;
};

/// One published table row evaluated next to the value our build produces.
/// `matches` is false where the published formula disagrees with the
/// construction it describes; `note` says how.
struct TableComparison {
  std::string table;  // e.g. "hamilton-path"
  std::string row;    // e.g. "#c mixed"
  double published = 0.0;
  double derived = 0.0;
  bool matches = false;
  std::string note;
};

struct CountReport {
  CountRow mixed;      // clause part as emitted (heterogeneous lengths)
  CountRow three_sat;  // after the standard 3-SAT conversion

  long long nodes = 0;        // oscillator network, split sources
  long long connections = 0;  // coupling records, split sources
  long long nodes_merged = 0;
  long long connections_merged = 0;

  long long decision_vars = 0;  // decision variables of the encoding

  std::map<std::string, double> extras;  // kind-specific figures
  std::vector<TableComparison> tables;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Exact predicted counts for the encoder of `inst.kind`; every figure must
/// equal the measured output of encode() on the same instance.  Throws
/// std::invalid_argument outside a formula's stated assumptions (e.g. clique
/// with n <= 3).
CountReport predict_resources(const ProblemInstance& inst);

/// v/c/l of a formula and of its 3-SAT conversion, by pure arithmetic on the
/// clause-length histogram.
CountRow mixed_row(const CnfFormula& f);
CountRow three_sat_row(const CnfFormula& f);

/// Oscillator counts of a clause network over v variables, c clauses with
/// l_total literals and d distinct clause lengths.
long long sat_nodes_split(long long v, long long c);
long long sat_connections_split(long long v, long long c, long long l_total);
long long sat_nodes_merged(long long v, long long c, long long d);
long long sat_connections_merged(long long v, long long c, long long l_total,
                                 long long d);

}  // namespace oscopt
