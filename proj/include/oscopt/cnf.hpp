#pragma once
// CNF formulas with DIMACS I/O and the standard reduction to 3-SAT.

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscopt {

/// Raised where a construction discovers unsatisfiability outright
/// (e.g. an empty clause reaches the network builder).
struct UnsatisfiableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Clauses hold DIMACS-signed literals (variable v in 1..num_vars appears as
/// +v or -v), deduplicated and sorted.  Tautological clauses are rejected;
/// empty clauses are representable (the formula is then trivially
/// unsatisfiable) and refused later by the network builder.
class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<std::vector<int>>& clauses() const { return clauses_; }

  /// Grows num_vars as needed.  Throws on literal 0 or a tautology.
  void add_clause(std::vector<int> literals);
  void set_num_vars(int v);

  /// Adds a fresh variable, returning its (1-based) index.
  int new_var() { return ++num_vars_; }

  long long literal_count() const;
  bool has_empty_clause() const;
  /// clause length -> number of clauses of that length
  std::map<int, int> length_histogram() const;

  /// assignment[v-1] is the value of variable v.
  bool satisfied_by(const std::vector<bool>& assignment) const;
  bool clause_satisfied(int idx, const std::vector<bool>& assignment) const;

  /// Equisatisfiable 3-SAT formula: length-1 clauses gain 2 auxiliaries and
  /// become 4 clauses, length-2 gain 1 auxiliary / 2 clauses, length-3 pass
  /// through, length-L>=4 chain through L-3 auxiliaries into L-2 clauses.
  CnfFormula to_3sat() const;

  /// Original-variable assignment -> one satisfying extension over to_3sat()'s
  /// auxiliaries (when the original assignment satisfies this formula).
  std::vector<bool> extend_to_3sat(const std::vector<bool>& assignment) const;

  static CnfFormula parse_dimacs(std::istream& in);
  void write_dimacs(std::ostream& out) const;

 private:
  int num_vars_ = 0;
  std::vector<std::vector<int>> clauses_;
};

/// Variable/clause/literal deltas of to_3sat() for a length-k clause.
struct ThreeSatCost {
  int extra_vars = 0;
  int clauses = 0;
};
ThreeSatCost three_sat_cost(int clause_len);

}  // namespace oscopt
