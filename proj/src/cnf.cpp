#include "oscopt/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace oscopt {

void CnfFormula::set_num_vars(int v) {
  if (v < num_vars_)
    throw std::invalid_argument("cannot shrink variable count below " +
                                std::to_string(num_vars_));
  num_vars_ = v;
}

void CnfFormula::add_clause(std::vector<int> literals) {
  std::sort(literals.begin(), literals.end(),
            [](int a, int b) {
              return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b)
                                                : a < b;
            });
  literals.erase(std::unique(literals.begin(), literals.end()),
                 literals.end());
  for (size_t i = 0; i < literals.size(); ++i) {
    int lit = literals[i];
    if (lit == 0) throw std::invalid_argument("literal 0 is not allowed");
    if (i + 1 < literals.size() && literals[i + 1] == -lit)
      throw std::invalid_argument("tautological clause on variable " +
                                  std::to_string(std::abs(lit)));
    num_vars_ = std::max(num_vars_, std::abs(lit));
  }
  clauses_.push_back(std::move(literals));
}

long long CnfFormula::literal_count() const {
  long long n = 0;
  for (const auto& c : clauses_) n += static_cast<long long>(c.size());
  return n;
}

bool CnfFormula::has_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(),
                     [](const auto& c) { return c.empty(); });
}

std::map<int, int> CnfFormula::length_histogram() const {
  std::map<int, int> h;
  for (const auto& c : clauses_) ++h[static_cast<int>(c.size())];
  return h;
}

bool CnfFormula::clause_satisfied(int idx,
                                  const std::vector<bool>& assignment) const {
  for (int lit : clauses_[static_cast<size_t>(idx)]) {
    bool v = assignment[static_cast<size_t>(std::abs(lit) - 1)];
    if (lit > 0 ? v : !v) return true;
  }
  return false;
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) < num_vars_)
    throw std::invalid_argument("assignment shorter than variable count");
  for (int i = 0; i < num_clauses(); ++i)
    if (!clause_satisfied(i, assignment)) return false;
  return true;
}

ThreeSatCost three_sat_cost(int clause_len) {
  if (clause_len < 1) throw std::invalid_argument("empty clause");
  switch (clause_len) {
    case 1: return {2, 4};
    case 2: return {1, 2};
    case 3: return {0, 1};
    default: return {clause_len - 3, clause_len - 2};
  }
}

CnfFormula CnfFormula::to_3sat() const {
  if (has_empty_clause())
    throw UnsatisfiableError("formula contains an empty clause");
  CnfFormula out(num_vars_);
  for (const auto& c : clauses_) {
    const int k = static_cast<int>(c.size());
    if (k == 1) {
      int z1 = out.new_var(), z2 = out.new_var();
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) out.add_clause({c[0], s1 * z1, s2 * z2});
    } else if (k == 2) {
      int z = out.new_var();
      out.add_clause({c[0], c[1], z});
      out.add_clause({c[0], c[1], -z});
    } else if (k == 3) {
      out.add_clause(c);
    } else {
      int prev = out.new_var();
      out.add_clause({c[0], c[1], prev});
      for (int i = 2; i < k - 2; ++i) {
        int next = out.new_var();
        out.add_clause({-prev, c[static_cast<size_t>(i)], next});
        prev = next;
      }
      out.add_clause({-prev, c[static_cast<size_t>(k - 2)],
                      c[static_cast<size_t>(k - 1)]});
    }
  }
  return out;
}

std::vector<bool> CnfFormula::extend_to_3sat(
    const std::vector<bool>& assignment) const {
  std::vector<bool> ext = assignment;
  ext.resize(static_cast<size_t>(num_vars_), false);
  auto value = [&ext](int lit) {
    bool v = ext[static_cast<size_t>(std::abs(lit) - 1)];
    return lit > 0 ? v : !v;
  };
  for (const auto& c : clauses_) {
    const int k = static_cast<int>(c.size());
    if (k == 1) {
      ext.push_back(false);
      ext.push_back(false);
    } else if (k == 2) {
      ext.push_back(false);
    } else if (k > 3) {
      // Chain auxiliary z_j (j = 1..k-3) is true exactly while none of the
      // first j+1 literals of the clause is satisfied.
      bool any_true = value(c[0]) || value(c[1]);
      for (int j = 1; j <= k - 3; ++j) {
        ext.push_back(!any_true);
        any_true = any_true || value(c[static_cast<size_t>(j + 1)]);
      }
    }
  }
  return ext;
}

CnfFormula CnfFormula::parse_dimacs(std::istream& in) {
  CnfFormula f;
  int declared_vars = -1, declared_clauses = -1;
  std::string line;
  int line_no = 0;
  std::vector<int> current;
  auto fail = [&line_no](const std::string& msg) {
    throw std::invalid_argument("DIMACS line " + std::to_string(line_no) +
                                ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, fmt;
      if (!(hs >> p >> fmt >> declared_vars >> declared_clauses) ||
          fmt != "cnf")
        fail("malformed problem line (expected 'p cnf <vars> <clauses>')");
      if (declared_vars < 0 || declared_clauses < 0)
        fail("negative counts in problem line");
      continue;
    }
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        try {
          f.add_clause(current);
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
    if (!ls.eof()) fail("unexpected token (literals must be integers)");
  }
  if (!current.empty()) {
    ++line_no;
    fail("last clause is not terminated by 0");
  }
  if (declared_vars < 0) {
    line_no = 0;
    fail("missing 'p cnf' problem line");
  }
  if (f.num_vars() > declared_vars) {
    line_no = 0;
    fail("literal exceeds declared variable count " +
         std::to_string(declared_vars));
  }
  f.set_num_vars(declared_vars);
  if (f.num_clauses() != declared_clauses) {
    line_no = 0;
    fail("clause count " + std::to_string(f.num_clauses()) +
         " does not match declared " + std::to_string(declared_clauses));
  }
  return f;
}

void CnfFormula::write_dimacs(std::ostream& out) const {
  out << "p cnf " << num_vars_ << ' ' << num_clauses() << '\n';
  for (const auto& c : clauses_) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

}  // namespace oscopt
