// Formula storage, DIMACS I/O, and the chain conversion to 3-SAT.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "oscopt/cnf.hpp"

using namespace oscopt;

namespace {

// Every assignment over the formula's own variables, as a bool vector.
std::vector<std::vector<bool>> all_assignments(int n) {
  std::vector<std::vector<bool>> out;
  for (unsigned long long m = 0; m < (1ULL << n); ++m) {
    std::vector<bool> a(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) a[static_cast<size_t>(v)] = (m >> v) & 1;
    out.push_back(std::move(a));
  }
  return out;
}

bool satisfiable(const CnfFormula& f) {
  for (const auto& a : all_assignments(f.num_vars()))
    if (f.satisfied_by(a)) return true;
  return false;
}

}  // namespace

TEST_CASE("clauses are deduplicated, sorted, and tautology-checked") {
  CnfFormula f;
  f.add_clause({3, -1, 3});
  REQUIRE(f.num_clauses() == 1);
  CHECK(f.clauses().front() == std::vector<int>{-1, 3});
  CHECK(f.num_vars() == 3);  // grows to cover the largest variable
  CHECK(f.literal_count() == 2);
  CHECK_THROWS_AS(f.add_clause({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(f.add_clause({0}), std::invalid_argument);
  CHECK_FALSE(f.has_empty_clause());
  f.add_clause({});
  CHECK(f.has_empty_clause());
}

TEST_CASE("satisfaction follows the signed-literal semantics") {
  CnfFormula f;
  f.add_clause({1, -2});
  CHECK(f.satisfied_by({true, true}));
  CHECK(f.satisfied_by({false, false}));
  CHECK_FALSE(f.satisfied_by({false, true}));
  CHECK(f.clause_satisfied(0, {true, true}));
}

TEST_CASE("length histogram counts clauses by width") {
  CnfFormula f;
  f.add_clause({1});
  f.add_clause({1, 2});
  f.add_clause({-1, -2});
  f.add_clause({1, 2, 3});
  const auto h = f.length_histogram();
  CHECK(h.at(1) == 1);
  CHECK(h.at(2) == 2);
  CHECK(h.at(3) == 1);
}

TEST_CASE("DIMACS parsing accepts comments and multi-line clauses") {
  std::istringstream in(
      "c a tiny instance\n"
      "p cnf 3 2\n"
      "1 -2 0\n"
      "2\n"
      "3 0\n");
  const CnfFormula f = CnfFormula::parse_dimacs(in);
  CHECK(f.num_vars() == 3);
  CHECK(f.num_clauses() == 2);
  CHECK(f.clauses()[0] == std::vector<int>{1, -2});
  CHECK(f.clauses()[1] == std::vector<int>{2, 3});
}

TEST_CASE("DIMACS diagnostics carry line numbers") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return CnfFormula::parse_dimacs(in);
  };
  // Junk token inside a clause on line 2.
  try {
    parse("p cnf 2 1\n1 x 0\n");
    FAIL("expected a parse error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  // Variable out of the declared range.
  CHECK_THROWS_AS(parse("p cnf 1 1\n2 0\n"), std::invalid_argument);
  // Missing header.
  CHECK_THROWS_AS(parse("1 2 0\n"), std::invalid_argument);
  // Clause left open at end of input.
  CHECK_THROWS_AS(parse("p cnf 2 1\n1 2\n"), std::invalid_argument);
}

TEST_CASE("DIMACS output round-trips") {
  CnfFormula f;
  f.add_clause({1, -3});
  f.add_clause({2});
  f.add_clause({-1, -2, 3});
  std::ostringstream out;
  f.write_dimacs(out);
  std::istringstream in(out.str());
  const CnfFormula back = CnfFormula::parse_dimacs(in);
  CHECK(back.num_vars() == f.num_vars());
  CHECK(back.clauses() == f.clauses());
}

TEST_CASE("conversion costs per clause width") {
  CHECK(three_sat_cost(1).extra_vars == 2);
  CHECK(three_sat_cost(1).clauses == 4);
  CHECK(three_sat_cost(2).extra_vars == 1);
  CHECK(three_sat_cost(2).clauses == 2);
  CHECK(three_sat_cost(3).extra_vars == 0);
  CHECK(three_sat_cost(3).clauses == 1);
  for (int len = 4; len <= 9; ++len) {
    CHECK(three_sat_cost(len).extra_vars == len - 3);
    CHECK(three_sat_cost(len).clauses == len - 2);
  }
}

TEST_CASE("to_3sat produces only width-3 clauses with the predicted counts") {
  CnfFormula f;
  f.add_clause({1});
  f.add_clause({1, -2});
  f.add_clause({-1, 2, 3});
  f.add_clause({1, 2, 3, 4});
  f.add_clause({-1, -2, -3, -4, 5});
  const CnfFormula g = f.to_3sat();
  int want_vars = f.num_vars();
  int want_clauses = 0;
  for (const auto& c : f.clauses()) {
    const ThreeSatCost cost = three_sat_cost(static_cast<int>(c.size()));
    want_vars += cost.extra_vars;
    want_clauses += cost.clauses;
  }
  CHECK(g.num_vars() == want_vars);
  CHECK(g.num_clauses() == want_clauses);
  for (const auto& c : g.clauses()) CHECK(c.size() == 3);
}

TEST_CASE("to_3sat preserves satisfiability both ways") {
  // A handful of formulas on few variables so both sides can be enumerated.
  std::vector<CnfFormula> cases;
  {
    CnfFormula f;  // satisfiable, mixed widths
    f.add_clause({1});
    f.add_clause({-1, 2});
    f.add_clause({-2, 3, 4});
    f.add_clause({1, -3, -4, 2});
    cases.push_back(f);
  }
  {
    CnfFormula f;  // unsatisfiable: x and (not x) via width-2 padding
    f.add_clause({1});
    f.add_clause({-1});
    cases.push_back(f);
  }
  {
    CnfFormula f;  // unsatisfiable 4-width core over 2 variables
    f.add_clause({1, 2});
    f.add_clause({1, -2});
    f.add_clause({-1, 2});
    f.add_clause({-1, -2});
    cases.push_back(f);
  }
  {
    CnfFormula f;  // long clause only
    f.add_clause({1, 2, 3, 4, 5});
    cases.push_back(f);
  }
  for (const CnfFormula& f : cases) {
    const CnfFormula g = f.to_3sat();
    CHECK(satisfiable(f) == satisfiable(g));
  }
}

TEST_CASE("extend_to_3sat completes satisfying assignments over auxiliaries") {
  CnfFormula f;
  f.add_clause({1});
  f.add_clause({-1, 2});
  f.add_clause({-2, 3, 4, 5});
  f.add_clause({2, -3});
  const CnfFormula g = f.to_3sat();
  for (const auto& a : all_assignments(f.num_vars())) {
    if (!f.satisfied_by(a)) continue;
    const std::vector<bool> ext = f.extend_to_3sat(a);
    REQUIRE(static_cast<int>(ext.size()) == g.num_vars());
    // The original variables keep their values.
    for (int v = 0; v < f.num_vars(); ++v)
      CHECK(ext[static_cast<size_t>(v)] == a[static_cast<size_t>(v)]);
    CHECK(g.satisfied_by(ext));
  }
}
