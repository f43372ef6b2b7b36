// Closed-form resource counts and their published-table comparisons.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "oscopt/counts.hpp"
#include "oscopt/reductions.hpp"

using namespace oscopt;

namespace {

ProblemInstance sat_instance(CnfFormula f) {
  ProblemInstance inst;
  inst.kind = ProblemKind::sat;
  inst.cnf = std::move(f);
  return inst;
}

const TableComparison* find_row(const CountReport& r, const std::string& table,
                                const std::string& row) {
  for (const auto& t : r.tables)
    if (t.table == table && t.row == row) return &t;
  return nullptr;
}

}  // namespace

TEST_CASE("clause-network size formulas") {
  CHECK(sat_nodes_split(1, 1) == 6);
  CHECK(sat_nodes_merged(1, 1, 1) == 6);
  CHECK(sat_connections_split(1, 1, 3) == 12);
  CHECK(sat_connections_merged(1, 1, 3, 1) == 10);

  CHECK(sat_nodes_split(3, 5) == 14);
  CHECK(sat_connections_split(3, 5, 15) == 42);
  CHECK(sat_connections_merged(3, 5, 15, 1) == 32);

  // The published reference point for a uniform 3-SAT instance.
  CHECK(sat_nodes_split(110, 1400) == 1623);
  CHECK(sat_nodes_merged(110, 1400, 1) == 1623);
  CHECK(sat_connections_split(110, 1400, 4200) == 8733);
  CHECK(sat_connections_merged(110, 1400, 4200, 1) == 5933);

  // General shapes: nodes are length-independent, connections count literals.
  for (long long v : {2LL, 7LL, 30LL})
    for (long long c : {1LL, 9LL, 64LL}) {
      CHECK(sat_nodes_split(v, c) == 2 * v + c + 3);
      for (long long l : {c, 2 * c, 3 * c, 5 * c}) {
        CHECK(sat_connections_split(v, c, l) == 3 * v + 3 + l + 3 * c);
        for (long long d : {1LL, 2LL, 3LL}) {
          CHECK(sat_nodes_merged(v, c, d) == 2 * v + c + 2 + d);
          CHECK(sat_connections_merged(v, c, l, d) ==
                3 * v + 1 + 2 * d + l + c);
        }
      }
    }
}

TEST_CASE("formula rows by pure histogram arithmetic") {
  CnfFormula f;
  f.add_clause({1});
  f.add_clause({1, -2});
  f.add_clause({-1, 2, 3});
  f.add_clause({1, 2, 3, 4});
  f.add_clause({-1, -2, -3, -4, 5});

  const CountRow mixed = mixed_row(f);
  CHECK(mixed.v == 5);
  CHECK(mixed.c == 5);
  CHECK(mixed.l_total == 15);
  CHECK(mixed.l_avg() == doctest::Approx(3.0));

  // 1->(2,4), 2->(1,2), 3->(0,1), 4->(1,2), 5->(2,3); all clauses width 3.
  const CountRow three = three_sat_row(f);
  CHECK(three.v == 5 + 2 + 1 + 0 + 1 + 2);
  CHECK(three.c == 4 + 2 + 1 + 2 + 3);
  CHECK(three.l_total == 3 * three.c);

  const CountRow from_conversion = mixed_row(f.to_3sat());
  CHECK(from_conversion == three);
}

TEST_CASE("empty formulas yield empty rows") {
  CnfFormula f(4);
  const CountRow r = mixed_row(f);
  CHECK(r.v == 4);
  CHECK(r.c == 0);
  CHECK(r.l_total == 0);
  CHECK(r.l_avg() == 0.0);
}

TEST_CASE("prediction equals measurement on a mixed-width formula") {
  CnfFormula f;
  f.add_clause({1, -2});
  f.add_clause({2, 3, -4});
  f.add_clause({-1, -3});
  f.add_clause({1, 2, 3, 4});
  const ProblemInstance inst = sat_instance(f);

  for (bool merged : {false, true}) {
    EncodeOptions opt;
    opt.merge_bias = merged;
    const ReductionArtifact art = encode(inst, opt);
    const CountReport predicted = predict_resources(inst);
    const CountReport measured = measure_resources(art);
    CHECK(predicted.mixed == measured.mixed);
    CHECK(predicted.three_sat == measured.three_sat);
    CHECK(predicted.decision_vars == measured.decision_vars);
    if (merged) {
      CHECK(predicted.nodes_merged == measured.nodes_merged);
      CHECK(predicted.connections_merged == measured.connections_merged);
    } else {
      CHECK(predicted.nodes == measured.nodes);
      CHECK(predicted.connections == measured.connections);
    }
  }
}

TEST_CASE("uniform 3-SAT predictions carry matching table rows") {
  CnfFormula f;
  f.add_clause({1, 2, 3});
  f.add_clause({-1, -2, 3});
  f.add_clause({1, -2, -3});
  const CountReport r = predict_resources(sat_instance(f));
  const auto* nodes_row = find_row(r, "sat", "#nodes split");
  REQUIRE(nodes_row != nullptr);
  CHECK(nodes_row->matches);
  CHECK(nodes_row->published == nodes_row->derived);
  const auto* conn_row = find_row(r, "sat", "#connections split");
  REQUIRE(conn_row != nullptr);
  CHECK(conn_row->matches);
  for (const auto& t : r.tables) {
    CHECK(t.matches);
    CHECK(t.note.empty());
  }
}

TEST_CASE("non-uniform formulas suppress length-specific table rows") {
  CnfFormula f;
  f.add_clause({1, 2});
  f.add_clause({1, 2, 3});
  const CountReport r = predict_resources(sat_instance(f));
  CHECK(find_row(r, "sat", "#connections split") == nullptr);
}

TEST_CASE("published tour-construction rows disagree where documented") {
  ProblemInstance inst;
  inst.kind = ProblemKind::hamilton_circle;
  inst.graph.n = 5;
  inst.graph.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}};
  const CountReport r = predict_resources(inst);
  REQUIRE_FALSE(r.tables.empty());
  int mismatches = 0;
  for (const auto& t : r.tables) {
    if (!t.matches) {
      ++mismatches;
      CHECK_FALSE(t.note.empty());
      CHECK(t.published != t.derived);
    }
  }
  CHECK(mismatches > 0);
}

TEST_CASE("clique predictions require more than three vertices") {
  ProblemInstance inst;
  inst.kind = ProblemKind::clique;
  inst.graph.n = 3;
  inst.graph.edges = {{0, 1}, {1, 2}, {0, 2}};
  inst.k = 2;
  CHECK_THROWS_AS(predict_resources(inst), std::invalid_argument);
  inst.graph.n = 4;
  inst.graph.edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  CHECK_NOTHROW(predict_resources(inst));
}

TEST_CASE("report serialization exposes every figure") {
  CnfFormula f;
  f.add_clause({1, 2, 3});
  f.add_clause({-1, 2, -3});
  const CountReport r = predict_resources(sat_instance(f));

  const nlohmann::json j = r.to_json();
  CHECK(j.at("mixed").at("v").get<long long>() == r.mixed.v);
  CHECK(j.at("three_sat").at("c").get<long long>() == r.three_sat.c);
  CHECK(j.at("nodes").get<long long>() == r.nodes);
  CHECK(j.at("connections_merged").get<long long>() == r.connections_merged);
  CHECK(j.at("decision_vars").get<long long>() == r.decision_vars);
  REQUIRE(j.contains("tables"));
  CHECK(j.at("tables").size() == r.tables.size());

  const std::string csv = r.to_csv();
  CHECK(csv.find("nodes") != std::string::npos);
  CHECK(csv.find(std::to_string(r.connections)) != std::string::npos);
}
