#include "oscopt/corpus.hpp"

#include <stdexcept>

namespace oscopt {

namespace {

ProblemInstance sat_inst(const char* name, int vars,
                         std::vector<std::vector<int>> clauses) {
  ProblemInstance p;
  p.kind = ProblemKind::sat;
  p.name = name;
  p.cnf.set_num_vars(vars);
  for (auto& c : clauses) p.cnf.add_clause(std::move(c));
  return p;
}

ProblemInstance ip_inst(const char* name,
                        std::vector<std::vector<long long>> C,
                        std::vector<long long> b) {
  ProblemInstance p;
  p.kind = ProblemKind::ip01;
  p.name = name;
  p.C = std::move(C);
  p.b = std::move(b);
  return p;
}

ProblemInstance graph_inst(ProblemKind kind, const char* name, int n,
                           std::vector<std::array<int, 2>> edges,
                           bool directed = false,
                           std::optional<int> kk = {}) {
  ProblemInstance p;
  p.kind = kind;
  p.name = name;
  p.graph.n = n;
  p.graph.directed = directed;
  p.graph.edges = std::move(edges);
  p.k = kk;
  return p;
}

ProblemInstance sets_inst(ProblemKind kind, const char* name, int universe,
                          std::vector<std::vector<int>> subsets,
                          std::optional<int> kk = {}) {
  ProblemInstance p;
  p.kind = kind;
  p.name = name;
  p.universe_size = universe;
  p.subsets = std::move(subsets);
  p.k = kk;
  return p;
}

ProblemInstance tsp_inst(const char* name,
                         std::vector<std::vector<double>> w) {
  ProblemInstance p;
  p.kind = ProblemKind::tsp;
  p.name = name;
  p.tsp_weights = std::move(w);
  return p;
}

ProblemInstance tdm_inst(const char* name, int q,
                         std::vector<std::array<int, 3>> triples) {
  ProblemInstance p;
  p.kind = ProblemKind::three_dim_matching;
  p.name = name;
  p.t_size = q;
  p.triples = std::move(triples);
  return p;
}

ProblemInstance numbers_inst(const char* name,
                             std::vector<long long> numbers) {
  ProblemInstance p;
  p.kind = ProblemKind::number_partitioning;
  p.name = name;
  p.numbers = std::move(numbers);
  return p;
}

ProblemInstance knap_inst(const char* name, std::vector<long long> a,
                          long long b) {
  ProblemInstance p;
  p.kind = ProblemKind::knapsack;
  p.name = name;
  p.a = std::move(a);
  p.b = {b};
  return p;
}

ProblemInstance maze_inst(const char* name, int width, int height, int start,
                          int end, std::vector<std::array<int, 2>> walls) {
  ProblemInstance p;
  p.kind = ProblemKind::maze;
  p.name = name;
  p.maze_spec.width = width;
  p.maze_spec.height = height;
  p.maze_spec.start = start;
  p.maze_spec.end = end;
  p.maze_spec.walls = std::move(walls);
  return p;
}

ProblemInstance path_inst(const char* name, int n,
                          std::vector<std::array<int, 2>> edges, bool directed,
                          int s, int t, int kk) {
  ProblemInstance p = graph_inst(ProblemKind::shortest_path, name, n,
                                 std::move(edges), directed, kk);
  p.s = s;
  p.t = t;
  return p;
}

ProblemInstance gate_inst(const char* name, GateKind g,
                          std::vector<bool> inputs) {
  ProblemInstance p;
  p.kind = ProblemKind::logic_gate;
  p.name = name;
  p.gate = g;
  p.gate_inputs = std::move(inputs);
  return p;
}

std::vector<std::array<int, 2>> cycle_edges(int n) {
  std::vector<std::array<int, 2>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return e;
}

std::vector<std::array<int, 2>> complete_edges(int n) {
  std::vector<std::array<int, 2>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return e;
}

}  // namespace

std::vector<ProblemInstance> corpus_fixtures(ProblemKind kind) {
  using K = ProblemKind;
  std::vector<ProblemInstance> out;
  switch (kind) {
    case K::sat:
      out = {
          sat_inst("sat-single-positive", 1, {{1}}),
          sat_inst("sat-three-vars-five-clauses", 3,
                   {{1, 2, 3}, {-1, 2, 3}, {1, -2, 3}, {1, 2, -3},
                    {-1, -2, -3}}),
          sat_inst("sat-contradiction", 1, {{1}, {-1}}),
          sat_inst("sat-mixed-lengths", 4,
                   {{1, 2}, {-1, 3, 4}, {-2}, {3}, {-4, 1}}),
          sat_inst("sat-two-var-unsat", 2,
                   {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}),
          sat_inst("sat-long-clauses", 6,
                   {{1, 2, 3, 4, 5}, {-1, -2, -3, -4}, {2, -5, 6}, {-6, 1}}),
      };
      break;
    case K::ip01:
      out = {
          ip_inst("ip-single-variable", {{1}}, {1}),
          ip_inst("ip-subset-sum", {{2, 3, 5}}, {8}),
          ip_inst("ip-unreachable-sum", {{2, 4}}, {5}),
          ip_inst("ip-two-rows", {{1, 1, 0}, {0, 1, 1}}, {1, 1}),
          ip_inst("ip-overfull", {{1, 1}}, {3}),
      };
      {
        ProblemInstance p = ip_inst("ip-weighted-choice", {{1, 1, 1}}, {2});
        p.a = {3, 1, 2};
        p.lambda = 0.1;
        out.push_back(std::move(p));
      }
      break;
    case K::hamilton_path:
      out = {
          graph_inst(kind, "hpath-chain", 3, {{0, 1}, {1, 2}}),
          graph_inst(kind, "hpath-triangle", 3, complete_edges(3)),
          graph_inst(kind, "hpath-star", 4, {{0, 1}, {0, 2}, {0, 3}}),
          graph_inst(kind, "hpath-disconnected", 4, {{0, 1}, {2, 3}}),
          graph_inst(kind, "hpath-square", 4, cycle_edges(4)),
          graph_inst(kind, "hpath-single-edge", 2, {{0, 1}}),
      };
      break;
    case K::hamilton_circle:
      out = {
          graph_inst(kind, "hcycle-triangle", 3, complete_edges(3)),
          graph_inst(kind, "hcycle-square", 4, cycle_edges(4)),
          graph_inst(kind, "hcycle-chain", 3, {{0, 1}, {1, 2}}),
          graph_inst(kind, "hcycle-chorded-square", 4,
                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
          graph_inst(kind, "hcycle-star", 4, {{0, 1}, {0, 2}, {0, 3}}),
      };
      break;
    case K::tsp:
      out = {
          tsp_inst("tsp-unit-triangle",
                   {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
          tsp_inst("tsp-lopsided-triangle",
                   {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}}),
          tsp_inst("tsp-ring-versus-diagonals",
                   {{0, 1, 10, 1}, {1, 0, 1, 10}, {10, 1, 0, 1},
                    {1, 10, 1, 0}}),
          tsp_inst("tsp-all-tours-equal",
                   {{0, 1, 2, 3}, {1, 0, 4, 5}, {2, 4, 0, 6}, {3, 5, 6, 0}}),
          tsp_inst("tsp-zero-edge",
                   {{0, 0, 5}, {0, 0, 5}, {5, 5, 0}}),
          // Three distinct tour costs (10, 15, 17), so objective ordering is
          // observable and not just feasibility.
          tsp_inst("tsp-mixed-costs",
                   {{0, 1, 5, 4}, {1, 0, 2, 6}, {5, 2, 0, 3}, {4, 6, 3, 0}}),
      };
      break;
    case K::clique:
      out = {
          graph_inst(kind, "clique-complete-four", 4, complete_edges(4),
                     false, 4),
          graph_inst(kind, "clique-square-no-triangle", 4, cycle_edges(4),
                     false, 3),
          graph_inst(kind, "clique-diamond", 4,
                     {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, false, 3),
          graph_inst(kind, "clique-pentagon", 5, cycle_edges(5), false, 3),
          graph_inst(kind, "clique-embedded-k4", 5,
                     {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}},
                     false, 4),
      };
      break;
    case K::set_packing:
      out = {
          sets_inst(kind, "spack-two-disjoint-pairs", 4,
                    {{0, 1}, {2, 3}, {0, 2}, {1, 3}}, 2),
          sets_inst(kind, "spack-singletons", 3,
                    {{0}, {1}, {2}, {0, 1, 2}}, 3),
          sets_inst(kind, "spack-ring-overlap", 4,
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 3),
          sets_inst(kind, "spack-four-way", 8,
                    {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, 4),
          sets_inst(kind, "spack-more-than-available", 3,
                    {{0}, {1, 2}}, 3),
      };
      break;
    case K::node_cover:
      out = {
          graph_inst(kind, "ncover-triangle-two", 3, complete_edges(3), false,
                     2),
          graph_inst(kind, "ncover-triangle-one", 3, complete_edges(3), false,
                     1),
          graph_inst(kind, "ncover-path-center", 3, {{0, 1}, {1, 2}}, false,
                     1),
          graph_inst(kind, "ncover-square-two", 4, cycle_edges(4), false, 2),
          graph_inst(kind, "ncover-pentagon-two", 5, cycle_edges(5), false, 2),
          graph_inst(kind, "ncover-lone-edge", 4, {{0, 1}}, false, 1),
      };
      break;
    case K::set_cover:
      out = {
          sets_inst(kind, "scover-two-halves", 4,
                    {{0, 1}, {2, 3}, {1, 2}, {0, 3}}),
          sets_inst(kind, "scover-one-superset", 3, {{0, 1, 2}, {0}, {1}}),
          sets_inst(kind, "scover-uncoverable", 3, {{0, 1}}),
          sets_inst(kind, "scover-chain", 5,
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}),
          sets_inst(kind, "scover-big-plus-rest", 6,
                    {{0, 1, 2, 3}, {4, 5}, {0, 4}, {1, 5}, {2, 4}, {3, 5}}),
      };
      {
        ProblemInstance p = sets_inst(kind, "scover-light-penalty", 4,
                                      {{0, 1}, {2, 3}, {1, 2}, {0, 3}});
        p.lambda = 0.25;
        out.push_back(std::move(p));
      }
      break;
    case K::chromatic_number:
      out = {
          graph_inst(kind, "chrom-triangle-three", 3, complete_edges(3), false,
                     3),
          graph_inst(kind, "chrom-triangle-two", 3, complete_edges(3), false,
                     2),
          graph_inst(kind, "chrom-path-two", 3, {{0, 1}, {1, 2}}, false, 2),
          graph_inst(kind, "chrom-pentagon-four", 5, cycle_edges(5), false, 4),
          graph_inst(kind, "chrom-complete-five-four", 5, complete_edges(5),
                     false, 4),
          graph_inst(kind, "chrom-isolated-one", 2, {}, false, 1),
          graph_inst(kind, "chrom-edge-one", 2, {{0, 1}}, false, 1),
      };
      break;
    case K::clique_cover:
      out = {
          graph_inst(kind, "ccover-path-two", 3, {{0, 1}, {1, 2}}, false, 2),
          graph_inst(kind, "ccover-triangle-one", 3, complete_edges(3), false,
                     1),
          graph_inst(kind, "ccover-isolated-two", 3, {}, false, 2),
          graph_inst(kind, "ccover-square-two", 4, cycle_edges(4), false, 2),
          graph_inst(kind, "ccover-pentagon-two", 5, cycle_edges(5), false, 2),
      };
      break;
    case K::feedback_node_set:
      out = {
          graph_inst(kind, "fns-two-cycle", 2, {{0, 1}, {1, 0}}, true),
          graph_inst(kind, "fns-three-cycle", 3, {{0, 1}, {1, 2}, {2, 0}},
                     true),
          graph_inst(kind, "fns-dag", 3, {{0, 1}, {1, 2}, {0, 2}}, true),
          graph_inst(kind, "fns-shared-hub", 3,
                     {{0, 1}, {1, 0}, {0, 2}, {2, 0}}, true),
          graph_inst(kind, "fns-all-arcs", 3,
                     {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}, true),
          graph_inst(kind, "fns-two-separate-cycles", 4,
                     {{0, 1}, {1, 0}, {2, 3}, {3, 2}}, true),
      };
      break;
    case K::feedback_arc_set:
      out = {
          graph_inst(kind, "fas-two-cycle", 2, {{0, 1}, {1, 0}}, true),
          graph_inst(kind, "fas-three-cycle", 3, {{0, 1}, {1, 2}, {2, 0}},
                     true),
          graph_inst(kind, "fas-dag", 3, {{0, 1}, {1, 2}, {0, 2}}, true),
          graph_inst(kind, "fas-single-arc", 2, {{0, 1}}, true),
          graph_inst(kind, "fas-cycle-with-tail", 3,
                     {{0, 1}, {1, 0}, {2, 0}}, true),
      };
      break;
    case K::exact_cover:
      out = {
          sets_inst(kind, "xcover-two-pairs", 4,
                    {{0, 1}, {2, 3}, {1, 2}, {0}, {3}}),
          sets_inst(kind, "xcover-forced-overlap", 3, {{0, 1}, {1, 2}}),
          sets_inst(kind, "xcover-one-superset", 3, {{0, 1, 2}}),
          sets_inst(kind, "xcover-uncoverable", 3, {{0, 1}, {1}}),
          sets_inst(kind, "xcover-two-partitions", 5,
                    {{0, 1, 2}, {3, 4}, {0, 3}, {1, 2, 4}}),
          sets_inst(kind, "xcover-triple-plus-single", 4,
                    {{0, 1, 2}, {3}, {0, 3}}),
      };
      break;
    case K::hitting_set:
      out = {
          sets_inst(kind, "hit-shared-element", 3, {{0, 1}, {1, 2}}, 1),
          sets_inst(kind, "hit-disjoint-one", 2, {{0}, {1}}, 1),
          sets_inst(kind, "hit-disjoint-two", 2, {{0}, {1}}, 2),
          sets_inst(kind, "hit-zero-budget", 2, {{0, 1}}, 0),
          sets_inst(kind, "hit-cross-pairs", 4,
                    {{0, 1}, {2, 3}, {0, 2}, {1, 3}}, 2),
          sets_inst(kind, "hit-generous-budget", 3, {{0}, {1}, {2}}, 3),
      };
      break;
    case K::three_dim_matching:
      out = {
          tdm_inst("tdm-two-diagonal", 2, {{0, 0, 0}, {1, 1, 1}}),
          tdm_inst("tdm-two-choices", 2,
                   {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}, {1, 0, 0}}),
          tdm_inst("tdm-blocked", 2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}}),
          tdm_inst("tdm-three-wide", 3,
                   {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 2}, {1, 2, 0}}),
          tdm_inst("tdm-missing-coordinate", 3,
                   {{0, 0, 0}, {1, 1, 1}, {0, 1, 2}, {1, 0, 2}}),
          tdm_inst("tdm-single", 1, {{0, 0, 0}}),
      };
      break;
    case K::number_partitioning:
      out = {
          numbers_inst("part-equal-pair", {1, 1}),
          numbers_inst("part-one-two-three", {1, 2, 3}),
          numbers_inst("part-odd-total", {1, 1, 1}),
          numbers_inst("part-even-but-stuck", {2, 2, 2}),
          numbers_inst("part-three-singles", {3, 1, 1, 1}),
          numbers_inst("part-six-numbers", {5, 5, 4, 3, 2, 1}),
      };
      break;
    case K::knapsack:
      out = {
          knap_inst("knap-exact-fill", {2, 3, 5}, 8),
          knap_inst("knap-unreachable", {2, 3, 5}, 4),
          knap_inst("knap-empty-target", {1, 2}, 0),
          knap_inst("knap-take-all", {1, 2, 4, 8}, 15),
          knap_inst("knap-beyond-total", {1, 2, 4}, 11),
          knap_inst("knap-binary-digits", {1, 2, 4, 8}, 13),
      };
      break;
    case K::graph_partitioning:
      out = {
          graph_inst(kind, "gpart-single-edge", 2, {{0, 1}}),
          graph_inst(kind, "gpart-path-four", 4, {{0, 1}, {1, 2}, {2, 3}}),
          graph_inst(kind, "gpart-square", 4, cycle_edges(4)),
          graph_inst(kind, "gpart-complete-four", 4, complete_edges(4)),
          graph_inst(kind, "gpart-two-edges", 4, {{0, 1}, {2, 3}}),
          graph_inst(kind, "gpart-bridged-triangles", 6,
                     {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}}),
      };
      break;
    case K::min_cut:
      out = {
          graph_inst(kind, "mincut-path-three", 3, {{0, 1}, {1, 2}}),
          graph_inst(kind, "mincut-triangle", 3, complete_edges(3)),
          graph_inst(kind, "mincut-bridged-triangles", 6,
                     {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}),
          graph_inst(kind, "mincut-disconnected", 4, {{0, 1}, {2, 3}}),
          graph_inst(kind, "mincut-star", 4, {{0, 1}, {0, 2}, {0, 3}}),
      };
      {
        ProblemInstance p =
            graph_inst(kind, "mincut-weighted-path", 3, {{0, 1}, {1, 2}});
        p.graph.weights = {3.0, 1.0};
        out.push_back(std::move(p));
      }
      break;
    case K::independent_set:
      out = {
          graph_inst(kind, "iset-triangle-one", 3, complete_edges(3), false,
                     1),
          graph_inst(kind, "iset-triangle-two", 3, complete_edges(3), false,
                     2),
          graph_inst(kind, "iset-square-two", 4, cycle_edges(4), false, 2),
          graph_inst(kind, "iset-pentagon-three", 5, cycle_edges(5), false, 3),
          graph_inst(kind, "iset-isolated-three", 3, {}, false, 3),
          graph_inst(kind, "iset-star-leaves", 4, {{0, 1}, {0, 2}, {0, 3}},
                     false, 3),
      };
      break;
    case K::max_cut:
      out = {
          graph_inst(kind, "maxcut-single-edge", 2, {{0, 1}}),
          graph_inst(kind, "maxcut-triangle", 3, complete_edges(3)),
          graph_inst(kind, "maxcut-square", 4, cycle_edges(4)),
          graph_inst(kind, "maxcut-pentagon", 5, cycle_edges(5)),
          graph_inst(kind, "maxcut-complete-four", 4, complete_edges(4)),
      };
      {
        ProblemInstance p =
            graph_inst(kind, "maxcut-weighted-triangle", 3, complete_edges(3));
        p.graph.weights = {1.0, 2.0, 3.0};
        out.push_back(std::move(p));
      }
      break;
    case K::maze:
      out = {
          maze_inst("maze-corridor", 2, 1, 0, 1, {}),
          // Comb mazes: columns hang off the open top row, so the route is
          // unique and the spare columns drain to dead ends.
          maze_inst("maze-comb", 3, 3, 0, 8,
                    {{3, 1}, {4, 1}, {6, 1}, {7, 1}}),
          maze_inst("maze-snake", 3, 3, 0, 8,
                    {{0, 2}, {1, 2}, {4, 2}, {5, 2}}),
          maze_inst("maze-sealed-corner", 2, 2, 0, 3, {{1, 2}, {2, 1}}),
          maze_inst("maze-comb-wide", 4, 3, 0, 11,
                    {{4, 1}, {5, 1}, {6, 1}, {8, 1}, {9, 1}, {10, 1}}),
          maze_inst("maze-start-is-end", 1, 1, 0, 0, {}),
      };
      break;
    case K::shortest_path:
      out = {
          path_inst("spath-chain", 3, {{0, 1}, {1, 2}}, true, 0, 2, 3),
          path_inst("spath-chain-tight", 3, {{0, 1}, {1, 2}}, true, 0, 2, 2),
          path_inst("spath-stay-put", 1, {}, true, 0, 0, 1),
          path_inst("spath-diamond", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                    true, 0, 3, 3),
          path_inst("spath-unreachable", 3, {{0, 1}}, true, 0, 2, 3),
          path_inst("spath-direct-beats-detour", 4,
                    {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, true, 0, 3, 2),
          path_inst("spath-undirected-chain", 3, {{0, 1}, {1, 2}}, false, 2,
                    0, 3),
      };
      break;
    case K::logic_gate:
      out = {
          gate_inst("gate-and-both-low", GateKind::and_gate, {false, false}),
          gate_inst("gate-and-both-high", GateKind::and_gate, {true, true}),
          gate_inst("gate-and-mixed", GateKind::and_gate, {true, false}),
          gate_inst("gate-or-mixed", GateKind::or_gate, {false, true}),
          gate_inst("gate-or-both-low", GateKind::or_gate, {false, false}),
          gate_inst("gate-nand-both-high", GateKind::nand_gate, {true, true}),
          gate_inst("gate-nor-both-low", GateKind::nor_gate, {false, false}),
          gate_inst("gate-not-high", GateKind::not_gate, {true}),
          gate_inst("gate-buffer-low", GateKind::buf_gate, {false}),
          gate_inst("gate-and-three-inputs", GateKind::and_gate,
                    {true, true, false}),
      };
      break;
  }
  if (out.size() < 5)
    throw std::logic_error("corpus: fewer than five fixtures for a kind");
  for (auto& p : out) p.validate();
  return out;
}

std::vector<ProblemInstance> full_corpus() {
  std::vector<ProblemInstance> all;
  for (ProblemKind kind : all_problem_kinds()) {
    auto part = corpus_fixtures(kind);
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace oscopt
