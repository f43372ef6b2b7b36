#include "oscopt/counts.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oscopt {
namespace {

long long c2(long long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

/// Clause-length histogram assembled arithmetically (no formula built).
struct Hist {
  std::map<long long, long long> h;
  void add(long long len, long long count) {
    if (count > 0) h[len] += count;
  }
  long long clauses() const {
    long long c = 0;
    for (const auto& [len, n] : h) c += n;
    return c;
  }
  long long literals() const {
    long long l = 0;
    for (const auto& [len, n] : h) l += len * n;
    return l;
  }
  long long distinct() const { return static_cast<long long>(h.size()); }
};

CountRow mixed_from(long long v, const Hist& hist) {
  return {v, hist.clauses(), hist.literals()};
}

CountRow three_sat_from(long long v, const Hist& hist) {
  CountRow r;
  r.v = v;
  for (const auto& [len, n] : hist.h) {
    ThreeSatCost cost = three_sat_cost(static_cast<int>(len));
    r.v += n * cost.extra_vars;
    r.c += n * cost.clauses;
  }
  r.l_total = 3 * r.c;
  return r;
}

void fill_network(CountReport& rep, long long v, const Hist& hist) {
  long long c = hist.clauses(), l = hist.literals(), d = hist.distinct();
  rep.nodes = sat_nodes_split(v, c);
  rep.connections = sat_connections_split(v, c, l);
  rep.nodes_merged = sat_nodes_merged(v, c, d);
  rep.connections_merged = sat_connections_merged(v, c, l, d);
}

void add_fragment(CountReport& rep, long long ea_pairs, long long ws_terms) {
  rep.nodes += ea_pairs;
  rep.connections += 3 * ea_pairs + ws_terms;
  rep.nodes_merged += ea_pairs;
  rep.connections_merged += 3 * ea_pairs + ws_terms;
  rep.extras["energy_and_pairs"] = static_cast<double>(ea_pairs);
  rep.extras["objective_connections"] =
      static_cast<double>(3 * ea_pairs + ws_terms);
}

void push_row(CountReport& rep, const std::string& table,
              const std::string& row, double published, double derived,
              const std::string& note_on_mismatch) {
  TableComparison cmp;
  cmp.table = table;
  cmp.row = row;
  cmp.published = published;
  cmp.derived = derived;
  cmp.matches = std::abs(published - derived) < 1e-9;
  if (!cmp.matches) cmp.note = note_on_mismatch;
  rep.tables.push_back(std::move(cmp));
}

CountReport trivially_unsat_report() {
  CountReport rep;
  rep.extras["trivially_unsat"] = 1.0;
  return rep;
}

// --------------------------------------------------------------- per kind

CountReport predict_sat(const CnfFormula& f) {
  CountReport rep;
  rep.mixed = mixed_row(f);
  rep.three_sat = three_sat_row(f);
  Hist hist;
  for (const auto& [len, n] : f.length_histogram()) hist.add(len, n);
  fill_network(rep, f.num_vars(), hist);
  rep.decision_vars = f.num_vars();
  // The published node/connection table assumes one uniform clause length.
  if (hist.distinct() == 1) {
    long long v = f.num_vars(), c = f.num_clauses();
    long long len = hist.h.begin()->first;
    push_row(rep, "sat-network", "#nodes split", static_cast<double>(2 * v + c + 3),
             static_cast<double>(rep.nodes), "");
    push_row(rep, "sat-network", "#nodes merged", static_cast<double>(2 * v + c + 3),
             static_cast<double>(rep.nodes_merged), "");
    if (len == 3) {
      push_row(rep, "sat-network", "#connections split",
               static_cast<double>(3 * v + 6 * c + 3),
               static_cast<double>(rep.connections), "");
      push_row(rep, "sat-network", "#connections merged",
               static_cast<double>(3 * v + 4 * c + 3),
               static_cast<double>(rep.connections_merged), "");
    }
  }
  return rep;
}

/// Quadratic-penalty family: n decision nodes, a product term for every pair
/// (zero coefficients included) and a sum term per variable.
CountReport predict_ip_family(long long n) {
  CountReport rep;
  rep.decision_vars = n;
  rep.nodes = n + c2(n) + 2;  // variables, pair auxiliaries, Blue, True
  rep.connections = 2 * n + 3 * c2(n);  // sum + restriction + product terms
  rep.nodes_merged = rep.nodes;
  rep.connections_merged = rep.connections;
  rep.extras["energy_and_pairs"] = static_cast<double>(c2(n));
  rep.extras["objective_connections"] = static_cast<double>(n + 3 * c2(n));
  push_row(rep, "ip01", "#connections (objective)",
           static_cast<double>(n) + 1.5 * static_cast<double>(n * (n - 1)),
           static_cast<double>(n + 3 * c2(n)),
           "");  // Blue restrictions are reported separately
  return rep;
}

CountReport predict_hamilton(const GraphData& g, bool circle) {
  const long long n = g.n;
  auto adj = g.adjacency();
  long long sum_deg = 0, sum_deg_first = 0;  // all vertices / first n-1
  for (long long i = 0; i < n; ++i) {
    long long deg = static_cast<long long>(adj[static_cast<size_t>(i)].size());
    sum_deg += deg;
    if (i < n - 1) sum_deg_first += deg;
  }
  Hist hist;
  hist.add(n, 2 * n);            // I (positions), III (vertices)
  hist.add(2, 2 * n * c2(n));    // II, IV
  const long long reps = circle ? n : n - 1;  // V positions (+ VI wrap)
  for (long long i = 0; i < n; ++i)
    hist.add(1 + static_cast<long long>(adj[static_cast<size_t>(i)].size()),
             reps);
  CountReport rep;
  rep.mixed = mixed_from(n * n, hist);
  rep.three_sat = three_sat_from(n * n, hist);
  fill_network(rep, n * n, hist);
  rep.decision_vars = n * n;

  const std::string table = circle ? "hamilton-circle" : "hamilton-path";
  const double nn = static_cast<double>(n);
  const double x = circle ? static_cast<double>(2 * g.edge_count())
                          : static_cast<double>(sum_deg_first);
  const char* range_note = circle
      ? "published #v/#c are transposed with the clause count"
      : "published #v/#c are transposed; the literal sum runs i=1..n-1 only";
  push_row(rep, table, "#v mixed", nn * nn * nn + 2 * nn,
           static_cast<double>(rep.mixed.v), range_note);
  push_row(rep, table, "#c mixed", nn * nn,
           static_cast<double>(rep.mixed.c), range_note);
  push_row(rep, table, "l_total mixed", 2 * nn * nn * nn + (circle ? nn * x : x),
           static_cast<double>(rep.mixed.l_total),
           "published total omits the antecedent literals of constraints V/VI");
  push_row(rep, table, "l_avg mixed", (2 * nn * nn + x) / (nn * nn + 2),
           rep.mixed.l_avg(), "published ratio does not equal l_total/#c");
  const double v3 = 2 * nn * nn * nn + nn * nn - 4 * nn + nn * x;
  push_row(rep, table, "#v 3-sat", v3, static_cast<double>(rep.three_sat.v),
           "published auxiliary count does not follow the chain conversion");
  push_row(rep, table, "#c 3-sat", nn * nn * nn + 2 * nn * nn - 6 * nn + nn * x,
           static_cast<double>(rep.three_sat.c),
           "published auxiliary count does not follow the chain conversion");
  push_row(rep, table, "l_total 3-sat", 3 * v3,
           static_cast<double>(rep.three_sat.l_total),
           "published value is 3 x the published #v row");
  return rep;
}

CountReport predict_tsp(const std::vector<std::vector<double>>& w) {
  const long long n = static_cast<long long>(w.size());
  GraphData complete;
  complete.n = static_cast<int>(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) complete.edges.push_back({u, v});
  CountReport rep = predict_hamilton(complete, /*circle=*/true);
  rep.tables.clear();  // the tour fragment has no published table
  add_fragment(rep, 2 * n * c2(n), 0);
  return rep;
}

CountReport predict_clique(long long n, long long e, long long kk) {
  if (n <= 3)
    throw std::invalid_argument(
        "clique resource formulas assume n > 3 (they drop a min(n-3,1) "
        "correction for degenerate vertex counts)");
  Hist hist;
  hist.add(n, kk);                                       // I
  hist.add(2, n * c2(kk) + kk * c2(n) +                  // II, III
                  kk * (kk - 1) * (c2(n) - e));          // IV, both slot orders
  CountReport rep;
  rep.mixed = mixed_from(kk * n, hist);
  rep.three_sat = three_sat_from(kk * n, hist);
  fill_network(rep, kk * n, hist);
  rep.decision_vars = kk * n;

  const double k = static_cast<double>(kk), nn = static_cast<double>(n),
               ee = static_cast<double>(e);
  const char* iv_note =
      "published rows count one slot order per non-edge (C(k,2) clauses); the "
      "sound build needs both orders (k(k-1))";
  push_row(rep, "clique", "#v mixed", k * nn,
           static_cast<double>(rep.mixed.v), "");
  push_row(rep, "clique", "#c mixed",
           (k * k + k) / 4 * nn * nn + (3 * k * k - k) / 4 * nn + k -
               k * (k - 1) / 2 * ee,
           static_cast<double>(rep.mixed.c),
           "published n coefficient transposes (k^2-3k)/4; and the row counts "
           "one slot order per non-edge where the sound build needs both");
  const double pub_c = (k * k + k) / 4 * nn * nn + (3 * k * k - k) / 4 * nn +
                       k - k * (k - 1) / 2 * ee;
  const double pub_l =
      (k * k + k) / 2 * nn * nn + (k * k - k) / 2 * nn - k * (k - 1) * ee;
  push_row(rep, "clique", "l_total mixed", pub_l,
           static_cast<double>(rep.mixed.l_total), iv_note);
  push_row(rep, "clique", "l_avg mixed", pub_c / pub_l, rep.mixed.l_avg(),
           "published ratio is #c/l_total, the reciprocal of the average "
           "length");
  push_row(rep, "clique", "#v 3-sat",
           (k * k + k) / 4 * nn * nn + (k * k + 5 * k) / 4 * nn -
               (3 * k + k * (k - 1) / 2 * ee),
           static_cast<double>(rep.three_sat.v), iv_note);
  push_row(rep, "clique", "#c 3-sat",
           (k * k + k) / 2 * nn * nn + k * k * nn - (2 + (k - 1) * ee) * k,
           static_cast<double>(rep.three_sat.c), iv_note);
  push_row(rep, "clique", "l_total 3-sat",
           3 * ((k * k + k) / 2 * nn * nn + k * k * nn - (2 + (k - 1) * ee) * k),
           static_cast<double>(rep.three_sat.l_total), iv_note);
  return rep;
}

CountReport predict_node_cover(long long nv, long long e, long long kk) {
  if (kk == 0) {
    // No cover positions: with edges the coverage clauses are empty.
    if (e > 0) return trivially_unsat_report();
    CountReport rep;
    Hist none;
    fill_network(rep, 0, none);
    return rep;
  }
  Hist hist;
  hist.add(nv, kk);                             // I
  hist.add(2, nv * c2(kk) + kk * c2(nv));       // II, III
  hist.add(2 * kk, e);                          // IV
  CountReport rep;
  rep.mixed = mixed_from(kk * nv, hist);
  rep.three_sat = three_sat_from(kk * nv, hist);
  fill_network(rep, kk * nv, hist);
  rep.decision_vars = kk * nv;
  if (nv >= 3 && kk >= 2) {
    const double k = static_cast<double>(kk), v = static_cast<double>(nv),
                 ee = static_cast<double>(e);
    const double pub_c = k + ee + 0.5 * k * v * (k + v - 2);
    const double pub_l = k * v + 2 * k * ee + k * v * (k + v - 2);
    push_row(rep, "node-cover", "#v mixed", k * v,
             static_cast<double>(rep.mixed.v), "");
    push_row(rep, "node-cover", "#c mixed", pub_c,
             static_cast<double>(rep.mixed.c), "");
    push_row(rep, "node-cover", "l_total mixed", pub_l,
             static_cast<double>(rep.mixed.l_total), "");
    push_row(rep, "node-cover", "l_avg mixed", pub_l / pub_c,
             rep.mixed.l_avg(), "");
    push_row(rep, "node-cover", "#v 3-sat",
             -3 * k + ee * (2 * k - 3) + 0.5 * k * v * (k + v + 2),
             static_cast<double>(rep.three_sat.v), "");
    push_row(rep, "node-cover", "#c 3-sat",
             -2 * k + 2 * ee * (k - 1) + k * v * (k + v - 1),
             static_cast<double>(rep.three_sat.c), "");
    push_row(rep, "node-cover", "l_total 3-sat",
             -6 * k + 6 * ee * (k - 1) + 3 * k * v * (k + v - 1),
             static_cast<double>(rep.three_sat.l_total), "");
  }
  return rep;
}

CountReport predict_set_cover(const std::vector<std::vector<int>>& subsets,
                              int universe) {
  const long long m = static_cast<long long>(subsets.size());
  std::vector<long long> coverage(static_cast<size_t>(universe), 0);
  for (const auto& s : subsets)
    for (int e : s) ++coverage[static_cast<size_t>(e)];
  for (long long deg : coverage)
    if (deg == 0) return trivially_unsat_report();
  Hist hist;
  for (long long deg : coverage) hist.add(deg, 1);
  CountReport rep;
  rep.mixed = mixed_from(m, hist);
  rep.three_sat = three_sat_from(m, hist);
  fill_network(rep, m, hist);
  rep.decision_vars = m;
  add_fragment(rep, 0, m);
  return rep;
}

CountReport predict_chromatic(const GraphData& g, long long kk) {
  CountReport rep;
  const long long nv = g.n, e = g.edge_count();
  if (kk <= 3) {
    // Direct Potts nets: free three-state nodes (k=3), a Blue-restricted
    // two-phase net (k=2), or bare conflict edges (k=1).
    rep.decision_vars = nv;
    rep.nodes = nv + (kk == 2 ? 1 : 0);
    rep.connections = e + (kk == 2 ? nv : 0);
    rep.nodes_merged = rep.nodes;
    rep.connections_merged = rep.connections;
    rep.extras["decision_states_log2"] =
        static_cast<double>(nv) * (kk == 3 ? std::log2(3.0) : 1.0);
    return rep;
  }
  Hist hist;
  hist.add(kk, nv);            // one color per vertex
  hist.add(2, nv * c2(kk));    // at most one color
  rep.mixed = mixed_from(kk * nv, hist);
  rep.three_sat = three_sat_from(kk * nv, hist);
  fill_network(rep, kk * nv, hist);
  rep.decision_vars = kk * nv;
  add_fragment(rep, e * kk, 0);
  const double k = static_cast<double>(kk), v = static_cast<double>(nv);
  const char* per_vertex =
      "published row counts one vertex's clause block, not the whole formula";
  push_row(rep, "chromatic", "#v mixed", k * v,
           static_cast<double>(rep.mixed.v), "");
  push_row(rep, "chromatic", "#c mixed", 1 + 0.5 * k * (k - 1),
           static_cast<double>(rep.mixed.c), per_vertex);
  push_row(rep, "chromatic", "l_total mixed", k * k,
           static_cast<double>(rep.mixed.l_total), per_vertex);
  push_row(rep, "chromatic", "l_avg mixed", k * k / (1 + 0.5 * k * (k - 1)),
           rep.mixed.l_avg(), "");
  push_row(rep, "chromatic", "#v 3-sat", k * v + 0.5 * k * (k + 1) - 3,
           static_cast<double>(rep.three_sat.v),
           "published auxiliary term 0.5k(k+1)-3 lacks the per-vertex factor");
  push_row(rep, "chromatic", "#c 3-sat", k * k - 2,
           static_cast<double>(rep.three_sat.c), per_vertex);
  push_row(rep, "chromatic", "l_total 3-sat", 3 * k * k - 6,
           static_cast<double>(rep.three_sat.l_total), per_vertex);
  rep.extras["clause_block_c"] = 1 + 0.5 * k * (k - 1);
  rep.extras["clause_block_l_total"] = k * k;
  rep.extras["clause_block_c_3sat"] = k * k - 2;
  rep.extras["clause_block_l_total_3sat"] = 3 * k * k - 6;
  return rep;
}

CountReport predict_fns(const GraphData& g) {
  const long long nv = g.n, h = g.n;
  Hist hist;
  hist.add(2, nv * c2(h));  // at most one height per vertex
  CountReport rep;
  rep.mixed = mixed_from(nv * h, hist);
  rep.three_sat = three_sat_from(nv * h, hist);
  fill_network(rep, nv * h, hist);
  rep.decision_vars = nv * h;
  // Product terms x_{u,i} x_{v,j} (i >= j) per edge; the pair {(u,i),(v,i)}
  // appears from both directions of a mutual edge and merges.
  long long mutual = 0;
  for (const auto& e : g.edges)
    if (e[0] < e[1] && g.has_edge(e[1], e[0])) ++mutual;
  const long long pairs =
      static_cast<long long>(g.edge_count()) * (h * (h + 1) / 2) - mutual * h;
  add_fragment(rep, pairs, nv * h);
  const double v = static_cast<double>(nv);
  const char* per_vertex =
      "published row counts one vertex's clause block, not the whole formula";
  push_row(rep, "feedback-node-set", "#v mixed", v * v,
           static_cast<double>(rep.mixed.v), "");
  push_row(rep, "feedback-node-set", "#c mixed", 0.5 * v * (v - 1),
           static_cast<double>(rep.mixed.c), per_vertex);
  push_row(rep, "feedback-node-set", "l_avg mixed", 2.0, rep.mixed.l_avg(), "");
  push_row(rep, "feedback-node-set", "l_total mixed", v * (v - 1),
           static_cast<double>(rep.mixed.l_total), per_vertex);
  push_row(rep, "feedback-node-set", "#v 3-sat", 0.5 * v * (3 * v - 1),
           static_cast<double>(rep.three_sat.v), per_vertex);
  push_row(rep, "feedback-node-set", "#c 3-sat", v * (v - 1),
           static_cast<double>(rep.three_sat.c), per_vertex);
  push_row(rep, "feedback-node-set", "l_total 3-sat", 3 * v * (v - 1),
           static_cast<double>(rep.three_sat.l_total), per_vertex);
  rep.extras["clause_block_c"] = static_cast<double>(c2(h));
  rep.extras["clause_block_l_total"] = static_cast<double>(2 * c2(h));
  return rep;
}

CountReport predict_fas(const GraphData& g) {
  const long long nv = g.n, h = g.n, e = g.edge_count();
  Hist hist;
  hist.add(h, nv);
  hist.add(2, nv * c2(h));
  const long long vars = nv * h + e * h;
  CountReport rep;
  rep.mixed = mixed_from(vars, hist);
  rep.three_sat = three_sat_from(vars, hist);
  fill_network(rep, vars, hist);
  rep.decision_vars = vars;
  add_fragment(rep, e * (h + c2(h)), e * h);
  return rep;
}

CountReport predict_exact_cover(const std::vector<std::vector<int>>& subsets,
                                int universe) {
  const long long m = static_cast<long long>(subsets.size());
  std::vector<long long> idx(static_cast<size_t>(universe), 0);
  for (const auto& s : subsets)
    for (int el : s) ++idx[static_cast<size_t>(el)];
  for (long long s : idx)
    if (s == 0) return trivially_unsat_report();
  Hist hist;
  double pub_c = 0, pub_l = 0, pub_v3 = 0, pub_c3 = 0;
  for (long long s : idx) {
    hist.add(s, 1);
    hist.add(2, c2(s));
    const double sd = static_cast<double>(s);
    pub_c += 0.5 * sd * (sd + 1);
    pub_l += sd * sd;
    pub_v3 += 0.5 * sd * (sd + 1);
    pub_c3 += sd * (sd + 1);
  }
  const double n = static_cast<double>(universe);
  CountReport rep;
  rep.mixed = mixed_from(m, hist);
  rep.three_sat = three_sat_from(m, hist);
  fill_network(rep, m, hist);
  rep.decision_vars = m;
  push_row(rep, "exact-cover", "#v mixed", static_cast<double>(m),
           static_cast<double>(rep.mixed.v), "");
  push_row(rep, "exact-cover", "#c mixed", pub_c,
           static_cast<double>(rep.mixed.c),
           "published sum 0.5 s(s+1) exceeds the built 1 + C(s,2) by s-1 per "
           "element");
  push_row(rep, "exact-cover", "l_total mixed", pub_l,
           static_cast<double>(rep.mixed.l_total), "");
  push_row(rep, "exact-cover", "l_avg mixed", pub_l / pub_c,
           rep.mixed.l_avg(),
           "published ratio divides by the overcounted clause total");
  push_row(rep, "exact-cover", "#v 3-sat", pub_v3 - 3 * n,
           static_cast<double>(rep.three_sat.v),
           "published row extends the mixed #c garble");
  push_row(rep, "exact-cover", "#c 3-sat", pub_c3 - 3 * n,
           static_cast<double>(rep.three_sat.c),
           "published row extends the mixed #c garble");
  push_row(rep, "exact-cover", "l_total 3-sat", 3 * (pub_c3 - 3 * n),
           static_cast<double>(rep.three_sat.l_total),
           "published row extends the mixed #c garble");
  return rep;
}

CountReport predict_shortest_path(const GraphData& g, long long kk) {
  const long long nv = g.n;
  // In-neighbors feed constraint I (position i-1 must hold a predecessor).
  std::vector<long long> indeg(static_cast<size_t>(nv), 0);
  for (const auto& e : g.edges) {
    indeg[static_cast<size_t>(e[1])]++;
    if (!g.directed) indeg[static_cast<size_t>(e[0])]++;
  }
  Hist hist;
  for (long long v = 0; v < nv; ++v)
    hist.add(1 + indeg[static_cast<size_t>(v)], kk - 1);
  hist.add(kk, 1);      // the target appears somewhere
  hist.add(1, nv - 1);  // position 1 is the source
  CountReport rep;
  rep.mixed = mixed_from(nv * kk, hist);
  rep.three_sat = three_sat_from(nv * kk, hist);
  fill_network(rep, nv * kk, hist);
  rep.decision_vars = nv * kk;
  return rep;
}

CountReport predict_maze(const MazeSpec& spec) {
  CountReport rep;
  long long open_pairs = 0, walled_cells = 0;
  for (int cell = 0; cell < spec.cells(); ++cell) {
    bool walled = false;
    for (int dir = 0; dir < 4; ++dir) {
      if (!spec.open(cell, dir))
        walled = true;
      else if (dir == 1 || dir == 2)
        ++open_pairs;
    }
    if (walled) ++walled_cells;
  }
  rep.nodes = spec.cells() + 3;
  rep.connections = open_pairs + walled_cells + 2LL * spec.cells();
  rep.nodes_merged = rep.nodes;
  rep.connections_merged = rep.connections;
  rep.decision_vars = spec.cells();
  return rep;
}

CountReport predict_gate(GateKind kind, long long inputs) {
  if (kind == GateKind::xor_gate || kind == GateKind::xnor_gate)
    throw std::invalid_argument(
        std::string(gate_name(kind)) +
        " is not realizable with a single output oscillator");
  const bool biased = kind == GateKind::and_gate || kind == GateKind::or_gate ||
                      kind == GateKind::nand_gate || kind == GateKind::nor_gate;
  CountReport rep;
  rep.nodes = inputs + 2 + (biased ? 1 : 0);
  rep.connections = 2 * inputs + 1 + (biased ? 1 : 0);
  rep.nodes_merged = rep.nodes;
  rep.connections_merged = rep.connections;
  rep.decision_vars = 1;
  return rep;
}

}  // namespace

CountRow mixed_row(const CnfFormula& f) {
  return {f.num_vars(), f.num_clauses(), f.literal_count()};
}

CountRow three_sat_row(const CnfFormula& f) {
  Hist hist;
  for (const auto& [len, n] : f.length_histogram()) hist.add(len, n);
  return three_sat_from(f.num_vars(), hist);
}

long long sat_nodes_split(long long v, long long c) { return 2 * v + c + 3; }
long long sat_connections_split(long long v, long long c, long long l_total) {
  return 3 * v + 3 + l_total + 3 * c;
}
long long sat_nodes_merged(long long v, long long c, long long d) {
  return 2 * v + c + 2 + d;
}
long long sat_connections_merged(long long v, long long c, long long l_total,
                                 long long d) {
  return 3 * v + 1 + 2 * d + l_total + c;
}

CountReport predict_resources(const ProblemInstance& inst) {
  inst.validate();
  switch (inst.kind) {
    case ProblemKind::sat:
      return predict_sat(inst.cnf);
    case ProblemKind::ip01:
      return predict_ip_family(static_cast<long long>(inst.C.front().size()));
    case ProblemKind::number_partitioning: {
      long long sum = 0;
      for (long long v : inst.numbers) sum += v;
      if (sum % 2 != 0)
        return trivially_unsat_report();
      return predict_ip_family(static_cast<long long>(inst.numbers.size()));
    }
    case ProblemKind::knapsack:
      return predict_ip_family(static_cast<long long>(inst.a.size()));
    case ProblemKind::hamilton_path:
      return predict_hamilton(inst.graph, false);
    case ProblemKind::hamilton_circle:
      return predict_hamilton(inst.graph, true);
    case ProblemKind::tsp:
      return predict_tsp(inst.tsp_weights);
    case ProblemKind::clique:
      return predict_clique(inst.graph.n, inst.graph.edge_count(), *inst.k);
    case ProblemKind::set_packing:
      if (*inst.k > static_cast<int>(inst.subsets.size()))
        return trivially_unsat_report();
      return predict_resources(delegate_set_packing(inst));
    case ProblemKind::node_cover:
      return predict_node_cover(inst.graph.n, inst.graph.edge_count(), *inst.k);
    case ProblemKind::independent_set:
      return predict_resources(delegate_independent_set(inst));
    case ProblemKind::set_cover:
      return predict_set_cover(inst.subsets, inst.universe_size);
    case ProblemKind::chromatic_number:
      if (!inst.k)
        throw std::invalid_argument("chromatic-number counts need k");
      return predict_chromatic(inst.graph, *inst.k);
    case ProblemKind::clique_cover:
      return predict_resources(delegate_clique_cover(inst));
    case ProblemKind::feedback_node_set:
      return predict_fns(inst.graph);
    case ProblemKind::feedback_arc_set:
      return predict_fas(inst.graph);
    case ProblemKind::exact_cover:
      return predict_exact_cover(inst.subsets, inst.universe_size);
    case ProblemKind::hitting_set:
      return predict_resources(delegate_hitting_set(inst));
    case ProblemKind::three_dim_matching:
      if (inst.t_size > static_cast<int>(inst.triples.size()))
        return trivially_unsat_report();
      return predict_resources(delegate_three_dim_matching(inst));
    case ProblemKind::graph_partitioning: {
      CountReport rep;
      rep.decision_vars = inst.graph.n;
      rep.nodes = inst.graph.n + 1;
      rep.connections = c2(inst.graph.n) + inst.graph.n;
      rep.nodes_merged = rep.nodes;
      rep.connections_merged = rep.connections;
      return rep;
    }
    case ProblemKind::min_cut: {
      CountReport rep;
      rep.decision_vars = inst.graph.n;
      rep.nodes = inst.graph.n + 1;
      rep.connections = inst.graph.edge_count() + inst.graph.n;
      rep.nodes_merged = rep.nodes;
      rep.connections_merged = rep.connections;
      return rep;
    }
    case ProblemKind::max_cut: {
      CountReport rep;
      const long long n = inst.graph.n, e = inst.graph.edge_count();
      rep.decision_vars = n;
      rep.nodes = n + 2 + e;
      rep.connections = 2 * n + 3 * e;
      rep.nodes_merged = rep.nodes;
      rep.connections_merged = rep.connections;
      rep.extras["energy_and_pairs"] = static_cast<double>(e);
      rep.extras["objective_connections"] = static_cast<double>(n + 3 * e);
      return rep;
    }
    case ProblemKind::maze:
      return predict_maze(inst.maze_spec);
    case ProblemKind::shortest_path:
      return predict_shortest_path(inst.graph, *inst.k);
    case ProblemKind::logic_gate:
      return predict_gate(inst.gate,
                          static_cast<long long>(inst.gate_inputs.size()));
  }
  throw std::invalid_argument("unknown problem kind");
}

nlohmann::json CountReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  auto row = [](const CountRow& r) {
    return nlohmann::json{
        {"v", r.v}, {"c", r.c}, {"l_total", r.l_total}, {"l_avg", r.l_avg()}};
  };
  j["mixed"] = row(mixed);
  j["three_sat"] = row(three_sat);
  j["nodes"] = nodes;
  j["connections"] = connections;
  j["nodes_merged"] = nodes_merged;
  j["connections_merged"] = connections_merged;
  j["decision_vars"] = decision_vars;
  if (!extras.empty()) j["extras"] = extras;
  if (!tables.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& t : tables) {
      nlohmann::json r{{"table", t.table},
                       {"row", t.row},
                       {"published", t.published},
                       {"derived", t.derived},
                       {"matches", t.matches}};
      if (!t.note.empty()) r["note"] = t.note;
      rows.push_back(std::move(r));
    }
    j["tables"] = std::move(rows);
  }
  return j;
}

std::string CountReport::to_csv() const {
  std::ostringstream out;
  out << "section,metric,value\n";
  out << "mixed,v," << mixed.v << "\n";
  out << "mixed,c," << mixed.c << "\n";
  out << "mixed,l_total," << mixed.l_total << "\n";
  out << "mixed,l_avg," << mixed.l_avg() << "\n";
  out << "three_sat,v," << three_sat.v << "\n";
  out << "three_sat,c," << three_sat.c << "\n";
  out << "three_sat,l_total," << three_sat.l_total << "\n";
  out << "three_sat,l_avg," << three_sat.l_avg() << "\n";
  out << "network,nodes," << nodes << "\n";
  out << "network,connections," << connections << "\n";
  out << "network,nodes_merged," << nodes_merged << "\n";
  out << "network,connections_merged," << connections_merged << "\n";
  out << "network,decision_vars," << decision_vars << "\n";
  for (const auto& [key, value] : extras)
    out << "extras," << key << "," << value << "\n";
  return out.str();
}

}  // namespace oscopt
