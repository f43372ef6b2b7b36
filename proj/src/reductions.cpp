#include "oscopt/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

namespace oscopt {
namespace {

using Json = nlohmann::json;

// ------------------------------------------------------------ formulas

/// Vertex-at-position variables, position-major: pos * n + v + 1.
CnfFormula hamilton_formula(const GraphData& g, bool circle) {
  const int n = g.n;
  CnfFormula f(n * n);
  auto X = [n](int pos, int v) { return pos * n + v + 1; };
  for (int p = 0; p < n; ++p) {  // every position holds a vertex
    std::vector<int> c;
    for (int v = 0; v < n; ++v) c.push_back(X(p, v));
    f.add_clause(std::move(c));
  }
  for (int v = 0; v < n; ++v)  // no vertex twice
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        f.add_clause({-X(p, v), -X(q, v)});
  for (int v = 0; v < n; ++v) {  // every vertex appears
    std::vector<int> c;
    for (int p = 0; p < n; ++p) c.push_back(X(p, v));
    f.add_clause(std::move(c));
  }
  for (int p = 0; p < n; ++p)  // no position shared
    for (int v = 0; v < n; ++v)
      for (int u = v + 1; u < n; ++u)
        f.add_clause({-X(p, v), -X(p, u)});
  // consecutive positions follow edges
  const auto adj = g.adjacency();
  const int last = circle ? n : n - 1;
  for (int p = 0; p < last; ++p)
    for (int v = 0; v < n; ++v) {
      std::vector<int> c{-X(p, v)};
      for (int u : adj[static_cast<size_t>(v)]) c.push_back(X((p + 1) % n, u));
      f.add_clause(std::move(c));
    }
  return f;
}

/// Slot-major clique variables: slot * n + v + 1.
CnfFormula clique_formula(const GraphData& g, int k) {
  const int n = g.n;
  CnfFormula f(k * n);
  auto X = [n](int slot, int v) { return slot * n + v + 1; };
  for (int i = 0; i < k; ++i) {  // every slot filled
    std::vector<int> c;
    for (int v = 0; v < n; ++v) c.push_back(X(i, v));
    f.add_clause(std::move(c));
  }
  for (int v = 0; v < n; ++v)  // no vertex in two slots
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) f.add_clause({-X(i, v), -X(j, v)});
  for (int i = 0; i < k; ++i)  // one vertex per slot
    for (int v = 0; v < n; ++v)
      for (int u = v + 1; u < n; ++u) f.add_clause({-X(i, v), -X(i, u)});
  for (int v = 0; v < n; ++v)  // non-adjacent vertices never share a clique
    for (int u = v + 1; u < n; ++u) {
      if (g.has_edge(v, u)) continue;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (i != j) f.add_clause({-X(i, v), -X(j, u)});
    }
  return f;
}

/// Vertex-major cover variables: v * k + i + 1.
CnfFormula node_cover_formula(const GraphData& g, int k) {
  const int n = g.n;
  CnfFormula f(n * k);
  auto X = [k](int v, int slot) { return v * k + slot + 1; };
  for (int i = 0; i < k; ++i) {  // every cover slot used
    std::vector<int> c;
    for (int v = 0; v < n; ++v) c.push_back(X(v, i));
    f.add_clause(std::move(c));
  }
  for (int v = 0; v < n; ++v)  // no vertex in two slots
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) f.add_clause({-X(v, i), -X(v, j)});
  for (int i = 0; i < k; ++i)  // one vertex per slot
    for (int v = 0; v < n; ++v)
      for (int u = v + 1; u < n; ++u) f.add_clause({-X(v, i), -X(u, i)});
  for (const auto& e : g.edges) {  // every edge touched
    std::vector<int> c;
    for (int i = 0; i < k; ++i) {
      c.push_back(X(e[0], i));
      c.push_back(X(e[1], i));
    }
    f.add_clause(std::move(c));
  }
  return f;
}

// ------------------------------------------------------ scale selection

/// Energy gap between the canonical violated and satisfied labelings of a
/// length-k clause node (all weights at unit scale).
double violation_margin(const CertifiedClauseWeights& w, double w_r) {
  return 0.75 * w.length * (w.w_l + w_r) + 1.5 * (w.w_false - w.w_blue);
}

/// Largest possible swing of the objective fragment's energy.
double fragment_span(const std::vector<QuadraticTerm>& ea,
                     const std::vector<std::pair<int, double>>& ws) {
  double s = 0.0;
  for (const auto& t : ea) s += 3.0 * std::abs(t.w);
  for (const auto& [node, c] : ws) s += 1.5 * std::abs(c);
  return s;
}

/// Clause-side scale: the cheapest single violation must outweigh the whole
/// objective span, so the global minimum always sits on a feasible state.
double clause_scale(const CnfFormula& f, const ClauseWeights& w, double span) {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& [len, count] : f.length_histogram())
    margin = std::min(margin, violation_margin(certify_for_length(w, len),
                                               w.w_r));
  if (!std::isfinite(margin) || margin <= 0.0) return 1.0;
  return std::max(1.0, (1.0 + span) / margin);
}

/// Smallest scale that keeps solution states absorbing.  Flipping a True
/// variable to False gains 3w from each positive product term whose partner
/// is True plus 1.5c from a positive linear term, while its satisfied clauses
/// sit at Blue and push back with nothing; only the complement pair
/// (weight 0.5*w_r*scale) resists, so it must outweigh the worst per-variable
/// objective load or the dynamics walk out of every solution they reach.
double holding_scale(int num_vars, const std::vector<QuadraticTerm>& ea,
                     const std::vector<std::pair<int, double>>& ws,
                     double w_r) {
  std::vector<double> load(static_cast<size_t>(num_vars) + 1, 0.0);
  for (const auto& t : ea)
    if (t.w > 0.0) {
      load[static_cast<size_t>(t.i)] += 2.0 * t.w;
      load[static_cast<size_t>(t.j)] += 2.0 * t.w;
    }
  for (const auto& [var, c] : ws)
    if (c > 0.0) load[static_cast<size_t>(var)] += c;
  const double worst = *std::max_element(load.begin(), load.end());
  if (worst <= 0.0) return 1.0;
  return 2.0 * worst / w_r + 1.0;
}

// ----------------------------------------------------------- assembly

ReductionArtifact make_trivial(ProblemInstance source, ProblemInstance built,
                               std::string why) {
  ReductionArtifact art;
  art.source = std::move(source);
  art.built = std::move(built);
  art.form = NetworkForm::direct;
  art.trivially_unsat = true;
  art.note = std::move(why);
  return art;
}

/// Compiles formula + objective fragments into art.  Terms are given over
/// 1-based formula variables and rewritten onto variable nodes.
void build_clause_network(ReductionArtifact& art, const CnfFormula& f,
                          std::vector<QuadraticTerm> ea,
                          std::vector<std::pair<int, double>> ws,
                          const EncodeOptions& opt,
                          std::optional<double> fixed_scale = {}) {
  const double span = fragment_span(ea, ws);
  SatNetworkOptions so;
  so.weights = opt.weights;
  so.merge_bias = opt.merge_bias;
  so.scale = fixed_scale ? *fixed_scale : clause_scale(f, opt.weights, span);
  so.scale = std::max(
      so.scale, holding_scale(f.num_vars(), ea, ws, opt.weights.w_r));
  art.form = NetworkForm::clause;
  art.scale = so.scale;
  art.sat = build_sat_network(f, so);
  art.core_bits = f.num_vars();
  CouplingGraph& g = art.sat.graph;
  for (auto& t : ea) {
    t.i = art.sat.var_node[static_cast<size_t>(t.i - 1)];
    t.j = art.sat.var_node[static_cast<size_t>(t.j - 1)];
  }
  for (auto& [node, c] : ws)
    node = art.sat.var_node[static_cast<size_t>(node - 1)];
  if (!ea.empty()) {
    const auto aux = add_energy_and(g, std::move(ea));
    art.energy_and_pairs = static_cast<long long>(aux.size());
  }
  if (!ws.empty()) add_weighted_sum(g, art.sat.true_node, ws);
  art.objective_connections =
      3 * art.energy_and_pairs + static_cast<long long>(ws.size());
}

/// Direct quadratic/linear network over `n` Blue-restricted binary nodes.
/// Pair terms are 1-based like the clause path for uniformity of callers.
struct DirectBuild {
  CouplingGraph g;
  int blue = -1;
  int true_node = -1;
  std::vector<int> nodes;
};

DirectBuild direct_binary_nodes(int n, bool with_true) {
  DirectBuild b;
  b.g.add_nodes(n);
  b.nodes.resize(static_cast<size_t>(n));
  std::iota(b.nodes.begin(), b.nodes.end(), 0);
  b.blue = b.g.add_node();
  b.g.clamp_label(b.blue, SpinLabel::B);
  if (with_true) {
    b.true_node = b.g.add_node();
    b.g.clamp_label(b.true_node, SpinLabel::T);
  }
  return b;
}

void finish_direct(ReductionArtifact& art, DirectBuild&& b,
                   std::vector<QuadraticTerm> ea,
                   std::vector<std::pair<int, double>> ws) {
  art.form = NetworkForm::direct;
  if (!ea.empty()) {
    const auto aux = add_energy_and(b.g, std::move(ea));
    art.energy_and_pairs = static_cast<long long>(aux.size());
  }
  if (!ws.empty()) add_weighted_sum(b.g, b.true_node, ws);
  art.objective_connections =
      3 * art.energy_and_pairs + static_cast<long long>(ws.size());
  for (int v : b.nodes) add_blue_restriction(b.g, v, b.blue);
  art.decision_nodes = std::move(b.nodes);
  art.core_bits = static_cast<int>(art.decision_nodes.size());
  art.direct = std::move(b.g);
}

// ------------------------------------------------------------- encoders

void encode_sat(ReductionArtifact& art, const EncodeOptions& opt) {
  build_clause_network(art, art.built.cnf, {}, {}, opt);
}

void encode_ip01(ReductionArtifact& art, const EncodeOptions& opt) {
  (void)opt;
  const auto& inst = art.built;
  const int n = static_cast<int>(inst.C.front().size());
  const int rows = static_cast<int>(inst.C.size());
  DirectBuild b = direct_binary_nodes(n, /*with_true=*/true);
  std::vector<QuadraticTerm> ea;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      double q = 0.0;  // coefficient of x_j x_k in the squared penalty
      for (int i = 0; i < rows; ++i)
        q += static_cast<double>(inst.C[static_cast<size_t>(i)]
                                       [static_cast<size_t>(j)]) *
             static_cast<double>(
                 inst.C[static_cast<size_t>(i)][static_cast<size_t>(k)]);
      ea.push_back({j, k, q});  // Q_jk = 2q, product weight Q_jk / 2
    }
  std::vector<std::pair<int, double>> ws;
  for (int j = 0; j < n; ++j) {
    double l = 0.0;
    for (int i = 0; i < rows; ++i) {
      const double c = static_cast<double>(
          inst.C[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      l += c * c - 2.0 * static_cast<double>(inst.b[static_cast<size_t>(i)]) * c;
    }
    if (!inst.a.empty())
      l += inst.lambda * static_cast<double>(inst.a[static_cast<size_t>(j)]);
    ws.emplace_back(j, l);
  }
  finish_direct(art, std::move(b), std::move(ea), std::move(ws));
}

void encode_hamilton(ReductionArtifact& art, bool circle,
                     const EncodeOptions& opt) {
  build_clause_network(art, hamilton_formula(art.built.graph, circle), {}, {},
                       opt);
}

void encode_tsp(ReductionArtifact& art, const EncodeOptions& opt) {
  const auto& w = art.built.tsp_weights;
  const int n = static_cast<int>(w.size());
  GraphData complete;
  complete.n = n;
  double total = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      complete.edges.push_back({u, v});
      total += w[static_cast<size_t>(u)][static_cast<size_t>(v)];
    }
  auto X = [n](int pos, int v) { return pos * n + v + 1; };
  std::vector<QuadraticTerm> ea;  // both travel directions, every step
  for (int p = 0; p < n; ++p)
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const double wuv = w[static_cast<size_t>(u)][static_cast<size_t>(v)];
        ea.push_back({X(p, u), X((p + 1) % n, v), wuv});
        ea.push_back({X(p, v), X((p + 1) % n, u), wuv});
      }
  build_clause_network(art, hamilton_formula(complete, /*circle=*/true),
                       std::move(ea), {}, opt, total + 1.0);
}

void encode_clique(ReductionArtifact& art, const EncodeOptions& opt) {
  build_clause_network(art, clique_formula(art.built.graph, *art.built.k), {},
                       {}, opt);
}

void encode_node_cover(ReductionArtifact& art, const EncodeOptions& opt) {
  const auto& g = art.built.graph;
  const int k = *art.built.k;
  if (k == 0 && g.edge_count() > 0) {
    art = make_trivial(art.source, art.built,
                       "an empty cover cannot touch any edge");
    return;
  }
  build_clause_network(art, node_cover_formula(g, k), {}, {}, opt);
}

void encode_set_cover(ReductionArtifact& art, const EncodeOptions& opt) {
  const auto& inst = art.built;
  const int m = static_cast<int>(inst.subsets.size());
  std::vector<std::vector<int>> covers(
      static_cast<size_t>(inst.universe_size));
  for (int j = 0; j < m; ++j)
    for (int e : inst.subsets[static_cast<size_t>(j)])
      covers[static_cast<size_t>(e)].push_back(j + 1);
  for (int e = 0; e < inst.universe_size; ++e)
    if (covers[static_cast<size_t>(e)].empty()) {
      art = make_trivial(art.source, art.built,
                         "element " + std::to_string(e) +
                             " is in no candidate set");
      return;
    }
  CnfFormula f(m);
  for (auto& c : covers) f.add_clause(std::move(c));
  std::vector<std::pair<int, double>> ws;
  for (int j = 1; j <= m; ++j) ws.emplace_back(j, inst.lambda);
  build_clause_network(art, f, {}, std::move(ws), opt);
}

void encode_chromatic(ReductionArtifact& art, const EncodeOptions& opt) {
  if (!art.built.k)
    throw std::invalid_argument("chromatic-number needs a color count k");
  const auto& g = art.built.graph;
  const int k = *art.built.k, n = g.n;
  if (k <= 3) {
    // Small palettes run natively: positive couplings penalize equal phases.
    DirectBuild b;
    b.g.add_nodes(n);
    b.nodes.resize(static_cast<size_t>(n));
    std::iota(b.nodes.begin(), b.nodes.end(), 0);
    if (k == 2) {
      b.blue = b.g.add_node();
      b.g.clamp_label(b.blue, SpinLabel::B);
    }
    for (const auto& e : g.edges) b.g.couple(e[0], e[1], 1.0);
    if (k == 2)
      for (int v : b.nodes) add_blue_restriction(b.g, v, b.blue);
    art.form = NetworkForm::direct;
    art.decision_nodes = std::move(b.nodes);
    art.core_bits = k == 2 ? n : 0;  // three-state nodes have no bit view
    art.direct = std::move(b.g);
    return;
  }
  CnfFormula f(n * k);
  auto X = [k](int v, int color) { return v * k + color + 1; };
  for (int v = 0; v < n; ++v) {
    std::vector<int> c;
    for (int i = 0; i < k; ++i) c.push_back(X(v, i));
    f.add_clause(std::move(c));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) f.add_clause({-X(v, i), -X(v, j)});
  }
  std::vector<QuadraticTerm> ea;  // one conflict term per edge and color
  for (const auto& e : g.edges)
    for (int i = 0; i < k; ++i) ea.push_back({X(e[0], i), X(e[1], i), 0.5});
  build_clause_network(art, f, std::move(ea), {}, opt);
}

void encode_fns(ReductionArtifact& art, const EncodeOptions& opt) {
  const auto& g = art.built.graph;
  const int n = g.n, h = g.n;
  const double lambda = art.built.lambda;
  CnfFormula f(n * h);
  auto X = [h](int v, int height) { return v * h + height + 1; };
  for (int v = 0; v < n; ++v)  // at most one height; none = removed
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j) f.add_clause({-X(v, i), -X(v, j)});
  std::vector<QuadraticTerm> ea;  // edges may not descend (i >= j penalized)
  for (const auto& e : g.edges)
    for (int i = 0; i < h; ++i)
      for (int j = 0; j <= i; ++j) ea.push_back({X(e[0], i), X(e[1], j), 0.5});
  std::vector<std::pair<int, double>> ws;  // reward every assigned height
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < h; ++i) ws.emplace_back(X(v, i), -lambda);
  build_clause_network(art, f, std::move(ea), std::move(ws), opt);
}

void encode_fas(ReductionArtifact& art, const EncodeOptions& opt) {
  const auto& g = art.built.graph;
  const int n = g.n, h = g.n;
  const int e = static_cast<int>(g.edge_count());
  const double lambda = art.built.lambda;
  CnfFormula f(n * h + e * h);
  auto X = [h](int v, int i) { return v * h + i + 1; };
  auto Z = [n, h](int edge, int i) { return n * h + edge * h + i + 1; };
  for (int v = 0; v < n; ++v) {  // exactly one height per vertex
    std::vector<int> c;
    for (int i = 0; i < h; ++i) c.push_back(X(v, i));
    f.add_clause(std::move(c));
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j) f.add_clause({-X(v, i), -X(v, j)});
  }
  // Retention indicator z_{uv,i} pays off (-lambda) only when u sits at
  // height i and v sits higher; otherwise its optimum is 0.
  std::vector<QuadraticTerm> ea;
  std::vector<std::pair<int, double>> ws;
  for (int m = 0; m < e; ++m) {
    const int u = g.edges[static_cast<size_t>(m)][0];
    const int v = g.edges[static_cast<size_t>(m)][1];
    for (int i = 0; i < h; ++i) {
      ws.emplace_back(Z(m, i), 2.0 - lambda);
      ea.push_back({Z(m, i), X(u, i), -0.5});
      for (int j = i + 1; j < h; ++j) ea.push_back({Z(m, i), X(v, j), -0.5});
    }
  }
  build_clause_network(art, f, std::move(ea), std::move(ws), opt);
  art.core_bits = n * h;  // z completes canonically from the heights
}

void encode_exact_cover(ReductionArtifact& art, const EncodeOptions& opt) {
  const auto& inst = art.built;
  const int m = static_cast<int>(inst.subsets.size());
  std::vector<std::vector<int>> covers(
      static_cast<size_t>(inst.universe_size));
  for (int j = 0; j < m; ++j)
    for (int e : inst.subsets[static_cast<size_t>(j)])
      covers[static_cast<size_t>(e)].push_back(j + 1);
  CnfFormula f(m);
  for (auto& idx : covers) {
    if (idx.empty()) {
      art = make_trivial(art.source, art.built,
                         "some element is in no candidate set");
      return;
    }
    for (size_t a = 0; a < idx.size(); ++a)  // no two chosen sets overlap
      for (size_t b = a + 1; b < idx.size(); ++b)
        f.add_clause({-idx[a], -idx[b]});
    f.add_clause(std::move(idx));
  }
  build_clause_network(art, f, {}, {}, opt);
}

void encode_graph_partitioning(ReductionArtifact& art) {
  const auto& g = art.built.graph;
  const int n = g.n;
  const double j1 = 2.0 * static_cast<double>(g.edge_count()) + 1.0;
  DirectBuild b = direct_binary_nodes(n, /*with_true=*/false);
  for (int u = 0; u < n; ++u)  // uniform repulsion balances the halves
    for (int v = u + 1; v < n; ++v) b.g.couple(u, v, j1);
  for (const auto& e : g.edges)  // edges prefer to stay inside one half
    b.g.couple(e[0], e[1], -1.0);
  finish_direct(art, std::move(b), {}, {});
}

void encode_min_cut(ReductionArtifact& art) {
  const auto& g = art.built.graph;
  const int n = g.n;
  DirectBuild b = direct_binary_nodes(n, /*with_true=*/false);
  for (size_t m = 0; m < g.edges.size(); ++m) {
    const double w = g.weights.empty() ? 1.0 : g.weights[m];
    b.g.couple(g.edges[m][0], g.edges[m][1], -w);
  }
  // Seed the two sides: vertex 0 and a breadth-first farthest vertex
  // (an unreachable vertex, if any, is farthest of all).
  const auto adj = g.adjacency();
  std::vector<int> dist(static_cast<size_t>(n), -1);
  std::queue<int> q;
  dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[static_cast<size_t>(u)])
      if (dist[static_cast<size_t>(v)] < 0) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        q.push(v);
      }
  }
  int far = -1;
  for (int v = 1; v < n; ++v)
    if (dist[static_cast<size_t>(v)] < 0) {
      far = v;
      break;
    }
  if (far < 0) {
    int best = -1;
    for (int v = 1; v < n; ++v)
      if (dist[static_cast<size_t>(v)] > best) {
        best = dist[static_cast<size_t>(v)];
        far = v;
      }
  }
  DirectBuild built = std::move(b);
  finish_direct(art, std::move(built), {}, {});
  art.direct.clamp_label(0, SpinLabel::T);
  art.direct.clamp_label(far, SpinLabel::F);
}

void encode_max_cut(ReductionArtifact& art) {
  const auto& g = art.built.graph;
  const int n = g.n;
  DirectBuild b = direct_binary_nodes(n, /*with_true=*/true);
  std::vector<double> wdeg(static_cast<size_t>(n), 0.0);
  std::vector<QuadraticTerm> ea;
  for (size_t m = 0; m < g.edges.size(); ++m) {
    const double w = g.weights.empty() ? 1.0 : g.weights[m];
    ea.push_back({g.edges[m][0], g.edges[m][1], w});
    wdeg[static_cast<size_t>(g.edges[m][0])] += w;
    wdeg[static_cast<size_t>(g.edges[m][1])] += w;
  }
  std::vector<std::pair<int, double>> ws;  // maximize = minimize the negation
  for (int v = 0; v < n; ++v) ws.emplace_back(v, -wdeg[static_cast<size_t>(v)]);
  finish_direct(art, std::move(b), std::move(ea), std::move(ws));
}

void encode_shortest_path(ReductionArtifact& art, const EncodeOptions& opt) {
  const auto& inst = art.built;
  const auto& g = inst.graph;
  const int n = g.n, K = *inst.k;
  CnfFormula f(K * n);
  auto X = [n](int pos, int v) { return pos * n + v + 1; };
  std::vector<std::vector<int>> preds(static_cast<size_t>(n));
  for (const auto& e : g.edges) {
    preds[static_cast<size_t>(e[1])].push_back(e[0]);
    if (!g.directed) preds[static_cast<size_t>(e[0])].push_back(e[1]);
  }
  for (int p = 1; p < K; ++p)  // every placement has a predecessor
    for (int v = 0; v < n; ++v) {
      std::vector<int> c{-X(p, v)};
      for (int u : preds[static_cast<size_t>(v)]) c.push_back(X(p - 1, u));
      f.add_clause(std::move(c));
    }
  std::vector<int> reach;  // the target appears at some position
  for (int p = 0; p < K; ++p) reach.push_back(X(p, inst.t));
  f.add_clause(std::move(reach));
  for (int v = 0; v < n; ++v)  // position 1 is reserved for the source
    if (v != inst.s) f.add_clause({-X(0, v)});
  build_clause_network(art, f, {}, {}, opt);
}

void encode_maze(ReductionArtifact& art) {
  art.form = NetworkForm::maze;
  art.maze = build_maze_network(art.built.maze_spec);
  art.core_bits = 0;
}

void encode_gate(ReductionArtifact& art) {
  const auto& inst = art.built;
  art.form = NetworkForm::gate;
  art.gate = build_logic_gate(inst.gate,
                              static_cast<int>(inst.gate_inputs.size()));
  for (size_t i = 0; i < inst.gate_inputs.size(); ++i)
    art.gate.graph.clamp_label(art.gate.input_nodes[i],
                               inst.gate_inputs[i] ? SpinLabel::T
                                                   : SpinLabel::F);
  art.core_bits = 0;
}

// ------------------------------------------------------------ decoding

std::vector<bool> clause_bits(const ReductionArtifact& art,
                              const PottsState& s) {
  return art.sat.decode(s);
}

/// Exactly-one block reader: the single set index in [begin, begin+len), or
/// -1 when not exactly one bit is set.
int only_index(const std::vector<bool>& bits, int begin, int len) {
  int found = -1;
  for (int i = 0; i < len; ++i)
    if (bits[static_cast<size_t>(begin + i)]) {
      if (found >= 0) return -1;
      found = i;
    }
  return found;
}

DecodedSolution infeasible() { return {}; }

DecodedSolution decode_order(const ProblemInstance& inst,
                             const std::vector<bool>& bits, bool circle,
                             const std::vector<std::vector<double>>* weights) {
  const int n = weights ? static_cast<int>(weights->size()) : inst.graph.n;
  std::vector<int> order(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int p = 0; p < n; ++p) {
    const int v = only_index(bits, p * n, n);
    if (v < 0 || used[static_cast<size_t>(v)]) return infeasible();
    order[static_cast<size_t>(p)] = v;
    used[static_cast<size_t>(v)] = true;
  }
  double length = 0.0;
  const int steps = circle ? n : n - 1;
  for (int p = 0; p < steps; ++p) {
    const int u = order[static_cast<size_t>(p)];
    const int v = order[static_cast<size_t>((p + 1) % n)];
    if (weights)
      length += (*weights)[static_cast<size_t>(u)][static_cast<size_t>(v)];
    else if (!inst.graph.has_edge(u, v))
      return infeasible();
  }
  DecodedSolution out;
  out.feasible = true;
  if (weights) {
    out.witness = Json{{"tour", order}};
    out.objective = length;
  } else {
    out.witness = Json{{"order", order}};
  }
  return out;
}

DecodedSolution decode_clique_like(const GraphData& g, int k,
                                   const std::vector<bool>& bits) {
  const int n = g.n;
  std::set<int> chosen;
  for (int i = 0; i < k; ++i) {
    const int v = only_index(bits, i * n, n);
    if (v < 0) return infeasible();
    chosen.insert(v);
  }
  if (static_cast<int>(chosen.size()) != k) return infeasible();
  for (auto it = chosen.begin(); it != chosen.end(); ++it)
    for (auto jt = std::next(it); jt != chosen.end(); ++jt)
      if (!g.has_edge(*it, *jt)) return infeasible();
  DecodedSolution out;
  out.feasible = true;
  out.witness = Json{{"vertices", std::vector<int>(chosen.begin(),
                                                   chosen.end())}};
  return out;
}

DecodedSolution decode_node_cover(const GraphData& g, int k,
                                  const std::vector<bool>& bits) {
  std::set<int> cover;
  for (int v = 0; v < g.n; ++v)
    for (int i = 0; i < k; ++i)
      if (bits[static_cast<size_t>(v * k + i)]) cover.insert(v);
  if (static_cast<int>(cover.size()) > k) return infeasible();
  for (const auto& e : g.edges)
    if (!cover.count(e[0]) && !cover.count(e[1])) return infeasible();
  DecodedSolution out;
  out.feasible = true;
  out.witness =
      Json{{"vertices", std::vector<int>(cover.begin(), cover.end())}};
  return out;
}

DecodedSolution decode_colors(const ProblemInstance& built,
                              const ReductionArtifact& art,
                              const PottsState& s) {
  const auto& g = built.graph;
  const int k = *built.k, n = g.n;
  std::vector<int> colors(static_cast<size_t>(n), 0);
  if (art.form == NetworkForm::clause) {
    const auto bits = clause_bits(art, s);
    for (int v = 0; v < n; ++v) {
      const int c = only_index(bits, v * k, k);
      if (c < 0) return infeasible();
      colors[static_cast<size_t>(v)] = c;
    }
  } else if (k == 1) {
    if (g.edge_count() > 0) return infeasible();
  } else {
    for (int v = 0; v < n; ++v) {
      const SpinLabel l = s[art.decision_nodes[static_cast<size_t>(v)]];
      if (k == 2 && l == SpinLabel::B) return infeasible();
      colors[static_cast<size_t>(v)] = static_cast<int>(l);
    }
  }
  for (const auto& e : g.edges)
    if (colors[static_cast<size_t>(e[0])] == colors[static_cast<size_t>(e[1])])
      return infeasible();
  DecodedSolution out;
  out.feasible = true;
  out.witness = Json{{"colors", colors}};
  return out;
}

/// Heights with at-most-one semantics: -1 for "no height", -2 on a
/// double-assignment (invalid certificate).
std::vector<int> read_heights(const std::vector<bool>& bits, int n, int h) {
  std::vector<int> heights(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < h; ++i)
      if (bits[static_cast<size_t>(v * h + i)]) {
        heights[static_cast<size_t>(v)] =
            heights[static_cast<size_t>(v)] == -1 ? i : -2;
      }
  }
  return heights;
}

DecodedSolution decode_fns(const ProblemInstance& built,
                           const std::vector<bool>& bits) {
  const auto& g = built.graph;
  const int n = g.n;
  const auto heights = read_heights(bits, n, n);
  std::vector<int> removed;
  for (int v = 0; v < n; ++v) {
    if (heights[static_cast<size_t>(v)] == -2) return infeasible();
    if (heights[static_cast<size_t>(v)] == -1) removed.push_back(v);
  }
  for (const auto& e : g.edges) {  // retained edges must ascend
    const int hu = heights[static_cast<size_t>(e[0])];
    const int hv = heights[static_cast<size_t>(e[1])];
    if (hu >= 0 && hv >= 0 && hu >= hv) return infeasible();
  }
  DecodedSolution out;
  out.feasible = true;
  out.witness = Json{{"removed", removed}};
  out.objective = static_cast<double>(removed.size());
  return out;
}

DecodedSolution decode_fas(const ProblemInstance& built,
                           const std::vector<bool>& bits) {
  const auto& g = built.graph;
  const int n = g.n;
  const auto heights = read_heights(bits, n, n);
  for (int v = 0; v < n; ++v)
    if (heights[static_cast<size_t>(v)] < 0) return infeasible();
  std::vector<std::array<int, 2>> removed;  // non-ascending edges
  for (const auto& e : g.edges)
    if (heights[static_cast<size_t>(e[0])] >= heights[static_cast<size_t>(e[1])])
      removed.push_back(e);
  DecodedSolution out;
  out.feasible = true;
  Json edges = Json::array();
  for (const auto& e : removed) edges.push_back({e[0], e[1]});
  out.witness = Json{{"removed_edges", edges}};
  out.objective = static_cast<double>(removed.size());
  return out;
}

std::vector<int> chosen_indices(const std::vector<bool>& bits) {
  std::vector<int> out;
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out.push_back(static_cast<int>(i));
  return out;
}

DecodedSolution decode_sides(const ReductionArtifact& art, const PottsState& s,
                             bool need_balance) {
  const auto& g = art.built.graph;
  std::vector<int> side(static_cast<size_t>(g.n), 0);
  int zeros = 0;
  for (int v = 0; v < g.n; ++v) {
    const SpinLabel l = s[art.decision_nodes[static_cast<size_t>(v)]];
    if (l == SpinLabel::B) return infeasible();
    side[static_cast<size_t>(v)] = l == SpinLabel::T ? 0 : 1;
    zeros += side[static_cast<size_t>(v)] == 0 ? 1 : 0;
  }
  if (need_balance && zeros * 2 != g.n) return infeasible();
  double cut = 0.0;
  for (size_t m = 0; m < g.edges.size(); ++m)
    if (side[static_cast<size_t>(g.edges[m][0])] !=
        side[static_cast<size_t>(g.edges[m][1])])
      cut += g.weights.empty() ? 1.0 : g.weights[m];
  DecodedSolution out;
  out.feasible = true;
  out.witness = Json{{"sides", side}};
  out.objective = cut;
  return out;
}

DecodedSolution decode_shortest_path(const ProblemInstance& built,
                                     const std::vector<bool>& bits) {
  const auto& g = built.graph;
  const int n = g.n, K = *built.k;
  std::vector<std::vector<int>> preds(static_cast<size_t>(n));
  for (const auto& e : g.edges) {
    preds[static_cast<size_t>(e[1])].push_back(e[0]);
    if (!g.directed) preds[static_cast<size_t>(e[0])].push_back(e[1]);
  }
  for (auto& p : preds) std::sort(p.begin(), p.end());
  int pos = -1;
  for (int p = 0; p < K; ++p)
    if (bits[static_cast<size_t>(p * n + built.t)]) {
      pos = p;
      break;
    }
  if (pos < 0) return infeasible();
  std::vector<int> path{built.t};
  int cur = built.t;
  for (int p = pos; p > 0; --p) {
    int next = -1;
    for (int u : preds[static_cast<size_t>(cur)])
      if (bits[static_cast<size_t>((p - 1) * n + u)]) {
        next = u;
        break;
      }
    if (next < 0) return infeasible();
    cur = next;
    path.push_back(cur);
  }
  if (cur != built.s) return infeasible();
  std::reverse(path.begin(), path.end());
  // Stray satisfied placements can make the recovered walk revisit a vertex;
  // cutting each loop leaves a simple path over the same edges.
  std::vector<int> simple;
  for (int v : path) {
    auto seen = std::find(simple.begin(), simple.end(), v);
    if (seen != simple.end()) simple.erase(seen + 1, simple.end());
    else simple.push_back(v);
  }
  DecodedSolution out;
  out.feasible = true;
  out.witness = Json{{"path", simple}};
  out.objective = static_cast<double>(simple.size() - 1);
  return out;
}

}  // namespace

const CouplingGraph& ReductionArtifact::graph() const {
  switch (form) {
    case NetworkForm::clause: return sat.graph;
    case NetworkForm::direct: return direct;
    case NetworkForm::maze: return maze.graph;
    case NetworkForm::gate: return gate.graph;
  }
  throw std::logic_error("invalid network form");
}

CouplingGraph& ReductionArtifact::graph() {
  return const_cast<CouplingGraph&>(
      static_cast<const ReductionArtifact*>(this)->graph());
}

ReductionArtifact encode(const ProblemInstance& inst,
                         const EncodeOptions& options) {
  inst.validate();
  ReductionArtifact art;
  art.source = inst;
  art.built = inst;

  if (inst.kind == ProblemKind::number_partitioning) {
    long long sum = 0;
    for (long long v : inst.numbers) sum += v;
    if (sum % 2 != 0)
      return make_trivial(inst, inst, "odd total cannot split evenly");
  }
  if (inst.kind == ProblemKind::set_packing &&
      *inst.k > static_cast<int>(inst.subsets.size()))
    return make_trivial(inst, inst, "fewer sets than the packing target");
  if (inst.kind == ProblemKind::three_dim_matching &&
      inst.t_size > static_cast<int>(inst.triples.size()))
    return make_trivial(inst, inst, "fewer triples than the matching needs");

  // Rewrite onto the kind that is actually compiled.
  for (bool changed = true; changed;) {
    changed = true;
    switch (art.built.kind) {
      case ProblemKind::set_packing:
        art.built = delegate_set_packing(art.built);
        break;
      case ProblemKind::independent_set:
        art.built = delegate_independent_set(art.built);
        break;
      case ProblemKind::hitting_set:
        art.built = delegate_hitting_set(art.built);
        break;
      case ProblemKind::clique_cover:
        art.built = delegate_clique_cover(art.built);
        break;
      case ProblemKind::three_dim_matching:
        art.built = delegate_three_dim_matching(art.built);
        break;
      case ProblemKind::number_partitioning:
        art.built = delegate_number_partitioning(art.built);
        break;
      case ProblemKind::knapsack:
        art.built = delegate_knapsack(art.built);
        break;
      default:
        changed = false;
        break;
    }
  }

  try {
    switch (art.built.kind) {
      case ProblemKind::sat:
        if (art.built.cnf.has_empty_clause()) {
          art = make_trivial(art.source, art.built,
                             "the formula contains an empty clause");
          break;
        }
        encode_sat(art, options);
        break;
      case ProblemKind::ip01: encode_ip01(art, options); break;
      case ProblemKind::hamilton_path: encode_hamilton(art, false, options); break;
      case ProblemKind::hamilton_circle: encode_hamilton(art, true, options); break;
      case ProblemKind::tsp: encode_tsp(art, options); break;
      case ProblemKind::clique: encode_clique(art, options); break;
      case ProblemKind::node_cover: encode_node_cover(art, options); break;
      case ProblemKind::set_cover: encode_set_cover(art, options); break;
      case ProblemKind::chromatic_number: encode_chromatic(art, options); break;
      case ProblemKind::feedback_node_set: encode_fns(art, options); break;
      case ProblemKind::feedback_arc_set: encode_fas(art, options); break;
      case ProblemKind::exact_cover: encode_exact_cover(art, options); break;
      case ProblemKind::graph_partitioning: encode_graph_partitioning(art); break;
      case ProblemKind::min_cut: encode_min_cut(art); break;
      case ProblemKind::max_cut: encode_max_cut(art); break;
      case ProblemKind::maze: encode_maze(art); break;
      case ProblemKind::shortest_path: encode_shortest_path(art, options); break;
      case ProblemKind::logic_gate: encode_gate(art); break;
      default:
        throw std::logic_error("unresolved delegation");
    }
  } catch (const UnsatisfiableError& err) {
    art = make_trivial(art.source, art.built, err.what());
  }
  return art;
}

DecodedSolution decode_artifact(const ReductionArtifact& art,
                                const PottsState& s) {
  if (art.trivially_unsat) return infeasible();
  const ProblemInstance& src = art.source;
  const ProblemInstance& built = art.built;

  if (art.form == NetworkForm::maze) {
    const auto path = art.maze.decode_path(s);
    if (path.empty()) return infeasible();
    DecodedSolution out;
    out.feasible = true;
    out.witness = Json{{"path", path}};
    out.objective = static_cast<double>(path.size() - 1);
    return out;
  }
  if (art.form == NetworkForm::gate) {
    const bool value = art.gate.output(s);
    DecodedSolution out;
    out.feasible = value == gate_truth(src.gate, src.gate_inputs);
    out.witness = Json{{"output", value}};
    return out;
  }

  std::vector<bool> bits;
  if (art.form == NetworkForm::clause) bits = clause_bits(art, s);

  switch (src.kind) {
    case ProblemKind::sat: {
      if (!art.sat.formula.satisfied_by(bits)) return infeasible();
      DecodedSolution out;
      out.feasible = true;
      out.witness = Json{{"assignment", bits}};
      return out;
    }
    case ProblemKind::ip01: {
      std::vector<bool> x;
      for (int node : art.decision_nodes) {
        if (s[node] == SpinLabel::B) return infeasible();
        x.push_back(s[node] == SpinLabel::T);
      }
      for (size_t i = 0; i < built.C.size(); ++i) {
        long long lhs = 0;
        for (size_t j = 0; j < x.size(); ++j)
          if (x[j]) lhs += built.C[i][j];
        if (lhs != built.b[i]) return infeasible();
      }
      DecodedSolution out;
      out.feasible = true;
      out.witness = Json{{"x", x}};
      if (!built.a.empty()) {
        double obj = 0.0;
        for (size_t j = 0; j < x.size(); ++j)
          if (x[j]) obj += static_cast<double>(built.a[j]);
        out.objective = obj;
      }
      return out;
    }
    case ProblemKind::hamilton_path:
      return decode_order(built, bits, false, nullptr);
    case ProblemKind::hamilton_circle:
      return decode_order(built, bits, true, nullptr);
    case ProblemKind::tsp:
      return decode_order(built, bits, true, &built.tsp_weights);
    case ProblemKind::clique:
      return decode_clique_like(built.graph, *built.k, bits);
    case ProblemKind::set_packing: {
      auto base = decode_clique_like(built.graph, *built.k, bits);
      if (!base.feasible) return base;
      const auto sets = base.witness.at("vertices").get<std::vector<int>>();
      std::set<int> seen;  // re-check disjointness on the source sets
      for (int j : sets)
        for (int e : src.subsets[static_cast<size_t>(j)])
          if (!seen.insert(e).second) return infeasible();
      base.witness = Json{{"sets", sets}};
      return base;
    }
    case ProblemKind::node_cover:
      return decode_node_cover(built.graph, *built.k, bits);
    case ProblemKind::independent_set: {
      auto base = decode_node_cover(built.graph, *built.k, bits);
      if (!base.feasible) return base;
      const auto cover = base.witness.at("vertices").get<std::vector<int>>();
      std::set<int> in_cover(cover.begin(), cover.end());
      std::vector<int> chosen;
      for (int v = 0; v < src.graph.n; ++v)
        if (!in_cover.count(v)) chosen.push_back(v);
      if (static_cast<int>(chosen.size()) < *src.k) return infeasible();
      chosen.resize(static_cast<size_t>(*src.k));
      for (size_t a = 0; a < chosen.size(); ++a)
        for (size_t b = a + 1; b < chosen.size(); ++b)
          if (src.graph.has_edge(chosen[a], chosen[b])) return infeasible();
      base.witness = Json{{"vertices", chosen}};
      return base;
    }
    case ProblemKind::set_cover: {
      const auto chosen = chosen_indices(bits);
      std::vector<bool> hit(static_cast<size_t>(built.universe_size), false);
      for (int j : chosen)
        for (int e : built.subsets[static_cast<size_t>(j)])
          hit[static_cast<size_t>(e)] = true;
      for (bool h : hit)
        if (!h) return infeasible();
      DecodedSolution out;
      out.feasible = true;
      out.witness = Json{{"sets", chosen}};
      out.objective = static_cast<double>(chosen.size());
      return out;
    }
    case ProblemKind::hitting_set: {
      const auto chosen = chosen_indices(bits);  // dual sets = elements
      if (static_cast<int>(chosen.size()) > *src.k) return infeasible();
      std::set<int> hs(chosen.begin(), chosen.end());
      for (const auto& c : src.subsets) {  // every collection is hit
        bool hit = false;
        for (int e : c)
          if (hs.count(e)) {
            hit = true;
            break;
          }
        if (!hit) return infeasible();
      }
      DecodedSolution out;
      out.feasible = true;
      out.witness = Json{{"elements", chosen}};
      out.objective = static_cast<double>(chosen.size());
      return out;
    }
    case ProblemKind::chromatic_number:
      return decode_colors(built, art, s);
    case ProblemKind::clique_cover: {
      auto base = decode_colors(built, art, s);
      if (!base.feasible) return base;
      const auto colors = base.witness.at("colors").get<std::vector<int>>();
      for (int u = 0; u < src.graph.n; ++u)  // same group => edge in source
        for (int v = u + 1; v < src.graph.n; ++v)
          if (colors[static_cast<size_t>(u)] == colors[static_cast<size_t>(v)] &&
              !src.graph.has_edge(u, v))
            return infeasible();
      base.witness = Json{{"groups", colors}};
      return base;
    }
    case ProblemKind::feedback_node_set:
      return decode_fns(built, bits);
    case ProblemKind::feedback_arc_set:
      return decode_fas(built, bits);
    case ProblemKind::exact_cover: {
      const auto chosen = chosen_indices(bits);
      std::vector<int> times(static_cast<size_t>(built.universe_size), 0);
      for (int j : chosen)
        for (int e : built.subsets[static_cast<size_t>(j)])
          ++times[static_cast<size_t>(e)];
      for (int t : times)
        if (t != 1) return infeasible();
      DecodedSolution out;
      out.feasible = true;
      out.witness = Json{{"sets", chosen}};
      return out;
    }
    case ProblemKind::three_dim_matching: {
      auto base = decode_clique_like(built.graph, *built.k, bits);
      if (!base.feasible) return base;
      const auto triples = base.witness.at("vertices").get<std::vector<int>>();
      std::set<int> a, bb, c;  // each coordinate used exactly once
      for (int idx : triples) {
        const auto& t = src.triples[static_cast<size_t>(idx)];
        if (!a.insert(t[0]).second || !bb.insert(t[1]).second ||
            !c.insert(t[2]).second)
          return infeasible();
      }
      base.witness = Json{{"triples", triples}};
      return base;
    }
    case ProblemKind::number_partitioning: {
      std::vector<int> side;
      long long total = 0, first = 0;
      for (size_t j = 0; j < src.numbers.size(); ++j) total += src.numbers[j];
      for (int node : art.decision_nodes) {
        if (s[node] == SpinLabel::B) return infeasible();
        side.push_back(s[node] == SpinLabel::T ? 0 : 1);
      }
      for (size_t j = 0; j < side.size(); ++j)
        if (side[j] == 0) first += src.numbers[j];
      if (2 * first != total) return infeasible();
      DecodedSolution out;
      out.feasible = true;
      out.witness = Json{{"sides", side}};
      return out;
    }
    case ProblemKind::knapsack: {
      long long sum = 0;
      std::vector<int> chosen;
      for (size_t j = 0; j < art.decision_nodes.size(); ++j) {
        const int node = art.decision_nodes[j];
        if (s[node] == SpinLabel::B) return infeasible();
        if (s[node] == SpinLabel::T) {
          chosen.push_back(static_cast<int>(j));
          sum += src.a[j];
        }
      }
      if (sum != src.b.front()) return infeasible();
      DecodedSolution out;
      out.feasible = true;
      out.witness = Json{{"chosen", chosen}};
      return out;
    }
    case ProblemKind::graph_partitioning:
      return decode_sides(art, s, /*need_balance=*/true);
    case ProblemKind::min_cut:
    case ProblemKind::max_cut:
      return decode_sides(art, s, /*need_balance=*/false);
    case ProblemKind::shortest_path:
      return decode_shortest_path(built, bits);
    default:
      throw std::logic_error("decode: unhandled kind");
  }
}

PottsState state_for_bits(const ReductionArtifact& art,
                          const std::vector<bool>& bits) {
  if (art.trivially_unsat)
    throw std::logic_error("no network was built for this instance");
  if (static_cast<int>(bits.size()) != art.core_bits)
    throw std::invalid_argument("bit vector width mismatch");
  if (art.form == NetworkForm::clause) {
    std::vector<bool> full = bits;
    if (art.source.kind == ProblemKind::feedback_arc_set) {
      const auto& g = art.built.graph;
      const int n = g.n, h = g.n;
      full.resize(static_cast<size_t>(art.sat.formula.num_vars()), false);
      const auto heights = read_heights(bits, n, h);
      for (size_t m = 0; m < g.edges.size(); ++m) {
        const int hu = heights[static_cast<size_t>(g.edges[m][0])];
        const int hv = heights[static_cast<size_t>(g.edges[m][1])];
        if (hu >= 0 && hv > hu)  // retention indicator at its optimum
          full[static_cast<size_t>(n * h + static_cast<int>(m) * h + hu)] =
              true;
      }
    }
    return art.sat.state_for_assignment(full);
  }
  if (art.form != NetworkForm::direct)
    throw std::logic_error("state_for_bits: unsupported network form");
  PottsState s = make_state(art.direct, SpinLabel::F);
  for (size_t i = 0; i < bits.size(); ++i)
    s[art.decision_nodes[i]] = bits[i] ? SpinLabel::T : SpinLabel::F;
  apply_clamps(art.direct, s);
  return s;
}

CountReport measure_resources(const ReductionArtifact& art) {
  CountReport rep;
  if (art.trivially_unsat) {
    rep.extras["trivially_unsat"] = 1.0;
    return rep;
  }
  const CouplingGraph& g = art.graph();
  rep.nodes = g.size();
  rep.connections = g.connection_count();
  switch (art.form) {
    case NetworkForm::clause:
      rep.mixed = mixed_row(art.sat.formula);
      rep.three_sat = three_sat_row(art.sat.formula);
      rep.decision_vars = art.sat.formula.num_vars();
      break;
    case NetworkForm::direct:
      rep.decision_vars = static_cast<long long>(art.decision_nodes.size());
      break;
    case NetworkForm::maze:
      rep.decision_vars = art.maze.spec.cells();
      break;
    case NetworkForm::gate:
      rep.decision_vars = 1;
      break;
  }
  if (art.energy_and_pairs > 0)
    rep.extras["energy_and_pairs"] = static_cast<double>(art.energy_and_pairs);
  if (art.objective_connections > 0)
    rep.extras["objective_connections"] =
        static_cast<double>(art.objective_connections);
  return rep;
}

}  // namespace oscopt
