#include "oscopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "oscopt/netbuilder.hpp"

namespace oscopt {
namespace {

using Json = nlohmann::json;

[[noreturn]] void over_budget() {
  throw std::length_error("solution space exceeds the oracle budget");
}

long long pow_ll(long long base, int exp, long long cap) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / std::max<long long>(base, 1)) return cap + 1;
    r *= base;
  }
  return r;
}

long long comb_ll(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

long long fact_ll(int n, long long cap) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) {
    if (r > cap / i) return cap + 1;
    r *= i;
  }
  return r;
}

/// Calls cb(subset) for every k-subset of {0..n-1}; cb returns false to stop.
template <typename F>
void each_combination(int n, int k, F cb) {
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    if (!cb(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

/// Calls cb(bits) for every subset of {0..n-1} in increasing binary order.
template <typename F>
void each_subset(int n, F cb) {
  std::vector<bool> bits(static_cast<size_t>(n), false);
  while (true) {
    if (!cb(bits)) return;
    int i = 0;
    while (i < n && bits[static_cast<size_t>(i)]) {
      bits[static_cast<size_t>(i)] = false;
      ++i;
    }
    if (i == n) return;
    bits[static_cast<size_t>(i)] = true;
  }
}

bool graph_acyclic(int n, const std::vector<std::array<int, 2>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (const auto& e : edges) {
    adj[static_cast<size_t>(e[0])].push_back(e[1]);
    ++indeg[static_cast<size_t>(e[1])];
  }
  std::queue<int> q;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    ++seen;
    for (int v : adj[static_cast<size_t>(u)])
      if (--indeg[static_cast<size_t>(v)] == 0) q.push(v);
  }
  return seen == n;
}

double cut_weight(const GraphData& g, const std::vector<int>& side) {
  double w = 0.0;
  for (size_t m = 0; m < g.edges.size(); ++m)
    if (side[static_cast<size_t>(g.edges[m][0])] !=
        side[static_cast<size_t>(g.edges[m][1])])
      w += g.weights.empty() ? 1.0 : g.weights[m];
  return w;
}

/// Deterministic far seed for the two-pole cut: the first unreachable vertex
/// if any, otherwise the lowest-index vertex at maximum breadth-first depth.
int far_seed(const GraphData& g) {
  const auto adj = g.adjacency();
  std::vector<int> dist(static_cast<size_t>(g.n), -1);
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
  for (int v = 1; v < g.n; ++v)
    if (dist[static_cast<size_t>(v)] < 0) return v;
  int far = 0, best = 0;
  for (int v = 1; v < g.n; ++v)
    if (dist[static_cast<size_t>(v)] > best) {
      best = dist[static_cast<size_t>(v)];
      far = v;
    }
  return far == 0 ? (g.n > 1 ? 1 : 0) : far;
}

std::vector<int> bfs_path(const std::vector<std::vector<int>>& adj, int s,
                          int t) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> prev(static_cast<size_t>(n), -2);
  std::queue<int> q;
  prev[static_cast<size_t>(s)] = -1;
  q.push(s);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    if (u == t) break;
    for (int v : adj[static_cast<size_t>(u)])
      if (prev[static_cast<size_t>(v)] == -2) {
        prev[static_cast<size_t>(v)] = u;
        q.push(v);
      }
  }
  if (prev[static_cast<size_t>(t)] == -2) return {};
  std::vector<int> path;
  for (int v = t; v != -1; v = prev[static_cast<size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<int>> maze_adjacency(const MazeSpec& spec) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(spec.cells()));
  for (int c = 0; c < spec.cells(); ++c)
    for (int d = 0; d < 4; ++d)
      if (spec.open(c, d)) adj[static_cast<size_t>(c)].push_back(
          spec.neighbor(c, d));
  return adj;
}

// ------------------------------------------------------- verdict helpers

OracleVerdict none() { return {}; }

OracleVerdict decision(Json witness) {
  OracleVerdict v;
  v.feasible = true;
  v.witness = std::move(witness);
  return v;
}

OracleVerdict optimum(Json witness, double value) {
  OracleVerdict v;
  v.feasible = true;
  v.witness = std::move(witness);
  v.optimum = value;
  return v;
}

// ------------------------------------------------------------ per kind

OracleVerdict oracle_sat(const CnfFormula& f, long long budget) {
  const int n = f.num_vars();
  if (pow_ll(2, n, budget) > budget) over_budget();
  OracleVerdict out;
  each_subset(n, [&](const std::vector<bool>& bits) {
    if (f.satisfied_by(bits)) {
      out = decision(Json{{"assignment", bits}});
      return false;
    }
    return true;
  });
  return out;
}

OracleVerdict oracle_ip01(const ProblemInstance& inst, long long budget) {
  const int n = static_cast<int>(inst.C.front().size());
  if (pow_ll(2, n, budget) > budget) over_budget();
  OracleVerdict out;
  double best = std::numeric_limits<double>::infinity();
  each_subset(n, [&](const std::vector<bool>& x) {
    for (size_t i = 0; i < inst.C.size(); ++i) {
      long long lhs = 0;
      for (int j = 0; j < n; ++j)
        if (x[static_cast<size_t>(j)]) lhs += inst.C[i][static_cast<size_t>(j)];
      if (lhs != inst.b[i]) return true;
    }
    if (inst.a.empty()) {
      out = decision(Json{{"x", x}});
      return false;
    }
    double obj = 0.0;
    for (int j = 0; j < n; ++j)
      if (x[static_cast<size_t>(j)])
        obj += static_cast<double>(inst.a[static_cast<size_t>(j)]);
    if (obj < best) {
      best = obj;
      out = optimum(Json{{"x", x}}, obj);
    }
    return true;
  });
  return out;
}

OracleVerdict oracle_hamilton(const GraphData& g, bool circle,
                              long long budget) {
  const int n = g.n;
  const long long perms =
      circle ? fact_ll(n - 1, budget) : fact_ll(n, budget);
  if (perms > budget) over_budget();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  // Circles are rotation-invariant: pin vertex 0 to the first position.
  auto begin = circle ? order.begin() + 1 : order.begin();
  do {
    bool ok = true;
    const int steps = circle ? n : n - 1;
    for (int p = 0; p < steps && ok; ++p)
      ok = g.has_edge(order[static_cast<size_t>(p)],
                      order[static_cast<size_t>((p + 1) % n)]);
    if (ok) return decision(Json{{"order", order}});
  } while (std::next_permutation(begin, order.end()));
  return none();
}

OracleVerdict oracle_tsp(const ProblemInstance& inst, long long budget) {
  const int n = static_cast<int>(inst.tsp_weights.size());
  if (fact_ll(n - 1, budget) > budget) over_budget();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  OracleVerdict out;
  double best = std::numeric_limits<double>::infinity();
  do {
    double len = 0.0;
    for (int p = 0; p < n; ++p)
      len += inst.tsp_weights[static_cast<size_t>(order[static_cast<size_t>(p)])]
                             [static_cast<size_t>(
                                 order[static_cast<size_t>((p + 1) % n)])];
    if (len < best) {
      best = len;
      out = optimum(Json{{"tour", order}}, len);
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return out;
}

OracleVerdict oracle_clique(const GraphData& g, int k, bool want_edges,
                            long long budget, const char* field) {
  if (comb_ll(g.n, k, budget) > budget) over_budget();
  OracleVerdict out;
  each_combination(g.n, k, [&](const std::vector<int>& pick) {
    for (size_t a = 0; a < pick.size(); ++a)
      for (size_t b = a + 1; b < pick.size(); ++b)
        if (g.has_edge(pick[a], pick[b]) != want_edges) return true;
    out = decision(Json{{field, pick}});
    return false;
  });
  return out;
}

OracleVerdict oracle_set_packing(const ProblemInstance& inst,
                                 long long budget) {
  const int m = static_cast<int>(inst.subsets.size());
  if (comb_ll(m, *inst.k, budget) > budget) over_budget();
  OracleVerdict out;
  each_combination(m, *inst.k, [&](const std::vector<int>& pick) {
    std::set<int> seen;
    for (int j : pick)
      for (int e : inst.subsets[static_cast<size_t>(j)])
        if (!seen.insert(e).second) return true;
    out = decision(Json{{"sets", pick}});
    return false;
  });
  return out;
}

OracleVerdict oracle_node_cover(const GraphData& g, int k, long long budget) {
  if (comb_ll(g.n, k, budget) > budget) over_budget();
  OracleVerdict out;
  each_combination(g.n, k, [&](const std::vector<int>& pick) {
    std::set<int> cover(pick.begin(), pick.end());
    for (const auto& e : g.edges)
      if (!cover.count(e[0]) && !cover.count(e[1])) return true;
    out = decision(Json{{"vertices", pick}});
    return false;
  });
  return out;
}

OracleVerdict oracle_set_cover(const ProblemInstance& inst, long long budget) {
  const int m = static_cast<int>(inst.subsets.size());
  if (pow_ll(2, m, budget) > budget) over_budget();
  OracleVerdict out;
  size_t best = static_cast<size_t>(m) + 1;
  each_subset(m, [&](const std::vector<bool>& pick) {
    std::vector<bool> hit(static_cast<size_t>(inst.universe_size), false);
    size_t count = 0;
    for (int j = 0; j < m; ++j)
      if (pick[static_cast<size_t>(j)]) {
        ++count;
        for (int e : inst.subsets[static_cast<size_t>(j)])
          hit[static_cast<size_t>(e)] = true;
      }
    if (count >= best) return true;
    for (bool h : hit)
      if (!h) return true;
    best = count;
    std::vector<int> sets;
    for (int j = 0; j < m; ++j)
      if (pick[static_cast<size_t>(j)]) sets.push_back(j);
    out = optimum(Json{{"sets", sets}}, static_cast<double>(count));
    return true;
  });
  return out;
}

OracleVerdict oracle_colorings(const GraphData& g, int k, bool complement_groups,
                               const GraphData& source, long long budget) {
  const int n = g.n;
  if (pow_ll(k, n, budget) > budget) over_budget();
  std::vector<int> colors(static_cast<size_t>(n), 0);
  while (true) {
    bool proper = true;
    for (const auto& e : g.edges)
      if (colors[static_cast<size_t>(e[0])] ==
          colors[static_cast<size_t>(e[1])]) {
        proper = false;
        break;
      }
    if (proper) {
      if (complement_groups)
        return decision(Json{{"groups", colors}});
      return decision(Json{{"colors", colors}});
    }
    int i = 0;
    while (i < n && colors[static_cast<size_t>(i)] == k - 1) {
      colors[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
    ++colors[static_cast<size_t>(i)];
  }
  (void)source;
  return none();
}

OracleVerdict oracle_fns(const GraphData& g, long long budget) {
  const int n = g.n;
  if (pow_ll(2, n, budget) > budget) over_budget();
  OracleVerdict out;
  size_t best = static_cast<size_t>(n) + 1;
  each_subset(n, [&](const std::vector<bool>& removed) {
    size_t count = 0;
    for (bool r : removed) count += r ? 1 : 0;
    if (count >= best) return true;
    std::vector<std::array<int, 2>> kept;
    for (const auto& e : g.edges)
      if (!removed[static_cast<size_t>(e[0])] &&
          !removed[static_cast<size_t>(e[1])])
        kept.push_back(e);
    if (!graph_acyclic(n, kept)) return true;
    best = count;
    std::vector<int> r;
    for (int v = 0; v < n; ++v)
      if (removed[static_cast<size_t>(v)]) r.push_back(v);
    out = optimum(Json{{"removed", r}}, static_cast<double>(count));
    return true;
  });
  return out;
}

OracleVerdict oracle_fas(const GraphData& g, long long budget) {
  const int e = static_cast<int>(g.edge_count());
  if (pow_ll(2, e, budget) > budget) over_budget();
  OracleVerdict out;
  size_t best = static_cast<size_t>(e) + 1;
  each_subset(e, [&](const std::vector<bool>& removed) {
    size_t count = 0;
    for (bool r : removed) count += r ? 1 : 0;
    if (count >= best) return true;
    std::vector<std::array<int, 2>> kept;
    for (int m = 0; m < e; ++m)
      if (!removed[static_cast<size_t>(m)])
        kept.push_back(g.edges[static_cast<size_t>(m)]);
    if (!graph_acyclic(g.n, kept)) return true;
    best = count;
    Json edges = Json::array();
    for (int m = 0; m < e; ++m)
      if (removed[static_cast<size_t>(m)])
        edges.push_back({g.edges[static_cast<size_t>(m)][0],
                         g.edges[static_cast<size_t>(m)][1]});
    out = optimum(Json{{"removed_edges", edges}}, static_cast<double>(count));
    return true;
  });
  return out;
}

OracleVerdict oracle_exact_cover(const ProblemInstance& inst,
                                 long long budget) {
  const int m = static_cast<int>(inst.subsets.size());
  if (pow_ll(2, m, budget) > budget) over_budget();
  OracleVerdict out;
  each_subset(m, [&](const std::vector<bool>& pick) {
    std::vector<int> times(static_cast<size_t>(inst.universe_size), 0);
    for (int j = 0; j < m; ++j)
      if (pick[static_cast<size_t>(j)])
        for (int e : inst.subsets[static_cast<size_t>(j)])
          ++times[static_cast<size_t>(e)];
    for (int t : times)
      if (t != 1) return true;
    std::vector<int> sets;
    for (int j = 0; j < m; ++j)
      if (pick[static_cast<size_t>(j)]) sets.push_back(j);
    out = decision(Json{{"sets", sets}});
    return false;
  });
  return out;
}

OracleVerdict oracle_hitting_set(const ProblemInstance& inst,
                                 long long budget) {
  const int n = inst.universe_size;
  if (pow_ll(2, n, budget) > budget) over_budget();
  OracleVerdict out;
  size_t best = static_cast<size_t>(n) + 1;
  each_subset(n, [&](const std::vector<bool>& pick) {
    size_t count = 0;
    for (bool p : pick) count += p ? 1 : 0;
    if (count >= best) return true;
    for (const auto& c : inst.subsets) {
      bool hit = false;
      for (int e : c)
        if (pick[static_cast<size_t>(e)]) {
          hit = true;
          break;
        }
      if (!hit) return true;
    }
    best = count;
    std::vector<int> elements;
    for (int v = 0; v < n; ++v)
      if (pick[static_cast<size_t>(v)]) elements.push_back(v);
    out = optimum(Json{{"elements", elements}}, static_cast<double>(count));
    return true;
  });
  if (out.feasible && best > static_cast<size_t>(*inst.k)) {
    out.feasible = false;  // a hitting set exists but not within k
    out.witness = nullptr;
  }
  return out;
}

OracleVerdict oracle_3dm(const ProblemInstance& inst, long long budget) {
  const int m = static_cast<int>(inst.triples.size());
  const int q = inst.t_size;
  if (comb_ll(m, q, budget) > budget) over_budget();
  OracleVerdict out;
  each_combination(m, q, [&](const std::vector<int>& pick) {
    std::set<int> a, b, c;
    for (int idx : pick) {
      const auto& t = inst.triples[static_cast<size_t>(idx)];
      if (!a.insert(t[0]).second || !b.insert(t[1]).second ||
          !c.insert(t[2]).second)
        return true;
    }
    out = decision(Json{{"triples", pick}});
    return false;
  });
  return out;
}

OracleVerdict oracle_partition(const ProblemInstance& inst, long long budget) {
  const int n = static_cast<int>(inst.numbers.size());
  if (pow_ll(2, n - 1, budget) > budget) over_budget();
  long long total = 0;
  for (long long v : inst.numbers) total += v;
  if (total % 2 != 0) return none();
  OracleVerdict out;
  each_subset(n - 1, [&](const std::vector<bool>& rest) {
    long long first = inst.numbers[0];  // element 0 pinned to side 0
    for (int j = 1; j < n; ++j)
      if (!rest[static_cast<size_t>(j - 1)]) first += inst.numbers[static_cast<size_t>(j)];
    if (2 * first != total) return true;
    std::vector<int> side(static_cast<size_t>(n), 0);
    for (int j = 1; j < n; ++j)
      side[static_cast<size_t>(j)] = rest[static_cast<size_t>(j - 1)] ? 1 : 0;
    out = decision(Json{{"sides", side}});
    return false;
  });
  return out;
}

OracleVerdict oracle_knapsack(const ProblemInstance& inst, long long budget) {
  const int n = static_cast<int>(inst.a.size());
  if (pow_ll(2, n, budget) > budget) over_budget();
  OracleVerdict out;
  each_subset(n, [&](const std::vector<bool>& pick) {
    long long sum = 0;
    for (int j = 0; j < n; ++j)
      if (pick[static_cast<size_t>(j)]) sum += inst.a[static_cast<size_t>(j)];
    if (sum != inst.b.front()) return true;
    std::vector<int> chosen;
    for (int j = 0; j < n; ++j)
      if (pick[static_cast<size_t>(j)]) chosen.push_back(j);
    out = decision(Json{{"chosen", chosen}});
    return false;
  });
  return out;
}

OracleVerdict oracle_gp(const GraphData& g, long long budget) {
  const int n = g.n;
  if (n == 0) return optimum(Json{{"sides", Json::array()}}, 0.0);
  if (comb_ll(n - 1, n / 2 - 1, budget) > budget) over_budget();
  OracleVerdict out;
  double best = std::numeric_limits<double>::infinity();
  // Vertex 0 pinned to side 0; pick its n/2 - 1 companions.
  each_combination(n - 1, n / 2 - 1, [&](const std::vector<int>& pick) {
    std::vector<int> side(static_cast<size_t>(n), 1);
    side[0] = 0;
    for (int p : pick) side[static_cast<size_t>(p + 1)] = 0;
    const double cut = cut_weight(g, side);
    if (cut < best) {
      best = cut;
      out = optimum(Json{{"sides", side}}, cut);
    }
    return true;
  });
  return out;
}

OracleVerdict oracle_min_cut(const GraphData& g, long long budget) {
  const int n = g.n;
  if (pow_ll(2, n - 2, budget) > budget) over_budget();
  const int far = far_seed(g);
  std::vector<int> free_vertices;
  for (int v = 1; v < n; ++v)
    if (v != far) free_vertices.push_back(v);
  OracleVerdict out;
  double best = std::numeric_limits<double>::infinity();
  each_subset(static_cast<int>(free_vertices.size()),
              [&](const std::vector<bool>& pick) {
                std::vector<int> side(static_cast<size_t>(n), 0);
                side[static_cast<size_t>(far)] = 1;
                for (size_t i = 0; i < free_vertices.size(); ++i)
                  side[static_cast<size_t>(free_vertices[i])] =
                      pick[i] ? 1 : 0;
                const double cut = cut_weight(g, side);
                if (cut < best) {
                  best = cut;
                  out = optimum(Json{{"sides", side}}, cut);
                }
                return true;
              });
  return out;
}

OracleVerdict oracle_max_cut(const GraphData& g, long long budget) {
  const int n = g.n;
  if (n == 0) return optimum(Json{{"sides", Json::array()}}, 0.0);
  if (pow_ll(2, n - 1, budget) > budget) over_budget();
  OracleVerdict out;
  double best = -1.0;
  each_subset(n - 1, [&](const std::vector<bool>& pick) {
    std::vector<int> side(static_cast<size_t>(n), 0);
    for (int v = 1; v < n; ++v)
      side[static_cast<size_t>(v)] = pick[static_cast<size_t>(v - 1)] ? 1 : 0;
    const double cut = cut_weight(g, side);
    if (cut > best) {
      best = cut;
      out = optimum(Json{{"sides", side}}, cut);
    }
    return true;
  });
  return out;
}

OracleVerdict oracle_maze(const MazeSpec& spec) {
  const auto path = bfs_path(maze_adjacency(spec), spec.start, spec.end);
  if (path.empty()) return none();
  return optimum(Json{{"path", path}}, static_cast<double>(path.size() - 1));
}

OracleVerdict oracle_shortest_path(const ProblemInstance& inst) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(inst.graph.n));
  for (const auto& e : inst.graph.edges) {
    adj[static_cast<size_t>(e[0])].push_back(e[1]);
    if (!inst.graph.directed) adj[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  const auto path = bfs_path(adj, inst.s, inst.t);
  if (path.empty() || static_cast<int>(path.size()) > *inst.k) return none();
  return optimum(Json{{"path", path}}, static_cast<double>(path.size() - 1));
}

}  // namespace

OracleVerdict brute_force(const ProblemInstance& inst, long long budget) {
  inst.validate();
  switch (inst.kind) {
    case ProblemKind::sat:
      return oracle_sat(inst.cnf, budget);
    case ProblemKind::ip01:
      return oracle_ip01(inst, budget);
    case ProblemKind::hamilton_path:
      return oracle_hamilton(inst.graph, false, budget);
    case ProblemKind::hamilton_circle:
      return oracle_hamilton(inst.graph, true, budget);
    case ProblemKind::tsp:
      return oracle_tsp(inst, budget);
    case ProblemKind::clique:
      return oracle_clique(inst.graph, *inst.k, true, budget, "vertices");
    case ProblemKind::independent_set:
      return oracle_clique(inst.graph, *inst.k, false, budget, "vertices");
    case ProblemKind::set_packing:
      return oracle_set_packing(inst, budget);
    case ProblemKind::node_cover:
      return oracle_node_cover(inst.graph, *inst.k, budget);
    case ProblemKind::set_cover:
      return oracle_set_cover(inst, budget);
    case ProblemKind::chromatic_number:
      if (!inst.k) throw std::invalid_argument("chromatic-number needs k");
      return oracle_colorings(inst.graph, *inst.k, false, inst.graph, budget);
    case ProblemKind::clique_cover: {
      if (!inst.k) throw std::invalid_argument("clique-cover needs k");
      return oracle_colorings(inst.graph.complement(), *inst.k, true,
                              inst.graph, budget);
    }
    case ProblemKind::feedback_node_set:
      return oracle_fns(inst.graph, budget);
    case ProblemKind::feedback_arc_set:
      return oracle_fas(inst.graph, budget);
    case ProblemKind::exact_cover:
      return oracle_exact_cover(inst, budget);
    case ProblemKind::hitting_set:
      return oracle_hitting_set(inst, budget);
    case ProblemKind::three_dim_matching:
      return oracle_3dm(inst, budget);
    case ProblemKind::number_partitioning:
      return oracle_partition(inst, budget);
    case ProblemKind::knapsack:
      return oracle_knapsack(inst, budget);
    case ProblemKind::graph_partitioning:
      return oracle_gp(inst.graph, budget);
    case ProblemKind::min_cut:
      return oracle_min_cut(inst.graph, budget);
    case ProblemKind::max_cut:
      return oracle_max_cut(inst.graph, budget);
    case ProblemKind::maze:
      return oracle_maze(inst.maze_spec);
    case ProblemKind::shortest_path:
      return oracle_shortest_path(inst);
    case ProblemKind::logic_gate: {
      OracleVerdict v;
      v.feasible = true;
      v.witness = Json{{"output", gate_truth(inst.gate, inst.gate_inputs)}};
      return v;
    }
  }
  throw std::invalid_argument("unknown problem kind");
}

bool check_witness(const ProblemInstance& inst, const nlohmann::json& w) {
  inst.validate();
  try {
    switch (inst.kind) {
      case ProblemKind::sat: {
        const auto bits = w.at("assignment").get<std::vector<bool>>();
        if (static_cast<int>(bits.size()) != inst.cnf.num_vars()) return false;
        return inst.cnf.satisfied_by(bits);
      }
      case ProblemKind::ip01: {
        const auto x = w.at("x").get<std::vector<bool>>();
        if (x.size() != inst.C.front().size()) return false;
        for (size_t i = 0; i < inst.C.size(); ++i) {
          long long lhs = 0;
          for (size_t j = 0; j < x.size(); ++j)
            if (x[j]) lhs += inst.C[i][j];
          if (lhs != inst.b[i]) return false;
        }
        return true;
      }
      case ProblemKind::hamilton_path:
      case ProblemKind::hamilton_circle: {
        const auto order = w.at("order").get<std::vector<int>>();
        const int n = inst.graph.n;
        if (static_cast<int>(order.size()) != n) return false;
        std::set<int> uniq(order.begin(), order.end());
        if (static_cast<int>(uniq.size()) != n || *uniq.begin() < 0 ||
            *uniq.rbegin() >= n)
          return false;
        const bool circle = inst.kind == ProblemKind::hamilton_circle;
        const int steps = circle ? n : n - 1;
        for (int p = 0; p < steps; ++p)
          if (!inst.graph.has_edge(order[static_cast<size_t>(p)],
                                   order[static_cast<size_t>((p + 1) % n)]))
            return false;
        return true;
      }
      case ProblemKind::tsp: {
        const auto tour = w.at("tour").get<std::vector<int>>();
        const int n = static_cast<int>(inst.tsp_weights.size());
        if (static_cast<int>(tour.size()) != n) return false;
        std::set<int> uniq(tour.begin(), tour.end());
        return static_cast<int>(uniq.size()) == n && *uniq.begin() == 0 &&
               *uniq.rbegin() == n - 1;
      }
      case ProblemKind::clique:
      case ProblemKind::independent_set: {
        const auto vs = w.at("vertices").get<std::vector<int>>();
        if (static_cast<int>(vs.size()) != *inst.k) return false;
        std::set<int> uniq(vs.begin(), vs.end());
        if (uniq.size() != vs.size()) return false;
        for (int v : vs)
          if (v < 0 || v >= inst.graph.n) return false;
        const bool want = inst.kind == ProblemKind::clique;
        for (auto it = uniq.begin(); it != uniq.end(); ++it)
          for (auto jt = std::next(it); jt != uniq.end(); ++jt)
            if (inst.graph.has_edge(*it, *jt) != want) return false;
        return true;
      }
      case ProblemKind::set_packing: {
        const auto sets = w.at("sets").get<std::vector<int>>();
        if (static_cast<int>(sets.size()) != *inst.k) return false;
        std::set<int> uniq(sets.begin(), sets.end());
        if (uniq.size() != sets.size()) return false;
        std::set<int> seen;
        for (int j : sets) {
          if (j < 0 || j >= static_cast<int>(inst.subsets.size())) return false;
          for (int e : inst.subsets[static_cast<size_t>(j)])
            if (!seen.insert(e).second) return false;
        }
        return true;
      }
      case ProblemKind::node_cover: {
        const auto vs = w.at("vertices").get<std::vector<int>>();
        if (static_cast<int>(vs.size()) > *inst.k) return false;
        std::set<int> cover(vs.begin(), vs.end());
        for (int v : vs)
          if (v < 0 || v >= inst.graph.n) return false;
        for (const auto& e : inst.graph.edges)
          if (!cover.count(e[0]) && !cover.count(e[1])) return false;
        return true;
      }
      case ProblemKind::set_cover: {
        const auto sets = w.at("sets").get<std::vector<int>>();
        std::vector<bool> hit(static_cast<size_t>(inst.universe_size), false);
        for (int j : sets) {
          if (j < 0 || j >= static_cast<int>(inst.subsets.size())) return false;
          for (int e : inst.subsets[static_cast<size_t>(j)])
            hit[static_cast<size_t>(e)] = true;
        }
        for (bool h : hit)
          if (!h) return false;
        return true;
      }
      case ProblemKind::chromatic_number:
      case ProblemKind::clique_cover: {
        const bool cc = inst.kind == ProblemKind::clique_cover;
        const auto colors =
            w.at(cc ? "groups" : "colors").get<std::vector<int>>();
        if (static_cast<int>(colors.size()) != inst.graph.n) return false;
        if (!inst.k) return false;
        for (int c : colors)
          if (c < 0 || c >= *inst.k) return false;
        const GraphData g = cc ? inst.graph.complement() : inst.graph;
        for (const auto& e : g.edges)
          if (colors[static_cast<size_t>(e[0])] ==
              colors[static_cast<size_t>(e[1])])
            return false;
        return true;
      }
      case ProblemKind::feedback_node_set: {
        const auto removed = w.at("removed").get<std::vector<int>>();
        std::set<int> r(removed.begin(), removed.end());
        for (int v : removed)
          if (v < 0 || v >= inst.graph.n) return false;
        std::vector<std::array<int, 2>> kept;
        for (const auto& e : inst.graph.edges)
          if (!r.count(e[0]) && !r.count(e[1])) kept.push_back(e);
        return graph_acyclic(inst.graph.n, kept);
      }
      case ProblemKind::feedback_arc_set: {
        std::set<std::pair<int, int>> removed;
        for (const auto& e : w.at("removed_edges")) {
          const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
          if (!inst.graph.has_edge(u, v)) return false;
          removed.insert({u, v});
        }
        std::vector<std::array<int, 2>> kept;
        for (const auto& e : inst.graph.edges)
          if (!removed.count({e[0], e[1]})) kept.push_back(e);
        return graph_acyclic(inst.graph.n, kept);
      }
      case ProblemKind::exact_cover: {
        const auto sets = w.at("sets").get<std::vector<int>>();
        std::vector<int> times(static_cast<size_t>(inst.universe_size), 0);
        for (int j : sets) {
          if (j < 0 || j >= static_cast<int>(inst.subsets.size())) return false;
          for (int e : inst.subsets[static_cast<size_t>(j)])
            ++times[static_cast<size_t>(e)];
        }
        for (int t : times)
          if (t != 1) return false;
        return true;
      }
      case ProblemKind::hitting_set: {
        const auto els = w.at("elements").get<std::vector<int>>();
        if (static_cast<int>(els.size()) > *inst.k) return false;
        std::set<int> hs(els.begin(), els.end());
        for (int e : els)
          if (e < 0 || e >= inst.universe_size) return false;
        for (const auto& c : inst.subsets) {
          bool hit = false;
          for (int e : c)
            if (hs.count(e)) {
              hit = true;
              break;
            }
          if (!hit) return false;
        }
        return true;
      }
      case ProblemKind::three_dim_matching: {
        const auto pick = w.at("triples").get<std::vector<int>>();
        if (static_cast<int>(pick.size()) != inst.t_size) return false;
        std::set<int> a, b, c;
        for (int idx : pick) {
          if (idx < 0 || idx >= static_cast<int>(inst.triples.size()))
            return false;
          const auto& t = inst.triples[static_cast<size_t>(idx)];
          if (!a.insert(t[0]).second || !b.insert(t[1]).second ||
              !c.insert(t[2]).second)
            return false;
        }
        return true;
      }
      case ProblemKind::number_partitioning: {
        const auto side = w.at("sides").get<std::vector<int>>();
        if (side.size() != inst.numbers.size()) return false;
        long long total = 0, first = 0;
        for (size_t j = 0; j < side.size(); ++j) {
          if (side[j] != 0 && side[j] != 1) return false;
          total += inst.numbers[j];
          if (side[j] == 0) first += inst.numbers[j];
        }
        return 2 * first == total;
      }
      case ProblemKind::knapsack: {
        const auto chosen = w.at("chosen").get<std::vector<int>>();
        std::set<int> uniq(chosen.begin(), chosen.end());
        if (uniq.size() != chosen.size()) return false;
        long long sum = 0;
        for (int j : chosen) {
          if (j < 0 || j >= static_cast<int>(inst.a.size())) return false;
          sum += inst.a[static_cast<size_t>(j)];
        }
        return sum == inst.b.front();
      }
      case ProblemKind::graph_partitioning: {
        const auto side = w.at("sides").get<std::vector<int>>();
        if (static_cast<int>(side.size()) != inst.graph.n) return false;
        int zeros = 0;
        for (int s : side) {
          if (s != 0 && s != 1) return false;
          zeros += s == 0 ? 1 : 0;
        }
        return 2 * zeros == inst.graph.n;
      }
      case ProblemKind::min_cut: {
        const auto side = w.at("sides").get<std::vector<int>>();
        if (static_cast<int>(side.size()) != inst.graph.n) return false;
        for (int s : side)
          if (s != 0 && s != 1) return false;
        return side[0] != side[static_cast<size_t>(far_seed(inst.graph))];
      }
      case ProblemKind::max_cut: {
        const auto side = w.at("sides").get<std::vector<int>>();
        if (static_cast<int>(side.size()) != inst.graph.n) return false;
        for (int s : side)
          if (s != 0 && s != 1) return false;
        return true;
      }
      case ProblemKind::maze: {
        const auto path = w.at("path").get<std::vector<int>>();
        if (path.empty() || path.front() != inst.maze_spec.start ||
            path.back() != inst.maze_spec.end)
          return false;
        std::set<int> uniq(path.begin(), path.end());
        if (uniq.size() != path.size()) return false;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
          bool ok = false;
          for (int d = 0; d < 4 && !ok; ++d)
            ok = inst.maze_spec.open(path[i], d) &&
                 inst.maze_spec.neighbor(path[i], d) == path[i + 1];
          if (!ok) return false;
        }
        return true;
      }
      case ProblemKind::shortest_path: {
        const auto path = w.at("path").get<std::vector<int>>();
        if (path.empty() || path.front() != inst.s || path.back() != inst.t)
          return false;
        if (static_cast<int>(path.size()) > *inst.k) return false;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
          const bool ok =
              inst.graph.has_edge(path[i], path[i + 1]) ||
              (!inst.graph.directed && inst.graph.has_edge(path[i + 1], path[i]));
          if (!ok) return false;
        }
        return true;
      }
      case ProblemKind::logic_gate:
        return w.at("output").get<bool>() ==
               gate_truth(inst.gate, inst.gate_inputs);
    }
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  return false;
}

std::optional<double> witness_objective(const ProblemInstance& inst,
                                        const nlohmann::json& w) {
  switch (inst.kind) {
    case ProblemKind::ip01: {
      if (inst.a.empty()) return std::nullopt;
      const auto x = w.at("x").get<std::vector<bool>>();
      double obj = 0.0;
      for (size_t j = 0; j < x.size(); ++j)
        if (x[j]) obj += static_cast<double>(inst.a[j]);
      return obj;
    }
    case ProblemKind::tsp: {
      const auto tour = w.at("tour").get<std::vector<int>>();
      double len = 0.0;
      for (size_t p = 0; p < tour.size(); ++p)
        len += inst.tsp_weights[static_cast<size_t>(tour[p])]
                               [static_cast<size_t>(
                                   tour[(p + 1) % tour.size()])];
      return len;
    }
    case ProblemKind::set_cover:
      return static_cast<double>(w.at("sets").size());
    case ProblemKind::hitting_set:
      return static_cast<double>(w.at("elements").size());
    case ProblemKind::feedback_node_set:
      return static_cast<double>(w.at("removed").size());
    case ProblemKind::feedback_arc_set:
      return static_cast<double>(w.at("removed_edges").size());
    case ProblemKind::graph_partitioning:
    case ProblemKind::min_cut:
    case ProblemKind::max_cut: {
      const auto side = w.at("sides").get<std::vector<int>>();
      return cut_weight(inst.graph, side);
    }
    case ProblemKind::maze:
    case ProblemKind::shortest_path:
      return static_cast<double>(w.at("path").size()) - 1.0;
    default:
      return std::nullopt;
  }
}

}  // namespace oscopt
