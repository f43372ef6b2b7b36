#include "oscopt/netbuilder.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <string>

namespace oscopt {

namespace {

constexpr double kRestrictFactor = 100.0;  // Blue restriction vs local couplings
constexpr double kClauseRestrictFactor = 10.0;  // variable-Blue links vs clause side

}  // namespace

SatNetwork build_sat_network(const CnfFormula& f,
                             const SatNetworkOptions& options) {
  if (f.has_empty_clause())
    throw UnsatisfiableError(
        "formula contains an empty clause and is unsatisfiable");
  for (const auto& clause : f.clauses())
    for (int lit : clause)
      if (std::abs(lit) > f.num_vars())
        throw std::invalid_argument("literal outside variable range");

  SatNetwork net;
  net.formula = f;
  net.options = options;
  const ClauseWeights w = options.weights.scaled(options.scale);

  // Certify every clause length in use; derive merged sources from the
  // certified families.
  std::map<int, BiasedSource> bias;
  for (const auto& [len, count] : f.length_histogram()) {
    (void)count;
    CertifiedClauseWeights cert = certify_for_length(w, len);
    net.certified[len] = cert;
    if (options.merge_bias) bias[len] = merge_sources(cert);
  }

  double max_clause_coupling = std::max({-w.w_l, w.w_r, w.w_false, w.w_true});
  for (const auto& [len, cert] : net.certified)
    max_clause_coupling = std::max(max_clause_coupling, std::abs(cert.w_blue));
  for (const auto& [len, b] : bias)
    max_clause_coupling = std::max(max_clause_coupling, b.magnitude);
  const double restrict_w = kClauseRestrictFactor * max_clause_coupling;
  // The complement link must stay below the clause feedback w_r: a single
  // unsatisfied clause must be able to flip a variable out of a settled
  // complementary pair (flip margin is 1.5*pair_w - 1.5*w_r per such clause).
  const double pair_w = 0.5 * w.w_r;
  const double mesh_w = options.scale;

  const int v = f.num_vars(), c = f.num_clauses();
  CouplingGraph& g = net.graph;
  net.var_node.resize(static_cast<size_t>(v));
  net.neg_node.resize(static_cast<size_t>(v));
  for (int i = 0; i < v; ++i) net.var_node[static_cast<size_t>(i)] = g.add_node();
  for (int i = 0; i < v; ++i) net.neg_node[static_cast<size_t>(i)] = g.add_node();
  net.blue_node = g.add_node();
  net.true_node = g.add_node();
  if (!options.merge_bias) net.false_node = g.add_node();
  net.clause_node.resize(static_cast<size_t>(c));
  for (int j = 0; j < c; ++j) net.clause_node[static_cast<size_t>(j)] = g.add_node();
  if (options.merge_bias)
    for (const auto& [len, b] : bias) {
      int node = g.add_node();
      net.bias_node[len] = node;
      g.clamp_phase(node, b.angle);
    }

  g.clamp_label(net.blue_node, SpinLabel::B);
  g.clamp_label(net.true_node, SpinLabel::T);
  if (net.false_node >= 0) g.clamp_label(net.false_node, SpinLabel::F);

  // Base network: one triangle per variable.
  for (int i = 0; i < v; ++i) {
    int x = net.var_node[static_cast<size_t>(i)];
    int nx = net.neg_node[static_cast<size_t>(i)];
    g.couple(x, nx, pair_w, EdgeTag::base_pair);
    g.couple(x, net.blue_node, restrict_w, EdgeTag::blue_restrict);
    g.couple(nx, net.blue_node, restrict_w, EdgeTag::blue_restrict);
  }

  // Source mesh.
  if (!options.merge_bias) {
    g.couple(net.blue_node, net.true_node, mesh_w, EdgeTag::source_mesh);
    g.couple(net.blue_node, net.false_node, mesh_w, EdgeTag::source_mesh);
    g.couple(net.true_node, net.false_node, mesh_w, EdgeTag::source_mesh);
  } else {
    g.couple(net.blue_node, net.true_node, mesh_w, EdgeTag::source_mesh);
    for (const auto& [len, node] : net.bias_node) {
      g.couple(net.blue_node, node, mesh_w, EdgeTag::source_mesh);
      g.couple(net.true_node, node, mesh_w, EdgeTag::source_mesh);
    }
  }

  // Clause networks.
  for (int j = 0; j < c; ++j) {
    const auto& clause = f.clauses()[static_cast<size_t>(j)];
    const int r = net.clause_node[static_cast<size_t>(j)];
    const auto& cert = net.certified.at(static_cast<int>(clause.size()));
    for (int lit : clause) {
      int node = lit > 0 ? net.var_node[static_cast<size_t>(lit - 1)]
                         : net.neg_node[static_cast<size_t>(-lit - 1)];
      g.couple_directed(node, r, cert.w_l, EdgeTag::clause_literal);
      g.couple_directed(r, node, w.w_r, EdgeTag::clause_literal);
    }
    if (!options.merge_bias) {
      g.couple(r, net.false_node, cert.w_false, EdgeTag::clause_source);
      g.couple(r, net.true_node, cert.w_true, EdgeTag::clause_source);
      g.couple(r, net.blue_node, cert.w_blue, EdgeTag::clause_source);
    } else {
      g.couple(r, net.bias_node.at(static_cast<int>(clause.size())),
               bias.at(static_cast<int>(clause.size())).magnitude,
               EdgeTag::clause_source);
    }
  }
  return net;
}

std::vector<bool> SatNetwork::decode(const PottsState& s) const {
  std::vector<bool> out(var_node.size());
  for (size_t i = 0; i < var_node.size(); ++i)
    out[i] = s[var_node[i]] == SpinLabel::T;
  return out;
}

PottsState SatNetwork::state_for_assignment(
    const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != formula.num_vars())
    throw std::invalid_argument("assignment length mismatch");
  PottsState s = make_state(graph, SpinLabel::F);
  for (size_t i = 0; i < var_node.size(); ++i) {
    s[var_node[i]] = assignment[i] ? SpinLabel::T : SpinLabel::F;
    s[neg_node[i]] = assignment[i] ? SpinLabel::F : SpinLabel::T;
  }
  for (size_t j = 0; j < clause_node.size(); ++j)
    s[clause_node[j]] = formula.clause_satisfied(static_cast<int>(j), assignment)
                            ? SpinLabel::B
                            : SpinLabel::F;
  apply_clamps(graph, s);
  return s;
}

// ---------------------------------------------------------------------------

std::vector<int> add_energy_and(CouplingGraph& g,
                                std::vector<QuadraticTerm> terms) {
  std::map<std::pair<int, int>, double> merged;
  for (const QuadraticTerm& t : terms) {
    if (t.i == t.j)
      throw std::invalid_argument("product term requires two distinct nodes");
    merged[{std::min(t.i, t.j), std::max(t.i, t.j)}] += t.w;
  }
  std::vector<int> aux;
  aux.reserve(merged.size());
  for (const auto& [pair, w] : merged) {
    int a = g.add_node();
    g.clamp_label(a, SpinLabel::F);
    g.couple(pair.first, pair.second, w, EdgeTag::quadratic);
    g.couple(pair.first, a, -w, EdgeTag::quadratic);
    g.couple(pair.second, a, -w, EdgeTag::quadratic);
    aux.push_back(a);
  }
  return aux;
}

CouplingGraph build_energy_and(int num_nodes,
                               std::vector<QuadraticTerm> terms) {
  CouplingGraph g;
  g.add_nodes(num_nodes);
  add_energy_and(g, std::move(terms));
  return g;
}

void add_weighted_sum(CouplingGraph& g, int true_node,
                      const std::vector<std::pair<int, double>>& terms) {
  const auto& clamp = g.clamp_at(true_node);
  if (!clamp || !clamp->label || *clamp->label != SpinLabel::T)
    throw std::invalid_argument("weighted sum target must be clamped True");
  for (const auto& [node, coeff] : terms)
    g.couple(node, true_node, coeff, EdgeTag::linear);
}

CouplingGraph build_weighted_sum(const std::vector<double>& coeffs) {
  CouplingGraph g;
  g.add_nodes(static_cast<int>(coeffs.size()));
  int t = g.add_node();
  g.clamp_label(t, SpinLabel::T);
  std::vector<std::pair<int, double>> terms;
  for (size_t i = 0; i < coeffs.size(); ++i)
    terms.emplace_back(static_cast<int>(i), coeffs[i]);
  add_weighted_sum(g, t, terms);
  return g;
}

void add_blue_restriction(CouplingGraph& g, int node, int blue_node,
                          double floor) {
  double strongest = floor;
  for (const Coupling& c : g.couplings())
    if (c.a == node || c.b == node)
      strongest = std::max({strongest, std::abs(c.w_ab), std::abs(c.w_ba)});
  g.couple(node, blue_node, kRestrictFactor * strongest,
           EdgeTag::blue_restrict);
}

// ---------------------------------------------------------------------------

int MazeSpec::neighbor(int cell, int dir) const {
  int x = cell % width, y = cell / width;
  switch (dir) {
    case 0: --y; break;
    case 1: ++x; break;
    case 2: ++y; break;
    case 3: --x; break;
    default: throw std::invalid_argument("direction must be 0..3");
  }
  if (x < 0 || x >= width || y < 0 || y >= height) return -1;
  return y * width + x;
}

bool MazeSpec::open(int cell, int dir) const {
  int n = neighbor(cell, dir);
  if (n < 0) return false;
  const int opp = (dir + 2) % 4;
  for (const auto& w : walls)
    if ((w[0] == cell && w[1] == dir) || (w[0] == n && w[1] == opp))
      return false;
  return true;
}

void MazeSpec::validate() const {
  if (width < 1 || height < 1)
    throw std::invalid_argument("maze dimensions must be positive");
  auto in_range = [this](int c) { return c >= 0 && c < cells(); };
  if (!in_range(start) || !in_range(end))
    throw std::invalid_argument("maze start/end outside the grid");
  for (const auto& w : walls) {
    if (!in_range(w[0]) || w[1] < 0 || w[1] > 3)
      throw std::invalid_argument("malformed wall entry");
  }
}

nlohmann::json MazeSpec::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["width"] = width;
  j["height"] = height;
  j["start"] = start;
  j["end"] = end;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : walls) ws.push_back({w[0], w[1]});
  j["walls"] = std::move(ws);
  return j;
}

MazeSpec MazeSpec::from_json(const nlohmann::json& j) {
  MazeSpec m;
  m.width = j.at("width").get<int>();
  m.height = j.at("height").get<int>();
  m.start = j.at("start").get<int>();
  m.end = j.at("end").get<int>();
  if (j.contains("walls"))
    for (const auto& w : j.at("walls"))
      m.walls.push_back({w.at(0).get<int>(), w.at(1).get<int>()});
  m.validate();
  return m;
}

MazeNetwork build_maze_network(const MazeSpec& spec, double w_n, double w_t) {
  spec.validate();
  // Local rule "True iff >= 2 True neighbors" needs the preference flip
  // between one and two True neighbors: w_n(2m-4)+w_t changes sign there.
  if (!(w_t < 0.0) || !(w_t > 2.0 * w_n))
    throw std::domain_error(
        "maze weights must satisfy 2*w_n < w_t < 0 for the two-neighbor rule");

  MazeNetwork net;
  net.spec = spec;
  CouplingGraph& g = net.graph;
  g.add_nodes(spec.cells());
  net.true_node = g.add_node();
  net.blue_node = g.add_node();
  net.wall_node = g.add_node();
  g.clamp_label(net.true_node, SpinLabel::T);
  g.clamp_label(net.blue_node, SpinLabel::B);
  g.clamp_label(net.wall_node, SpinLabel::F);

  for (int cell = 0; cell < spec.cells(); ++cell) {
    int walled = 0;
    for (int dir = 0; dir < 4; ++dir) {
      if (!spec.open(cell, dir)) {
        ++walled;
        continue;
      }
      if (dir == 1 || dir == 2)  // east/south once per open pair
        g.couple(cell, spec.neighbor(cell, dir), w_n, EdgeTag::maze);
    }
    if (walled > 0)
      g.couple(cell, net.wall_node, w_n * walled, EdgeTag::maze);
    g.couple(cell, net.true_node, w_t, EdgeTag::maze);
    add_blue_restriction(g, cell, net.blue_node);
  }
  g.clamp_label(spec.start, SpinLabel::T);
  g.clamp_label(spec.end, SpinLabel::T);
  return net;
}

std::vector<int> MazeNetwork::true_cells(const PottsState& s) const {
  std::vector<int> out;
  for (int c = 0; c < spec.cells(); ++c)
    if (s[c] == SpinLabel::T) out.push_back(c);
  return out;
}

std::vector<int> MazeNetwork::decode_path(const PottsState& s) const {
  const std::vector<int> cells = true_cells(s);
  std::set<int> remaining(cells.begin(), cells.end());
  if (!remaining.count(spec.start) || !remaining.count(spec.end)) return {};
  std::vector<int> path{spec.start};
  remaining.erase(spec.start);
  int cur = spec.start;
  while (cur != spec.end || path.size() == 1) {
    if (cur == spec.end) break;
    int next = -1;
    for (int dir = 0; dir < 4; ++dir) {
      if (!spec.open(cur, dir)) continue;
      int n = spec.neighbor(cur, dir);
      if (!remaining.count(n)) continue;
      if (next >= 0) return {};  // branching corridor
      next = n;
    }
    if (next < 0) return {};  // dead end before reaching the goal
    path.push_back(next);
    remaining.erase(next);
    cur = next;
  }
  if (!remaining.empty()) return {};  // stray True cells off the corridor
  return path;
}

// ---------------------------------------------------------------------------

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::and_gate: return "AND";
    case GateKind::or_gate: return "OR";
    case GateKind::nand_gate: return "NAND";
    case GateKind::nor_gate: return "NOR";
    case GateKind::not_gate: return "NOT";
    case GateKind::buf_gate: return "BUF";
    case GateKind::xor_gate: return "XOR";
    case GateKind::xnor_gate: return "XNOR";
  }
  return "?";
}

GateKind gate_from_name(const std::string& name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(c)));
  for (GateKind k : {GateKind::and_gate, GateKind::or_gate, GateKind::nand_gate,
                     GateKind::nor_gate, GateKind::not_gate, GateKind::buf_gate,
                     GateKind::xor_gate, GateKind::xnor_gate})
    if (up == gate_name(k)) return k;
  throw std::invalid_argument("unknown gate kind: " + name);
}

bool gate_truth(GateKind kind, const std::vector<bool>& inputs) {
  auto all = [&] { return std::all_of(inputs.begin(), inputs.end(),
                                      [](bool b) { return b; }); };
  auto any = [&] { return std::any_of(inputs.begin(), inputs.end(),
                                      [](bool b) { return b; }); };
  switch (kind) {
    case GateKind::and_gate: return all();
    case GateKind::or_gate: return any();
    case GateKind::nand_gate: return !all();
    case GateKind::nor_gate: return !any();
    case GateKind::not_gate: return !inputs.at(0);
    case GateKind::buf_gate: return inputs.at(0);
    case GateKind::xor_gate:
    case GateKind::xnor_gate: {
      bool x = false;
      for (bool b : inputs) x = x != b;
      return kind == GateKind::xor_gate ? x : !x;
    }
  }
  throw std::logic_error("invalid gate kind");
}

GateNetwork build_logic_gate(GateKind kind, int num_inputs) {
  if (kind == GateKind::xor_gate || kind == GateKind::xnor_gate)
    throw std::invalid_argument(
        std::string(gate_name(kind)) +
        " is not realizable with a single output oscillator");
  const bool unary = kind == GateKind::not_gate || kind == GateKind::buf_gate;
  if (unary && num_inputs != 1)
    throw std::invalid_argument("unary gate takes exactly one input");
  if (!unary && num_inputs < 2)
    throw std::invalid_argument("gate needs at least two inputs");

  // Link sign: negative links copy (AND/OR/BUF), positive links invert
  // (NAND/NOR/NOT).  The bias source sets the threshold: AND/OR bias by
  // 1-k on F/T respectively, NAND/NOR by k-1.
  double link = 0.0, bias = 0.0;
  SpinLabel src = SpinLabel::F;
  switch (kind) {
    case GateKind::and_gate: link = -1.0; bias = 1.0 - num_inputs; src = SpinLabel::F; break;
    case GateKind::or_gate:  link = -1.0; bias = 1.0 - num_inputs; src = SpinLabel::T; break;
    case GateKind::nand_gate: link = 1.0; bias = num_inputs - 1.0; src = SpinLabel::F; break;
    case GateKind::nor_gate:  link = 1.0; bias = num_inputs - 1.0; src = SpinLabel::T; break;
    case GateKind::buf_gate: link = -1.0; break;
    case GateKind::not_gate: link = 1.0; break;
    default: break;
  }

  GateNetwork net;
  net.kind = kind;
  CouplingGraph& g = net.graph;
  for (int i = 0; i < num_inputs; ++i) net.input_nodes.push_back(g.add_node());
  net.output_node = g.add_node();
  net.blue_node = g.add_node();
  g.clamp_label(net.blue_node, SpinLabel::B);
  if (bias != 0.0) {
    net.source_node = g.add_node();
    g.clamp_label(net.source_node, src);
    g.couple(net.output_node, net.source_node, bias, EdgeTag::gate);
  }
  // Signals flow one way: inputs drive the output and receive nothing back.
  for (int in : net.input_nodes)
    g.couple_directed(in, net.output_node, link, EdgeTag::gate);
  for (int in : net.input_nodes)
    add_blue_restriction(g, in, net.blue_node);
  add_blue_restriction(g, net.output_node, net.blue_node);
  return net;
}

bool GateNetwork::output(const PottsState& s) const {
  return s[output_node] == SpinLabel::T;
}

}  // namespace oscopt
