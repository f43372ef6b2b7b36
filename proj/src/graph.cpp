#include "oscopt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace oscopt {

namespace {

std::int64_t pair_key(int a, int b) {
  return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

int CouplingGraph::add_node() {
  clamps_.emplace_back();
  pumps_.push_back(0.0);
  incoming_.emplace_back();
  return n_++;
}

int CouplingGraph::add_nodes(int count) {
  if (count < 0) throw std::invalid_argument("add_nodes: negative count");
  int first = n_;
  for (int i = 0; i < count; ++i) add_node();
  return first;
}

void CouplingGraph::check_node(int i) const {
  if (i < 0 || i >= n_)
    throw std::out_of_range("node index " + std::to_string(i) +
                            " out of range (n=" + std::to_string(n_) + ")");
}

Coupling& CouplingGraph::record_for(int i, int j, EdgeTag tag) {
  check_node(i);
  check_node(j);
  if (i == j) throw std::invalid_argument("self-coupling is not allowed");
  int a = std::min(i, j), b = std::max(i, j);
  std::int64_t key = pair_key(a, b);
  auto it = std::lower_bound(
      index_.begin(), index_.end(), key,
      [](const auto& entry, std::int64_t k) { return entry.first < k; });
  if (it != index_.end() && it->first == key) return couplings_[it->second];
  index_.insert(it, {key, couplings_.size()});
  couplings_.push_back(Coupling{a, b, 0.0, 0.0, tag});
  return couplings_.back();
}

void CouplingGraph::couple(int i, int j, double w, EdgeTag tag) {
  Coupling& c = record_for(i, j, tag);
  c.w_ab += w;
  c.w_ba += w;
  incoming_[static_cast<size_t>(c.b)].push_back({c.a, w});
  incoming_[static_cast<size_t>(c.a)].push_back({c.b, w});
}

void CouplingGraph::couple_directed(int from, int to, double w, EdgeTag tag) {
  Coupling& c = record_for(from, to, tag);
  if (from == c.a)
    c.w_ab += w;
  else
    c.w_ba += w;
  incoming_[static_cast<size_t>(to)].push_back({from, w});
}

void CouplingGraph::clamp_label(int i, SpinLabel s) {
  check_node(i);
  clamps_[static_cast<size_t>(i)] = Clamp{s, spin_phase(s)};
}

void CouplingGraph::clamp_phase(int i, double theta) {
  check_node(i);
  clamps_[static_cast<size_t>(i)] = Clamp{std::nullopt, theta};
}

const std::optional<Clamp>& CouplingGraph::clamp_at(int i) const {
  check_node(i);
  return clamps_[static_cast<size_t>(i)];
}

void CouplingGraph::set_pump(int i, double k_p) {
  check_node(i);
  pumps_[static_cast<size_t>(i)] = k_p;
}

void CouplingGraph::set_uniform_pump(double k_p) {
  std::fill(pumps_.begin(), pumps_.end(), k_p);
}

double CouplingGraph::pump(int i) const {
  check_node(i);
  return pumps_[static_cast<size_t>(i)];
}

const std::vector<CouplingGraph::Influence>& CouplingGraph::incoming(
    int i) const {
  check_node(i);
  return incoming_[static_cast<size_t>(i)];
}

Vec2 CouplingGraph::node_vector(int i, const PottsState& s) const {
  const auto& c = clamps_[static_cast<size_t>(i)];
  if (c && !c->label) return c->vec();  // angle clamp: not a Potts node
  return spin_vec(s[i]);
}

void CouplingGraph::validate_state(const PottsState& s) const {
  if (s.size() != n_)
    throw std::invalid_argument("state has " + std::to_string(s.size()) +
                                " labels, graph has " + std::to_string(n_) +
                                " nodes");
  for (int i = 0; i < n_; ++i) {
    const auto& c = clamps_[static_cast<size_t>(i)];
    if (c && c->label && s[i] != *c->label)
      throw std::invalid_argument("state violates clamp at node " +
                                  std::to_string(i));
  }
}

void CouplingGraph::validate_phases(const PhaseVector& p) const {
  if (p.size() != n_)
    throw std::invalid_argument("phase vector has " + std::to_string(p.size()) +
                                " entries, graph has " + std::to_string(n_) +
                                " nodes");
}

double CouplingGraph::discrete_energy(const PottsState& s) const {
  validate_state(s);
  double e = 0.0;
  for (const Coupling& c : couplings_)
    e += c.mean() * dot(node_vector(c.a, s), node_vector(c.b, s));
  return e;
}

Vec2 CouplingGraph::local_field(const PottsState& s, int i) const {
  validate_state(s);
  check_node(i);
  if (clamped(i))
    throw std::invalid_argument("local_field requested for clamped node " +
                                std::to_string(i));
  Vec2 h{0.0, 0.0};
  for (const Influence& in : incoming_[static_cast<size_t>(i)]) {
    Vec2 v = node_vector(in.from, s);
    h.x += in.w * v.x;
    h.y += in.w * v.y;
  }
  return h;
}

double CouplingGraph::continuous_energy(const PhaseVector& p, int n_pump) const {
  validate_phases(p);
  if (n_pump < 2) throw std::invalid_argument("pump harmonic must be >= 2");
  double e = 0.0;
  for (const Coupling& c : couplings_)
    e += c.mean() * std::cos(p[c.a] - p[c.b]);
  e *= 0.5 * n_pump;
  for (int i = 0; i < n_; ++i) {
    double kp = pumps_[static_cast<size_t>(i)];
    if (kp != 0.0) e += kp * std::cos(n_pump * p[i]);
  }
  return e;
}

nlohmann::json CouplingGraph::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = n_;
  nlohmann::json cps = nlohmann::json::array();
  for (const Coupling& c : couplings_) {
    if (c.symmetric()) {
      cps.push_back({c.a, c.b, c.w_ab});
    } else {
      if (c.w_ab != 0.0) cps.push_back({c.a, c.b, c.w_ab, true});
      if (c.w_ba != 0.0) cps.push_back({c.b, c.a, c.w_ba, true});
    }
  }
  j["couplings"] = std::move(cps);
  nlohmann::json clamps = nlohmann::json::object();
  for (int i = 0; i < n_; ++i) {
    const auto& c = clamps_[static_cast<size_t>(i)];
    if (!c) continue;
    if (c->label)
      clamps[std::to_string(i)] = std::string(1, label_char(*c->label));
    else
      clamps[std::to_string(i)] = c->phase;
  }
  if (!clamps.empty()) j["clamps"] = std::move(clamps);
  bool any_pump = std::any_of(pumps_.begin(), pumps_.end(),
                              [](double k) { return k != 0.0; });
  if (any_pump) j["pump"] = pumps_;
  return j;
}

CouplingGraph CouplingGraph::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph JSON: not an object");
  if (j.value("schema", 0) != 1)
    throw std::invalid_argument("graph JSON: unsupported schema version");
  CouplingGraph g;
  g.add_nodes(j.at("n").get<int>());
  for (const auto& entry : j.at("couplings")) {
    if (!entry.is_array() || entry.size() < 3 || entry.size() > 4)
      throw std::invalid_argument(
          "graph JSON: coupling entries are [i, j, w] or [i, j, w, directed]");
    int a = entry[0].get<int>(), b = entry[1].get<int>();
    double w = entry[2].get<double>();
    bool directed = entry.size() == 4 && entry[3].get<bool>();
    if (directed)
      g.couple_directed(a, b, w);
    else
      g.couple(a, b, w);
  }
  if (j.contains("clamps")) {
    for (const auto& [key, val] : j.at("clamps").items()) {
      int i = std::stoi(key);
      if (val.is_string()) {
        const std::string s = val.get<std::string>();
        if (s.size() != 1)
          throw std::invalid_argument("graph JSON: bad clamp label " + s);
        g.clamp_label(i, label_from_char(s[0]));
      } else {
        g.clamp_phase(i, val.get<double>());
      }
    }
  }
  if (j.contains("pump")) {
    auto p = j.at("pump").get<std::vector<double>>();
    if (static_cast<int>(p.size()) != g.size())
      throw std::invalid_argument("graph JSON: pump length mismatch");
    for (int i = 0; i < g.size(); ++i) g.set_pump(i, p[static_cast<size_t>(i)]);
  }
  return g;
}

PottsState make_state(const CouplingGraph& g, SpinLabel fill) {
  PottsState s;
  s.labels.assign(static_cast<size_t>(g.size()), fill);
  apply_clamps(g, s);
  return s;
}

void apply_clamps(const CouplingGraph& g, PottsState& s) {
  for (int i = 0; i < g.size(); ++i) {
    const auto& c = g.clamp_at(i);
    if (c && c->label) s[i] = *c->label;
  }
}

PhaseVector embed(const CouplingGraph& g, const PottsState& s) {
  g.validate_state(s);
  PhaseVector p;
  p.phases.resize(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    const auto& c = g.clamp_at(i);
    p[i] = c ? c->phase : spin_phase(s[i]);
  }
  return p;
}

SpinLabel quantize_phase(double theta, int n) {
  if (n != 2 && n != 3)
    throw std::invalid_argument("quantize: only 2 or 3 phase bins supported");
  const double tau = 2.0 * std::numbers::pi;
  double x = std::fmod(theta, tau) / tau * n;  // bin coordinate
  if (x < 0.0) x += n;
  double lo = std::floor(x);
  double frac = x - lo;
  int k;
  if (frac < 0.5)
    k = static_cast<int>(lo);
  else if (frac > 0.5)
    k = static_cast<int>(lo) + 1;
  else  // exact midpoint: lower bin *index* wins (including the wrap to 0)
    k = std::min(static_cast<int>(lo) % n, (static_cast<int>(lo) + 1) % n);
  return static_cast<SpinLabel>(k % n);
}

PottsState quantize(const PhaseVector& p, int n) {
  PottsState s;
  s.labels.reserve(p.phases.size());
  for (double th : p.phases) s.labels.push_back(quantize_phase(th, n));
  return s;
}

}  // namespace oscopt
