#include "oscopt/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace oscopt {

namespace {

// Unchecked argmin over the three labels against field h.
SpinLabel argmin_label(Vec2 h, SpinLabel current, TieBreak tie_break,
                       std::mt19937_64* rng) {
  double score[kNumLabels];
  for (int k = 0; k < kNumLabels; ++k)
    score[k] = dot(spin_vec(static_cast<SpinLabel>(k)), h);
  double best = std::min({score[0], score[1], score[2]});
  if (tie_break == TieBreak::keep_current) {
    if (score[static_cast<int>(current)] == best) return current;
    for (int k = 0; k < kNumLabels; ++k)
      if (score[k] == best) return static_cast<SpinLabel>(k);
  } else {
    if (rng == nullptr)
      throw std::invalid_argument("seeded_random tie-break requires an rng");
    int cand[kNumLabels];
    int n = 0;
    for (int k = 0; k < kNumLabels; ++k)
      if (score[k] == best) cand[n++] = k;
    if (n == 1) return static_cast<SpinLabel>(cand[0]);
    std::uniform_int_distribution<int> pick(0, n - 1);
    return static_cast<SpinLabel>(cand[pick(*rng)]);
  }
  return current;  // unreachable
}

Vec2 raw_field(const CouplingGraph& g, const PottsState& s, int i) {
  Vec2 h{0.0, 0.0};
  for (const auto& in : g.incoming(i)) {
    Vec2 v = g.node_vector(in.from, s);
    h.x += in.w * v.x;
    h.y += in.w * v.y;
  }
  return h;
}

}  // namespace

SpinLabel hopfield_step(const CouplingGraph& g, const PottsState& s, int i,
                        TieBreak tie_break, std::mt19937_64* rng) {
  g.validate_state(s);
  if (g.clamped(i))
    throw std::invalid_argument("hopfield_step on clamped node " +
                                std::to_string(i));
  return argmin_label(raw_field(g, s, i), s[i], tie_break, rng);
}

RunTrace hopfield_solve(const CouplingGraph& g, PottsState init,
                        const SweepConfig& cfg) {
  g.validate_state(init);
  if (cfg.max_sweeps < 0)
    throw std::invalid_argument("max_sweeps must be non-negative");
  std::mt19937_64 rng(cfg.seed);
  std::vector<int> order;
  for (int i = 0; i < g.size(); ++i)
    if (!g.clamped(i)) order.push_back(i);

  RunTrace trace;
  trace.seed = cfg.seed;
  trace.state = std::move(init);
  trace.energies.push_back(g.discrete_energy(trace.state));
  std::mt19937_64* tie_rng =
      cfg.tie_break == TieBreak::seeded_random ? &rng : nullptr;
  for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    if (cfg.order == SweepOrder::shuffled)
      std::shuffle(order.begin(), order.end(), rng);
    int changes = 0;
    for (int i : order) {
      SpinLabel next =
          argmin_label(raw_field(g, trace.state, i), trace.state[i],
                       cfg.tie_break, tie_rng);
      if (next != trace.state[i]) {
        trace.state[i] = next;
        ++changes;
      }
    }
    ++trace.steps;
    trace.energies.push_back(g.discrete_energy(trace.state));
    if (changes == 0) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

namespace {

// dtheta/dt = -grad continuous_energy; clamped nodes are held at zero.
void phase_velocity(const CouplingGraph& g, const std::vector<double>& th,
                    int n_pump, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  const double half_n = 0.5 * n_pump;
  for (const Coupling& c : g.couplings()) {
    double v = half_n * c.mean() *
               std::sin(th[static_cast<size_t>(c.a)] -
                        th[static_cast<size_t>(c.b)]);
    out[static_cast<size_t>(c.a)] += v;
    out[static_cast<size_t>(c.b)] -= v;
  }
  for (int i = 0; i < g.size(); ++i) {
    double kp = g.pump(i);
    if (kp != 0.0)
      out[static_cast<size_t>(i)] +=
          n_pump * kp * std::sin(n_pump * th[static_cast<size_t>(i)]);
    if (g.clamped(i)) out[static_cast<size_t>(i)] = 0.0;
  }
}

}  // namespace

RunTrace kuramoto_solve(const CouplingGraph& g, PhaseVector init,
                        const OdeConfig& cfg) {
  g.validate_phases(init);
  if (cfg.dt <= 0.0) throw std::invalid_argument("dt must be positive");
  if (cfg.total_time < 0.0)
    throw std::invalid_argument("total_time must be non-negative");
  const auto n = static_cast<size_t>(g.size());
  const long long max_steps =
      static_cast<long long>(std::llround(cfg.total_time / cfg.dt));

  RunTrace trace;
  trace.seed = cfg.seed;
  trace.phases = std::move(init);
  trace.energies.push_back(g.continuous_energy(trace.phases, cfg.n_pump));

  std::vector<double>& th = trace.phases.phases;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double noise_scale = cfg.noise * std::sqrt(cfg.dt);

  for (long long step = 0; step < max_steps; ++step) {
    phase_velocity(g, th, cfg.n_pump, k1);
    if (cfg.integrator == Integrator::euler) {
      for (size_t i = 0; i < n; ++i) th[i] += cfg.dt * k1[i];
    } else {
      for (size_t i = 0; i < n; ++i) tmp[i] = th[i] + 0.5 * cfg.dt * k1[i];
      phase_velocity(g, tmp, cfg.n_pump, k2);
      for (size_t i = 0; i < n; ++i) tmp[i] = th[i] + 0.5 * cfg.dt * k2[i];
      phase_velocity(g, tmp, cfg.n_pump, k3);
      for (size_t i = 0; i < n; ++i) tmp[i] = th[i] + cfg.dt * k3[i];
      phase_velocity(g, tmp, cfg.n_pump, k4);
      for (size_t i = 0; i < n; ++i)
        th[i] += cfg.dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    if (noise_scale != 0.0)
      for (size_t i = 0; i < n; ++i)
        if (!g.clamped(static_cast<int>(i))) th[i] += noise_scale * gauss(rng);
    ++trace.steps;
    double e = g.continuous_energy(trace.phases, cfg.n_pump);
    if (!std::isfinite(e))
      throw std::runtime_error("kuramoto_solve: non-finite energy at step " +
                               std::to_string(trace.steps) +
                               " (dt too large?)");
    trace.energies.push_back(e);
    double vmax = 0.0;
    for (size_t i = 0; i < n; ++i) vmax = std::max(vmax, std::abs(k1[i]));
    if (vmax < cfg.convergence_tol && cfg.noise == 0.0) {
      trace.converged = true;
      break;
    }
  }
  trace.state = quantize(trace.phases, cfg.n_pump == 2 ? 2 : 3);
  apply_clamps(g, trace.state);
  return trace;
}

void set_binding_pump(CouplingGraph& g, double factor) {
  // The pump term k_p cos(N theta) must be minimal at the N label phases
  // (where cos(N theta) = 1), so the locking pump is negative.
  for (int i = 0; i < g.size(); ++i) {
    if (g.clamped(i)) continue;
    double mag = 0.0;
    for (const auto& inf : g.incoming(i)) mag += std::abs(inf.w);
    if (mag > 0.0) g.set_pump(i, -factor * mag);
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 over the combined value: independent, well-mixed streams.
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PottsState random_state(const CouplingGraph& g, std::mt19937_64& rng,
                        bool two_phase) {
  std::uniform_int_distribution<int> pick(0, two_phase ? 1 : 2);
  PottsState s;
  s.labels.resize(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    int k = pick(rng);
    s[i] = two_phase ? (k == 0 ? SpinLabel::F : SpinLabel::T)
                     : static_cast<SpinLabel>(k);
  }
  apply_clamps(g, s);
  return s;
}

PhaseVector random_phases(const CouplingGraph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  PhaseVector p;
  p.phases.resize(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    const auto& c = g.clamp_at(i);
    p[i] = c ? c->phase : angle(rng);
  }
  return p;
}

MultistartResult multistart(const CouplingGraph& g, const MultistartConfig& cfg,
                            const std::optional<PottsState>& hint) {
  if (cfg.restarts < 1)
    throw std::invalid_argument("multistart requires at least one restart");
  auto run_one = [&](int r) -> RunTrace {
    std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(r));
    std::mt19937_64 rng(seed);
    if (cfg.engine == Engine::hopfield) {
      SweepConfig sc = cfg.sweep;
      sc.seed = seed;
      PottsState init = (r == 0 && hint)
                            ? *hint
                            : random_state(g, rng, cfg.two_phase_init);
      apply_clamps(g, init);
      return hopfield_solve(g, init, sc);
    }
    OdeConfig oc = cfg.ode;
    oc.seed = seed;
    PhaseVector init =
        (r == 0 && hint) ? embed(g, *hint) : random_phases(g, rng);
    return kuramoto_solve(g, init, oc);
  };

  std::vector<RunTrace> runs(static_cast<size_t>(cfg.restarts));
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, cfg.restarts));
  if (threads == 1) {
    for (int r = 0; r < cfg.restarts; ++r) runs[static_cast<size_t>(r)] = run_one(r);
  } else {
    std::vector<std::future<void>> futs;
    futs.reserve(static_cast<size_t>(threads));
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
      futs.push_back(std::async(std::launch::async, [&] {
        for (int r = next.fetch_add(1); r < cfg.restarts;
             r = next.fetch_add(1))
          runs[static_cast<size_t>(r)] = run_one(r);
      }));
    for (auto& f : futs) f.get();
  }

  MultistartResult res;
  res.final_energies.reserve(runs.size());
  for (const RunTrace& t : runs) res.final_energies.push_back(t.final_energy());
  int best = 0;
  for (int r = 1; r < cfg.restarts; ++r)
    if (res.final_energies[static_cast<size_t>(r)] <
        res.final_energies[static_cast<size_t>(best)])
      best = r;
  res.best = runs[static_cast<size_t>(best)];
  res.best_run = best;
  return res;
}

}  // namespace oscopt
