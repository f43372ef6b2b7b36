#pragma once
// Discrete Potts-Hopfield sweeps and continuous Kuramoto phase dynamics.
//
// Both minimize the same Lyapunov energy: the Kuramoto right-hand side is the
// exact negative gradient of CouplingGraph::continuous_energy, and a Hopfield
// argmin update never raises discrete_energy on symmetric graphs.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "oscopt/graph.hpp"

namespace oscopt {

enum class TieBreak : std::uint8_t {
  keep_current,   // keep the node's label if tied, else lowest label index
  seeded_random,  // uniform draw among the tied labels
};

enum class SweepOrder : std::uint8_t { sequential, shuffled };

struct SweepConfig {
  int max_sweeps = 256;
  SweepOrder order = SweepOrder::shuffled;
  TieBreak tie_break = TieBreak::keep_current;
  std::uint64_t seed = 0;
};

enum class Integrator : std::uint8_t { euler, rk4 };

struct OdeConfig {
  double dt = 1e-3;
  double total_time = 20.0;
  Integrator integrator = Integrator::rk4;
  int n_pump = 3;                 // pump harmonic N
  double noise = 0.0;             // additive phase noise amplitude (per sqrt(dt))
  double convergence_tol = 1e-5;  // stop when max |dtheta/dt| falls below
  std::uint64_t seed = 0;
};

struct RunTrace {
  std::vector<double> energies;  // length = steps + 1 (initial value first)
  long long steps = 0;
  bool converged = false;
  PottsState state;    // final labels (Kuramoto: quantized, clamps applied)
  PhaseVector phases;  // Kuramoto only
  std::uint64_t seed = 0;

  double final_energy() const { return energies.back(); }
};

/// Argmin label of node i in the field of state s.  Throws if i is clamped.
/// rng is required for TieBreak::seeded_random.
SpinLabel hopfield_step(const CouplingGraph& g, const PottsState& s, int i,
                        TieBreak tie_break = TieBreak::keep_current,
                        std::mt19937_64* rng = nullptr);

/// Full sweeps until no label changes or max_sweeps; one trace step per sweep.
RunTrace hopfield_solve(const CouplingGraph& g, PottsState init,
                        const SweepConfig& cfg);

/// Integrate dth_i/dt = (N/2) sum w sin(th_i - th_j) + N K_p sin(N th_i)
/// (clamped nodes held); one trace step per integrator step.
RunTrace kuramoto_solve(const CouplingGraph& g, PhaseVector init,
                        const OdeConfig& cfg);

enum class Engine : std::uint8_t { hopfield, kuramoto };

struct MultistartConfig {
  int restarts = 8;
  Engine engine = Engine::hopfield;
  SweepConfig sweep;
  OdeConfig ode;
  std::uint64_t seed = 0;
  int threads = 0;             // 0 = hardware concurrency
  bool two_phase_init = false; // draw initial labels from {T, F} only
};

struct MultistartResult {
  RunTrace best;
  int best_run = 0;
  std::vector<double> final_energies;  // per run, in run order
};

/// Deterministic given cfg.seed regardless of thread count: run r uses a seed
/// derived from (cfg.seed, r) and results reduce by (energy, run index).
/// Run 0 starts from `hint` when provided; all others from random states.
MultistartResult multistart(const CouplingGraph& g, const MultistartConfig& cfg,
                            const std::optional<PottsState>& hint = {});

/// Independent per-run seed stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Gives every free node with incident couplings the pump strength
/// factor * sum |incoming weight|, so kuramoto phases lock to the N bins.
void set_binding_pump(CouplingGraph& g, double factor = 0.5);

PottsState random_state(const CouplingGraph& g, std::mt19937_64& rng,
                        bool two_phase = false);
PhaseVector random_phases(const CouplingGraph& g, std::mt19937_64& rng);

}  // namespace oscopt
