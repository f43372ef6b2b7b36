// Discrete sweeps, phase-flow integration, seeding and restarts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oscopt/dynamics.hpp"
#include "oscopt/graph.hpp"

using namespace oscopt;

namespace {

constexpr double kPi = std::numbers::pi;

CouplingGraph symmetric_random(std::mt19937_64& rng, int max_nodes) {
  std::uniform_int_distribution<int> nodes(2, max_nodes);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  CouplingGraph g;
  const int n = nodes(rng);
  g.add_nodes(n);
  std::uniform_int_distribution<int> node(0, n - 1);
  const int m = std::uniform_int_distribution<int>(1, 2 * n)(rng);
  for (int e = 0; e < m; ++e) {
    int a = node(rng), b = node(rng);
    if (a != b) g.couple(a, b, weight(rng));
  }
  return g;
}

}  // namespace

TEST_CASE("zero local field keeps the current label") {
  CouplingGraph g;
  g.add_nodes(2);
  PottsState s;
  s.labels = {SpinLabel::B, SpinLabel::T};
  CHECK(hopfield_step(g, s, 0) == SpinLabel::B);
  // keep_current only protects the incumbent when it is among the best;
  // otherwise ties resolve to the lowest label index.
  g.couple(0, 1, 1.0);
  s.labels = {SpinLabel::T, SpinLabel::T};
  CHECK(hopfield_step(g, s, 0) == SpinLabel::F);
}

TEST_CASE("seeded_random tie-break stays inside the tied label set") {
  CouplingGraph g;
  g.add_nodes(2);
  g.couple(0, 1, 1.0);
  PottsState s;
  s.labels = {SpinLabel::T, SpinLabel::T};  // F and B tie at -0.5
  std::mt19937_64 rng(2);
  bool saw_f = false, saw_b = false;
  for (int i = 0; i < 64; ++i) {
    const SpinLabel pick = hopfield_step(g, s, 0, TieBreak::seeded_random, &rng);
    CHECK(pick != SpinLabel::T);
    saw_f = saw_f || pick == SpinLabel::F;
    saw_b = saw_b || pick == SpinLabel::B;
  }
  CHECK(saw_f);
  CHECK(saw_b);
}

TEST_CASE("stepping a clamped node is an error") {
  CouplingGraph g;
  g.add_nodes(2);
  g.clamp_label(0, SpinLabel::T);
  PottsState s = make_state(g, SpinLabel::F);
  CHECK_THROWS_AS(hopfield_step(g, s, 0), std::invalid_argument);
}

TEST_CASE("all-zero weights converge in a single sweep") {
  CouplingGraph g;
  g.add_nodes(4);
  g.couple(0, 1, 0.0);
  g.couple(2, 3, 0.0);
  SweepConfig cfg;
  cfg.seed = 3;
  PottsState s;
  s.labels = {SpinLabel::T, SpinLabel::B, SpinLabel::F, SpinLabel::T};
  const RunTrace t = hopfield_solve(g, s, cfg);
  CHECK(t.converged);
  CHECK(t.steps == 1);
  CHECK(t.state.labels == s.labels);
}

TEST_CASE("conjunction triple escapes the high-energy corner") {
  CouplingGraph g;
  g.add_nodes(3);
  g.clamp_label(2, SpinLabel::F);
  g.couple(0, 1, 1.0);
  g.couple(0, 2, -1.0);
  g.couple(1, 2, -1.0);
  SweepConfig cfg;
  cfg.order = SweepOrder::sequential;
  PottsState s;
  s.labels = {SpinLabel::T, SpinLabel::T, SpinLabel::F};
  const RunTrace t = hopfield_solve(g, s, cfg);
  CHECK(t.converged);
  CHECK(t.final_energy() == -1.0);
}

TEST_CASE("trace energies start at the initial state and never increase") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    CouplingGraph g = symmetric_random(rng, 20);
    PottsState s = random_state(g, rng);
    SweepConfig cfg;
    cfg.seed = rng();
    const RunTrace t = hopfield_solve(g, s, cfg);
    REQUIRE(t.energies.size() == static_cast<size_t>(t.steps) + 1);
    CHECK(t.energies.front() == doctest::Approx(g.discrete_energy(s)));
    CHECK(t.energies.back() == doctest::Approx(g.discrete_energy(t.state)));
    for (size_t i = 1; i < t.energies.size(); ++i)
      CHECK(t.energies[i] <= t.energies[i - 1] + 1e-9);
  }
}

TEST_CASE("converged sweeps end at a single-flip local minimum") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    CouplingGraph g = symmetric_random(rng, 14);
    SweepConfig cfg;
    cfg.seed = rng();
    const RunTrace t = hopfield_solve(g, random_state(g, rng), cfg);
    if (!t.converged) continue;
    const double e = g.discrete_energy(t.state);
    for (int i = 0; i < g.size(); ++i) {
      if (g.clamped(i)) continue;
      for (SpinLabel l : kAllLabels) {
        PottsState alt = t.state;
        alt.labels[static_cast<size_t>(i)] = l;
        CHECK(g.discrete_energy(alt) >= e - 1e-9);
      }
    }
  }
}

TEST_CASE("phase flow: single pumped node locks to a lattice angle") {
  CouplingGraph g;
  g.add_node();
  g.set_pump(0, 1.0);
  OdeConfig cfg;
  cfg.total_time = 40.0;
  PhaseVector p;
  p.phases = {0.3};
  const RunTrace t = kuramoto_solve(g, p, cfg);
  CHECK(t.converged);
  // Positive pump makes cos(3*theta) = -1 the minimum: theta = pi/3 mod 2pi/3.
  CHECK(std::abs(std::remainder(t.phases[0] - kPi / 3, 2 * kPi / 3)) < 1e-4);
}

TEST_CASE("phase flow: positive coupling drives nodes to opposite phases") {
  CouplingGraph g;
  g.add_nodes(2);
  g.couple(0, 1, 1.0);
  OdeConfig cfg;
  cfg.total_time = 60.0;
  PhaseVector p;
  p.phases = {0.2, 0.9};
  const RunTrace t = kuramoto_solve(g, p, cfg);
  CHECK(t.converged);
  CHECK(std::abs(std::remainder(t.phases[0] - t.phases[1], 2 * kPi)) ==
        doctest::Approx(kPi).epsilon(1e-3));
}

TEST_CASE("phase flow: symmetric stationary point stays put without noise") {
  CouplingGraph g;
  g.add_nodes(2);
  g.couple(0, 1, 1.0);
  OdeConfig cfg;
  PhaseVector p;
  p.phases = {1.0, 1.0};  // identical phases; the gradient vanishes
  const RunTrace t = kuramoto_solve(g, p, cfg);
  CHECK(t.phases[0] == doctest::Approx(1.0));
  CHECK(t.phases[1] == doctest::Approx(1.0));
}

TEST_CASE("phase flow holds clamped oscillators fixed") {
  CouplingGraph g;
  g.add_nodes(2);
  g.clamp_phase(0, 1.3);
  g.couple(0, 1, -1.0);
  OdeConfig cfg;
  cfg.total_time = 60.0;
  std::mt19937_64 rng(9);
  PhaseVector p = random_phases(g, rng);
  CHECK(p[0] == doctest::Approx(1.3));
  const RunTrace t = kuramoto_solve(g, p, cfg);
  CHECK(t.phases[0] == doctest::Approx(1.3));
  // Negative coupling aligns the free node with the clamp.
  CHECK(std::abs(std::remainder(t.phases[1] - 1.3, 2 * kPi)) < 1e-3);
}

TEST_CASE("euler and rk4 agree on smooth flows at small dt") {
  CouplingGraph g;
  g.add_nodes(3);
  g.couple(0, 1, 1.0);
  g.couple(1, 2, -0.5);
  PhaseVector p;
  p.phases = {0.1, 2.0, 4.0};
  OdeConfig a, b;
  a.integrator = Integrator::rk4;
  b.integrator = Integrator::euler;
  a.dt = b.dt = 1e-4;
  a.total_time = b.total_time = 5.0;
  a.convergence_tol = b.convergence_tol = 0.0;  // run the full horizon
  const RunTrace ta = kuramoto_solve(g, p, a);
  const RunTrace tb = kuramoto_solve(g, p, b);
  for (int i = 0; i < ta.phases.size(); ++i)
    CHECK(std::abs(ta.phases[i] - tb.phases[i]) < 2e-3);
}

TEST_CASE("noisy integration still reports finite energies") {
  CouplingGraph g;
  g.add_nodes(4);
  g.couple(0, 1, 1.0);
  g.couple(2, 3, -1.0);
  OdeConfig cfg;
  cfg.noise = 0.2;
  cfg.total_time = 2.0;
  cfg.seed = 11;
  PhaseVector p;
  p.phases = {0.0, 1.0, 2.0, 3.0};
  const RunTrace t = kuramoto_solve(g, p, cfg);
  CHECK_FALSE(t.converged);  // noise keeps the gradient test from firing
  for (double e : t.energies) CHECK(std::isfinite(e));
}

TEST_CASE("binding pump scales with total incident weight and is negative") {
  CouplingGraph g;
  g.add_nodes(3);
  g.clamp_label(2, SpinLabel::F);
  g.couple(0, 1, 2.0);
  g.couple(0, 2, -1.0);
  set_binding_pump(g, 0.5);
  CHECK(g.pump(0) == doctest::Approx(-1.5));  // 0.5 * (|2| + |-1|)
  CHECK(g.pump(1) == doctest::Approx(-1.0));
  CHECK(g.pump(2) == 0.0);  // clamped nodes are never pumped
}

TEST_CASE("negative pump pulls quantization bins into alignment") {
  CouplingGraph g;
  g.add_nodes(2);
  g.couple(0, 1, -1.0);
  set_binding_pump(g, 0.5);
  OdeConfig cfg;
  cfg.total_time = 60.0;
  cfg.seed = 13;
  std::mt19937_64 rng(13);
  const RunTrace t = kuramoto_solve(g, random_phases(g, rng), cfg);
  CHECK(t.converged);
  for (double ph : t.phases) {
    // cos(3 theta) = +1 at the lattice angles when the pump is negative.
    CHECK(std::abs(std::remainder(ph, 2 * kPi / 3)) < 1e-3);
  }
  CHECK(t.state.labels[0] == t.state.labels[1]);
}

TEST_CASE("derived seeds are distinct and reproducible") {
  const std::uint64_t a = derive_seed(42, 0);
  const std::uint64_t b = derive_seed(42, 1);
  const std::uint64_t c = derive_seed(43, 0);
  CHECK(a != b);
  CHECK(a != c);
  CHECK(derive_seed(42, 0) == a);
}

TEST_CASE("multistart with one restart equals a direct seeded run") {
  std::mt19937_64 rng(17);
  CouplingGraph g = symmetric_random(rng, 12);
  MultistartConfig mcfg;
  mcfg.restarts = 1;
  mcfg.seed = 99;
  const MultistartResult r = multistart(g, mcfg);
  const std::uint64_t run_seed = derive_seed(99, 0);
  std::mt19937_64 run_rng(run_seed);
  SweepConfig sc = mcfg.sweep;
  sc.seed = run_seed;
  const RunTrace direct = hopfield_solve(g, random_state(g, run_rng), sc);
  CHECK(r.best.state.labels == direct.state.labels);
  CHECK(r.best.final_energy() == doctest::Approx(direct.final_energy()));
  CHECK(r.final_energies.size() == 1);
}

TEST_CASE("multistart is deterministic and never worse with more restarts") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    CouplingGraph g = symmetric_random(rng, 16);
    MultistartConfig one, eight;
    one.restarts = 1;
    eight.restarts = 8;
    one.seed = eight.seed = 7;
    const MultistartResult a = multistart(g, eight);
    const MultistartResult b = multistart(g, eight);
    CHECK(a.best.state.labels == b.best.state.labels);
    CHECK(a.best.final_energy() == b.best.final_energy());
    CHECK(a.best_run == b.best_run);
    const MultistartResult single = multistart(g, one);
    CHECK(a.best.final_energy() <= single.best.final_energy() + 1e-12);
  }
  MultistartConfig bad;
  bad.restarts = 0;
  CouplingGraph g;
  g.add_node();
  CHECK_THROWS_AS(multistart(g, bad), std::invalid_argument);
}

TEST_CASE("multistart honors an explicit starting hint") {
  CouplingGraph g;
  g.add_nodes(2);
  g.couple(0, 1, 0.0);  // flat landscape: nothing ever moves
  MultistartConfig cfg;
  cfg.restarts = 1;
  PottsState hint;
  hint.labels = {SpinLabel::B, SpinLabel::B};
  const MultistartResult r = multistart(g, cfg, hint);
  CHECK(r.best.state.labels == hint.labels);
}

TEST_CASE("two-phase initial draws avoid the Blue label") {
  CouplingGraph g;
  g.add_nodes(40);
  std::mt19937_64 rng(21);
  const PottsState s = random_state(g, rng, /*two_phase=*/true);
  for (SpinLabel l : s.labels) CHECK(l != SpinLabel::B);
}
