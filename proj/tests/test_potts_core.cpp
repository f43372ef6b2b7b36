// Spins, coupling graphs, both energies and their exact agreement.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oscopt/graph.hpp"
#include "oscopt/spin.hpp"

using namespace oscopt;

namespace {

constexpr double kPi = std::numbers::pi;

CouplingGraph random_graph(std::mt19937_64& rng, int max_nodes,
                           bool allow_directed = false,
                           bool allow_clamps = true) {
  std::uniform_int_distribution<int> nodes(2, max_nodes);
  std::uniform_real_distribution<double> weight(-2.0, 2.0);
  CouplingGraph g;
  const int n = nodes(rng);
  g.add_nodes(n);
  std::uniform_int_distribution<int> node(0, n - 1);
  const int m = std::uniform_int_distribution<int>(1, 3 * n)(rng);
  for (int e = 0; e < m; ++e) {
    int a = node(rng), b = node(rng);
    if (a == b) continue;
    if (allow_directed && rng() % 4 == 0)
      g.couple_directed(a, b, weight(rng));
    else
      g.couple(a, b, weight(rng));
  }
  if (allow_clamps && rng() % 2 == 0) {
    const int i = node(rng);
    if (rng() % 3 == 0)
      g.clamp_phase(i, std::uniform_real_distribution<double>(0.0, 2 * kPi)(rng));
    else
      g.clamp_label(i, static_cast<SpinLabel>(rng() % 3));
  }
  return g;
}

PottsState random_labels(const CouplingGraph& g, std::mt19937_64& rng) {
  PottsState s;
  s.labels.resize(static_cast<size_t>(g.size()));
  for (auto& l : s.labels) l = static_cast<SpinLabel>(rng() % 3);
  apply_clamps(g, s);
  return s;
}

}  // namespace

TEST_CASE("label dot products: 1 on the diagonal, -1/2 off it") {
  for (SpinLabel a : kAllLabels)
    for (SpinLabel b : kAllLabels) {
      const double expect = a == b ? 1.0 : -0.5;
      CHECK(spin_dot(a, b) == expect);
      // The closed form agrees with the actual planar vectors.
      CHECK(dot(spin_vec(a), spin_vec(b)) == doctest::Approx(expect).epsilon(1e-15));
    }
}

TEST_CASE("label phases and vectors") {
  CHECK(spin_phase(SpinLabel::F) == 0.0);
  CHECK(spin_phase(SpinLabel::T) == doctest::Approx(2 * kPi / 3));
  CHECK(spin_phase(SpinLabel::B) == doctest::Approx(4 * kPi / 3));
  CHECK(spin_vec(SpinLabel::F).x == 1.0);
  CHECK(spin_vec(SpinLabel::F).y == 0.0);
  CHECK(spin_vec(SpinLabel::T).x == -0.5);
  CHECK(spin_vec(SpinLabel::T).y == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(spin_vec(SpinLabel::B).y == doctest::Approx(-std::sqrt(3.0) / 2));
}

TEST_CASE("label characters round-trip; unknown characters are rejected") {
  for (SpinLabel s : kAllLabels) CHECK(label_from_char(label_char(s)) == s);
  CHECK_THROWS_AS(label_from_char('Q'), std::invalid_argument);
}

TEST_CASE("two-node energies match the dot-product table") {
  CouplingGraph g;
  g.add_nodes(2);
  g.couple(0, 1, 1.0);
  PottsState s;
  s.labels = {SpinLabel::T, SpinLabel::T};
  CHECK(g.discrete_energy(s) == 1.0);
  s.labels = {SpinLabel::T, SpinLabel::F};
  CHECK(g.discrete_energy(s) == -0.5);
}

TEST_CASE("conjunction triple: 2 when both True, -1 otherwise") {
  CouplingGraph g;
  g.add_nodes(3);
  g.clamp_label(2, SpinLabel::F);
  g.couple(0, 1, 1.0);
  g.couple(0, 2, -1.0);
  g.couple(1, 2, -1.0);
  auto energy = [&](SpinLabel a, SpinLabel b) {
    PottsState s;
    s.labels = {a, b, SpinLabel::F};
    return g.discrete_energy(s);
  };
  CHECK(energy(SpinLabel::T, SpinLabel::T) == 2.0);
  CHECK(energy(SpinLabel::T, SpinLabel::F) == -1.0);
  CHECK(energy(SpinLabel::F, SpinLabel::T) == -1.0);
  CHECK(energy(SpinLabel::F, SpinLabel::F) == -1.0);
}

TEST_CASE("continuous energy: pump and coupling terms") {
  CouplingGraph g;
  g.add_node();
  g.set_pump(0, 1.0);
  PhaseVector p;
  p.phases = {0.0};
  CHECK(g.continuous_energy(p, 3) == doctest::Approx(1.0));  // cos(0)

  CouplingGraph h;
  h.add_nodes(2);
  h.couple(0, 1, 1.0);
  PhaseVector q;
  q.phases = {0.0, kPi};
  CHECK(h.continuous_energy(q, 3) == doctest::Approx(-1.5));  // (3/2)cos(pi)
  CHECK_THROWS_AS(h.continuous_energy(q, 1), std::invalid_argument);
}

TEST_CASE("local field: isolated, single clamp, argmin comparison rule") {
  CouplingGraph g;
  g.add_nodes(2);
  Vec2 h0 = g.local_field(PottsState{{SpinLabel::F, SpinLabel::F}}, 0);
  CHECK(h0.x == 0.0);
  CHECK(h0.y == 0.0);

  g.clamp_label(1, SpinLabel::T);
  g.couple(0, 1, 1.0);
  PottsState s = make_state(g, SpinLabel::F);
  Vec2 h = g.local_field(s, 0);
  CHECK(h.x == doctest::Approx(-0.5));
  CHECK(h.y == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK_THROWS_AS(g.local_field(s, 1), std::invalid_argument);
}

TEST_CASE("weighted neighborhood picks the smallest projected label") {
  // Two True neighbors at weight 1, one False at 3, three Blue at 2: the
  // True projection 2 - 0.5*3 - 0.5*6 is smallest, so the node goes True.
  CouplingGraph g;
  const int x = g.add_node();
  int t1 = g.add_node(), t2 = g.add_node(), f1 = g.add_node();
  g.clamp_label(t1, SpinLabel::T);
  g.clamp_label(t2, SpinLabel::T);
  g.clamp_label(f1, SpinLabel::F);
  g.couple(x, t1, 1.0);
  g.couple(x, t2, 1.0);
  g.couple(x, f1, 3.0);
  for (int i = 0; i < 3; ++i) {
    int b = g.add_node();
    g.clamp_label(b, SpinLabel::B);
    g.couple(x, b, 2.0);
  }
  PottsState s = make_state(g, SpinLabel::F);
  const Vec2 h = g.local_field(s, x);
  double best = 1e99;
  SpinLabel arg = SpinLabel::F;
  for (SpinLabel l : kAllLabels) {
    const double proj = dot(spin_vec(l), h);
    if (proj < best) {
      best = proj;
      arg = l;
    }
  }
  CHECK(arg == SpinLabel::T);
}

TEST_CASE("repeated couplings merge by summation, in any insertion order") {
  CouplingGraph a, b;
  a.add_nodes(3);
  b.add_nodes(3);
  a.couple(0, 1, 0.5);
  a.couple(1, 2, -1.0);
  a.couple(1, 0, 0.25);  // same pair, swapped order
  b.couple(1, 0, 0.25);
  b.couple(0, 1, 0.5);
  b.couple(1, 2, -1.0);
  CHECK(a.connection_count() == 2);
  CHECK(b.connection_count() == 2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    PottsState s = random_labels(a, rng);
    CHECK(a.discrete_energy(s) == b.discrete_energy(s));
  }
}

TEST_CASE("directed couplings fill one direction and share the record") {
  CouplingGraph g;
  g.add_nodes(2);
  g.couple_directed(1, 0, 2.0);
  REQUIRE(g.connection_count() == 1);
  const Coupling& c = g.couplings().front();
  CHECK(c.a == 0);
  CHECK(c.b == 1);
  CHECK(c.w_ba == 2.0);  // direction 1 -> 0 enters node 0's field
  CHECK(c.w_ab == 0.0);
  CHECK_FALSE(c.symmetric());
  CHECK(c.mean() == 1.0);
  // Only the target node feels the influence.
  CHECK(g.incoming(0).size() == 1);
  CHECK(g.incoming(1).empty());
  g.couple_directed(0, 1, 3.0);
  CHECK(g.connection_count() == 1);
  CHECK(g.couplings().front().w_ab == 3.0);
}

TEST_CASE("self-couplings and bad node indices are rejected") {
  CouplingGraph g;
  g.add_nodes(2);
  CHECK_THROWS_AS(g.couple(1, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.couple(0, 5, 1.0), std::out_of_range);
  CHECK_THROWS_AS(g.add_nodes(-1), std::invalid_argument);
}

TEST_CASE("state validation enforces length and clamp labels") {
  CouplingGraph g;
  g.add_nodes(2);
  g.clamp_label(0, SpinLabel::B);
  PottsState short_state;
  short_state.labels = {SpinLabel::F};
  CHECK_THROWS_AS(g.validate_state(short_state), std::invalid_argument);
  PottsState wrong;
  wrong.labels = {SpinLabel::T, SpinLabel::F};
  CHECK_THROWS_AS(g.validate_state(wrong), std::invalid_argument);
  PottsState ok;
  ok.labels = {SpinLabel::B, SpinLabel::F};
  CHECK_NOTHROW(g.validate_state(ok));
}

TEST_CASE("energy is invariant under global relabeling when nothing is clamped") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    CouplingGraph g = random_graph(rng, 12, true, /*allow_clamps=*/false);
    PottsState s = random_labels(g, rng);
    PottsState rot = s;
    for (auto& l : rot.labels)
      l = static_cast<SpinLabel>((static_cast<int>(l) + 1) % 3);
    CHECK(g.discrete_energy(s) ==
          doctest::Approx(g.discrete_energy(rot)).epsilon(1e-12));
  }
}

TEST_CASE("embedded states score 3/2 of the discrete energy at zero pump") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    CouplingGraph g = random_graph(rng, 16, true);
    PottsState s = random_labels(g, rng);
    const PhaseVector p = embed(g, s);
    CHECK(g.continuous_energy(p, 3) ==
          doctest::Approx(1.5 * g.discrete_energy(s)).epsilon(1e-12));
  }
}

TEST_CASE("quantize maps phases to the nearest bin, ties to the lower bin") {
  CHECK(quantize_phase(0.1) == SpinLabel::F);
  CHECK(quantize_phase(2 * kPi / 3 + 0.2) == SpinLabel::T);
  CHECK(quantize_phase(4 * kPi / 3 - 0.2) == SpinLabel::B);
  CHECK(quantize_phase(-0.3) == SpinLabel::F);
  CHECK(quantize_phase(kPi / 3) == SpinLabel::F);      // exact F/T boundary
  CHECK(quantize_phase(kPi) == SpinLabel::T);          // exact T/B boundary
  CHECK(quantize_phase(5 * kPi / 3) == SpinLabel::F);  // B/F wrap: index 0 wins
  CHECK(quantize_phase(0.0, 2) == SpinLabel::F);
  CHECK(quantize_phase(kPi, 2) == SpinLabel::T);
}

TEST_CASE("quantize of an embedding returns the original labels") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    CouplingGraph g = random_graph(rng, 10, false, /*allow_clamps=*/false);
    PottsState s = random_labels(g, rng);
    const PottsState back = quantize(embed(g, s));
    CHECK(back.labels == s.labels);
  }
}

TEST_CASE("make_state and apply_clamps respect clamp labels") {
  CouplingGraph g;
  g.add_nodes(3);
  g.clamp_label(1, SpinLabel::B);
  g.clamp_phase(2, 0.7);
  PottsState s = make_state(g, SpinLabel::T);
  CHECK(s[0] == SpinLabel::T);
  CHECK(s[1] == SpinLabel::B);
  CHECK(s[2] == SpinLabel::T);  // angle clamps leave the label alone
  const PhaseVector p = embed(g, s);
  CHECK(p[1] == doctest::Approx(4 * kPi / 3));
  CHECK(p[2] == doctest::Approx(0.7));
}

TEST_CASE("graph JSON round-trips couplings, clamps and pumps") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    CouplingGraph g = random_graph(rng, 10, true);
    if (trial % 3 == 0) g.set_pump(0, -0.5);
    const CouplingGraph back = CouplingGraph::from_json(g.to_json());
    REQUIRE(back.size() == g.size());
    REQUIRE(back.connection_count() == g.connection_count());
    PottsState s = random_labels(g, rng);
    CHECK(back.discrete_energy(s) ==
          doctest::Approx(g.discrete_energy(s)).epsilon(1e-15));
    const PhaseVector p = embed(g, s);
    CHECK(back.continuous_energy(p, 3) ==
          doctest::Approx(g.continuous_energy(p, 3)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(CouplingGraph::from_json(nlohmann::json::array()),
                  std::invalid_argument);
  CHECK_THROWS_AS(CouplingGraph::from_json(nlohmann::json{{"schema", 2}}),
                  std::invalid_argument);
}
