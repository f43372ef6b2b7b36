#pragma once
// Coupling graphs of 3-state Potts / Kuramoto oscillators.
//
// A graph holds weighted couplings (possibly asymmetric: each record carries
// one weight per direction), per-node clamps (to a label or to an arbitrary
// phase) and per-node pump strengths.  Discrete states assign a label to every
// node; phase vectors assign an angle.  The two energies agree on embedded
// states: continuous_energy(embed(s), pump=0) == (N/2) * discrete_energy(s).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "oscopt/spin.hpp"

namespace oscopt {

/// Role of a coupling inside a built network; purely informational
/// (resource accounting and tests), never consulted by the dynamics.
enum class EdgeTag : std::uint8_t {
  generic,
  base_pair,       // x and its negation
  blue_restrict,   // strong link to the Blue source
  clause_literal,  // literal <-> clause node, asymmetric
  clause_source,   // clause node <-> F/T/B or merged bias source
  source_mesh,     // among source nodes
  quadratic,       // product-term fragment
  linear,          // sum-term fragment
  maze,            // maze cell neighborhoods
  gate,            // logic-gate links
};

struct Coupling {
  int a = 0, b = 0;   // a < b always
  double w_ab = 0.0;  // weight of direction a -> b (enters b's field)
  double w_ba = 0.0;  // weight of direction b -> a (enters a's field)
  EdgeTag tag = EdgeTag::generic;

  bool symmetric() const { return w_ab == w_ba; }
  double mean() const { return 0.5 * (w_ab + w_ba); }
};

/// A node held fixed: either at a label's phase bin or at an arbitrary angle
/// (used for merged bias sources).
struct Clamp {
  std::optional<SpinLabel> label;
  double phase = 0.0;

  Vec2 vec() const { return {std::cos(phase), std::sin(phase)}; }
};

struct PottsState {
  std::vector<SpinLabel> labels;

  int size() const { return static_cast<int>(labels.size()); }
  SpinLabel& operator[](int i) { return labels[static_cast<size_t>(i)]; }
  SpinLabel operator[](int i) const { return labels[static_cast<size_t>(i)]; }
};

struct PhaseVector {
  std::vector<double> phases;

  int size() const { return static_cast<int>(phases.size()); }
  double& operator[](int i) { return phases[static_cast<size_t>(i)]; }
  double operator[](int i) const { return phases[static_cast<size_t>(i)]; }
};

class CouplingGraph {
 public:
  /// Incoming influence on a node: `w * vec(from)` enters its local field.
  struct Influence {
    int from;
    double w;
  };

  int add_node();
  int add_nodes(int count);  // returns the index of the first added node
  int size() const { return n_; }

  /// Symmetric coupling; repeated (i, j) pairs merge by weight summation.
  void couple(int i, int j, double w, EdgeTag tag = EdgeTag::generic);
  /// One-directional coupling `from -> to`; merges into the same record.
  void couple_directed(int from, int to, double w,
                       EdgeTag tag = EdgeTag::generic);

  void clamp_label(int i, SpinLabel s);
  void clamp_phase(int i, double theta);
  bool clamped(int i) const { return clamp_at(i).has_value(); }
  const std::optional<Clamp>& clamp_at(int i) const;

  void set_pump(int i, double k_p);
  void set_uniform_pump(double k_p);
  double pump(int i) const;

  const std::vector<Coupling>& couplings() const { return couplings_; }
  long long connection_count() const {
    return static_cast<long long>(couplings_.size());
  }
  const std::vector<Influence>& incoming(int i) const;

  /// Planar vector of node i under state s (clamp-aware).
  Vec2 node_vector(int i, const PottsState& s) const;

  /// E = sum over couplings of mean(w) * (S_a . S_b).
  double discrete_energy(const PottsState& s) const;

  /// h_i = sum of incoming w * S_j.  Throws if i is clamped.
  Vec2 local_field(const PottsState& s, int i) const;

  /// E = (N/2) sum mean(w) cos(th_a - th_b) + sum K_p,i cos(N th_i).
  double continuous_energy(const PhaseVector& p, int n_pump = 3) const;

  /// Throws unless s has one label per node and clamp labels are respected.
  void validate_state(const PottsState& s) const;
  void validate_phases(const PhaseVector& p) const;

  /// External JSON form (schema 1).  Tags are not serialized.
  nlohmann::json to_json() const;
  static CouplingGraph from_json(const nlohmann::json& j);

 private:
  void check_node(int i) const;
  Coupling& record_for(int i, int j, EdgeTag tag);

  int n_ = 0;
  std::vector<Coupling> couplings_;
  std::vector<std::pair<std::int64_t, std::size_t>> index_;  // sorted key -> idx
  std::vector<std::optional<Clamp>> clamps_;
  std::vector<double> pumps_;
  std::vector<std::vector<Influence>> incoming_;
};

/// State with every node at `fill`, except label-clamped nodes at their clamp.
PottsState make_state(const CouplingGraph& g, SpinLabel fill);

/// Apply clamp labels onto s (angle clamps leave the label untouched).
void apply_clamps(const CouplingGraph& g, PottsState& s);

/// Phases at label bins; clamped nodes at their clamp phase.
PhaseVector embed(const CouplingGraph& g, const PottsState& s);

/// Nearest of n equal phase bins 2*pi*k/n; exact ties take the lower bin index.
SpinLabel quantize_phase(double theta, int n = 3);
PottsState quantize(const PhaseVector& p, int n = 3);

}  // namespace oscopt
