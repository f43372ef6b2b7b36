#include "oscopt/clause_net.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oscopt {

void ClauseWeights::validate() const {
  auto fail = [](const std::string& msg) {
    throw std::domain_error("clause weights: " + msg);
  };
  if (!(w_l < 0.0)) fail("w_l must be negative");
  if (!(w_r > 0.0)) fail("w_r must be positive");
  if (!(w_r < -w_l)) fail("w_r must stay below |w_l|");
  if (!(w_false + 3.0 * w_l < w_blue)) fail("w_blue too low vs w_false + 3 w_l");
  if (!(w_blue < w_false)) fail("w_blue must stay below w_false");
  if (!(w_blue < w_true + 3.0 * w_l)) fail("w_blue too high vs w_true + 3 w_l");
}

ClauseWeights ClauseWeights::scaled(double factor) const {
  if (!(factor > 0.0))
    throw std::invalid_argument("clause weight scale must be positive");
  return {w_l * factor, w_r * factor, w_false * factor, w_true * factor,
          w_blue * factor};
}

CertifiedClauseWeights certify_for_length(const ClauseWeights& w, int k) {
  if (k < 1) throw std::invalid_argument("clause length must be >= 1");
  w.validate();
  const double lo = w.w_false + k * w.w_l;
  const double hi = std::min(w.w_false + (k - 1) * w.w_l, w.w_true + k * w.w_l);
  if (!(lo < hi))
    throw std::domain_error("no admissible w_blue for clause length " +
                            std::to_string(k));
  return {k, w.w_l, w.w_false, w.w_true, 0.5 * (lo + hi)};
}

BiasedSource merge_sources(double w_false, double w_true, double w_blue) {
  Vec2 v{0.0, 0.0};
  const double ws[3] = {w_false, w_true, w_blue};
  for (int k = 0; k < kNumLabels; ++k) {
    Vec2 s = spin_vec(static_cast<SpinLabel>(k));
    v.x += ws[k] * s.x;
    v.y += ws[k] * s.y;
  }
  return {std::atan2(v.y, v.x), std::hypot(v.x, v.y)};
}

}  // namespace oscopt
