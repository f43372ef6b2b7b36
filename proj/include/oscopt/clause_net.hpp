#pragma once
// Clause-node weight families and their certification.
//
// A clause node r of a length-k clause receives W_l from each of its literals
// and is tied to three sources F, T, B (or to one merged bias source).  The
// intended truth table -- r settles to F when all k literals are False and to
// B otherwise -- holds iff, with m literals True:
//
//   m = 0:      k*W_l + W_F  <  k*W_l + W_T,  0.5*(3-k)*W_l + W_B   (F wins)
//   m >= 1:     projections onto B beat both F and T                (B wins)
//
// which reduces to the closed interval system
//
//   W_F + k*W_l  <  W_B  <  min( W_F + (k-1)*W_l , W_T + k*W_l ),   W_l < 0.
//
// certify_for_length picks W_B(k) at the interval midpoint so the argmin is
// strict for every m.

#include <stdexcept>

#include "oscopt/spin.hpp"

namespace oscopt {

struct ClauseWeights {
  double w_l = -1.0;     // literal -> clause node
  double w_r = 0.5;      // clause node -> literal (feedback)
  double w_false = 1.0;  // clause node <-> F source
  double w_true = 6.0;   // clause node <-> T source
  double w_blue = -1.0;  // clause node <-> B source

  /// Checks the base admissibility constraints (stated for k = 3):
  /// w_l < 0 < w_r, w_r < |w_l|, and w_false + 3 w_l < w_blue < w_false
  /// with w_blue < w_true + 3 w_l.
  void validate() const;

  ClauseWeights scaled(double factor) const;
};

inline ClauseWeights default_clause_weights() { return {}; }

/// Source weights certified for one clause length; w_l carries over unchanged.
struct CertifiedClauseWeights {
  int length = 0;
  double w_l = 0.0;
  double w_false = 0.0;
  double w_true = 0.0;
  double w_blue = 0.0;
};

/// Derives w_blue for clauses of length k from the exact truth-table interval;
/// throws std::domain_error when the interval is empty.
CertifiedClauseWeights certify_for_length(const ClauseWeights& w, int k);

/// A single clamped oscillator equivalent to the three sources F, T, B with
/// the given weights: couple with weight `magnitude` to a node clamped at
/// `angle`.  Exact: magnitude * (cos angle, sin angle) equals the merged
/// source vector w_false*s_F + w_true*s_T + w_blue*s_B.
struct BiasedSource {
  double angle = 0.0;
  double magnitude = 0.0;
};

BiasedSource merge_sources(double w_false, double w_true, double w_blue);
inline BiasedSource merge_sources(const CertifiedClauseWeights& w) {
  return merge_sources(w.w_false, w.w_true, w.w_blue);
}

}  // namespace oscopt
