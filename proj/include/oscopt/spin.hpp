#pragma once
// Three-state Potts spins and their planar embedding.
//
// Labels F, T, B sit at phases 0, 2pi/3, 4pi/3 on the unit circle.  Any two
// distinct labels have dot product -1/2; equal labels have dot product 1.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oscopt {

enum class SpinLabel : std::uint8_t { F = 0, T = 1, B = 2 };

inline constexpr int kNumLabels = 3;
inline constexpr std::array<SpinLabel, 3> kAllLabels{SpinLabel::F, SpinLabel::T,
                                                     SpinLabel::B};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Phase bin of a label: F -> 0, T -> 2pi/3, B -> 4pi/3.
inline double spin_phase(SpinLabel s) {
  return 2.0 * std::numbers::pi * static_cast<int>(s) / 3.0;
}

/// Unit vector of a label; components are exact up to one sqrt rounding.
inline Vec2 spin_vec(SpinLabel s) {
  static const double h = std::sqrt(3.0) / 2.0;
  switch (s) {
    case SpinLabel::F: return {1.0, 0.0};
    case SpinLabel::T: return {-0.5, h};
    case SpinLabel::B: return {-0.5, -h};
  }
  throw std::logic_error("invalid spin label");
}

/// Exact dot-product table: 1 on the diagonal, -1/2 elsewhere.
inline double spin_dot(SpinLabel a, SpinLabel b) {
  return a == b ? 1.0 : -0.5;
}

inline char label_char(SpinLabel s) {
  switch (s) {
    case SpinLabel::F: return 'F';
    case SpinLabel::T: return 'T';
    case SpinLabel::B: return 'B';
  }
  return '?';
}

inline SpinLabel label_from_char(char c) {
  switch (c) {
    case 'F': return SpinLabel::F;
    case 'T': return SpinLabel::T;
    case 'B': return SpinLabel::B;
  }
  throw std::invalid_argument(std::string("unknown spin label '") + c + "'");
}

}  // namespace oscopt
