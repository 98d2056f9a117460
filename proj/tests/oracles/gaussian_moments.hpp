#pragma once

// Closed-form moments of an isotropic Gaussian packet
//   psi ~ exp(-|r - c|^2 / (4 sigma^2) + i k.r)
// for real linear combinations a x + b y + c Kx + d Ky, Kx = -i d/dx.
// <x> = c_x, <Kx> = k_x, Var x = sigma^2, Var Kx = 1/(4 sigma^2), and the
// symmetrized x-Kx covariance vanishes; the two axes are independent.
//
// The Heisenberg operators are transcribed by hand, per scheme, from the
// printed closed forms, so this table is independent of the library's
// flow-matrix construction.

#include <array>
#include <cmath>

#include "symplab/params.hpp"

namespace oracle {

struct Packet {
  double cx, cy, kx, ky, sigma;
};

/// Coefficients over (x, y, Kx, Ky).
using Linear = std::array<double, 4>;

inline double mean(const Linear& l, const Packet& p) {
  return l[0] * p.cx + l[1] * p.cy + l[2] * p.kx + l[3] * p.ky;
}

inline double variance(const Linear& l, const Packet& p) {
  const double s2 = p.sigma * p.sigma;
  return (l[0] * l[0] + l[1] * l[1]) * s2 + (l[2] * l[2] + l[3] * l[3]) / (4.0 * s2);
}

/// which: 0 = x, 1 = y, 2 = p_x, 3 = p_y.
inline Linear heisenberg(int scheme, int which, double t, const symplab::PhysParams& prm) {
  const double c = std::cos(prm.omega * t), s = std::sin(prm.omega * t);
  const double mw = prm.m * prm.omega, h = prm.hbar;
  switch (scheme) {
    case 0:
      switch (which) {
        case 0: return {c, 0, h / mw * s, 0};
        case 1: return {0, c, 0, h / mw * s};
        case 2: return {-mw * s, 0, h * c, 0};
        default: return {0, -mw * s, 0, h * c};
      }
    case 1:
      switch (which) {
        case 0: return {c, 0, 0, h / mw * s};
        case 1: return {0, c, h / mw * s, 0};
        case 2: return {-mw * s, 0, 0, h * c};
        default: return {0, -mw * s, h * c, 0};
      }
    case 2:
      switch (which) {
        case 0: return {c, 0, -h / mw * s, 0};
        case 1: return {0, c, 0, h / mw * s};
        case 2: return {-mw * s, 0, -h * c, 0};
        default: return {0, -mw * s, 0, h * c};
      }
    default:
      switch (which) {
        case 0: return {c, s, 0, 0};
        case 1: return {0, 0, -h / mw * c, -h / mw * s};
        case 2: return {-mw * s, mw * c, 0, 0};
        default: return {0, 0, h * s, -h * c};
      }
  }
}

}  // namespace oracle
