#pragma once

// Fixed-step kick-drift-kick integrator for H = p^2/(2m) + m w^2 q^2 / 2 with
// the canonical bracket. Test oracle only.

#include <array>
#include <cmath>

#include "symplab/params.hpp"

namespace oracle {

inline std::array<double, 4> leapfrog(std::array<double, 4> s, double t, double dt,
                                      const symplab::PhysParams& p) {
  const long steps = std::lround(std::abs(t) / dt);
  const double h = steps > 0 ? t / static_cast<double>(steps) : 0.0;
  const double k = p.m * p.omega * p.omega;
  for (long n = 0; n < steps; ++n) {
    s[2] -= 0.5 * h * k * s[0];
    s[3] -= 0.5 * h * k * s[1];
    s[0] += h * s[2] / p.m;
    s[1] += h * s[3] / p.m;
    s[2] -= 0.5 * h * k * s[0];
    s[3] -= 0.5 * h * k * s[1];
  }
  return s;
}

}  // namespace oracle
