#pragma once

// Hand-rolled random generators for property tests. Fixed seeds keep runs
// reproducible.

#include <random>

#include "oracles/brute_force.hpp"
#include "symplab/phase_core.hpp"
#include "symplab/quantum/grid.hpp"

namespace gen {

using symplab::Polynomial;
using symplab::Rational;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// p/q with |p| <= 5, 1 <= q <= 4.
  Rational rational() { return Rational(integer(-5, 5), integer(1, 4)); }

  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (r == 0);
    return r;
  }

  /// Up to `max_terms` monomials of total degree <= `max_degree`.
  Polynomial<Rational> polynomial(int max_degree = 3, int max_terms = 6) {
    Polynomial<Rational> p;
    const int n = integer(0, max_terms);
    for (int t = 0; t < n; ++t) {
      symplab::Exponents e{0, 0, 0, 0};
      const int deg = integer(0, max_degree);
      for (int k = 0; k < deg; ++k) ++e[integer(0, 3)];
      p.add_term(e, rational());
    }
    return p;
  }

  /// Random invertible antisymmetric rational matrix.
  symplab::Matrix4<Rational> form_upper() {
    for (;;) {
      auto m = symplab::Matrix4<Rational>::zero();
      for (const auto& [i, j] : oracle::kSlots) {
        const Rational v = rational();
        m(i, j) = v;
        m(j, i) = -v;
      }
      if (oracle::determinant(m.a) != 0) return m;
    }
  }

  symplab::GaussianPacket packet(const symplab::PhysParams& p) {
    const double ref = p.reference_length();
    // Kept inside the default grid's localization envelope.
    return {real(-0.5, 0.5) * ref, real(-0.5, 0.5) * ref, real(-1.0, 1.0) / ref,
            real(-1.0, 1.0) / ref, real(0.5, 0.75) * ref};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
