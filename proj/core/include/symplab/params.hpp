#pragma once

#include <cmath>
#include <stdexcept>

namespace symplab {

/// Physical constants of the isotropic oscillator. Every dimensional
/// quantity in the library is expressed through these three numbers.
struct PhysParams {
  double m = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  void validate() const {
    if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("mass must be positive");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("omega must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be positive");
  }

  /// sqrt(hbar / (m omega)), the oscillator length.
  double reference_length() const { return std::sqrt(hbar / (m * omega)); }

  /// Position spread of the oscillator ground state, sigma^2 = hbar / (2 m omega).
  double ground_width() const { return std::sqrt(hbar / (2.0 * m * omega)); }

  double period() const { return 2.0 * M_PI / omega; }

  friend bool operator==(const PhysParams&, const PhysParams&) = default;
};

}  // namespace symplab
