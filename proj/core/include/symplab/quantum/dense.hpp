#pragma once

// The one dense-matrix path: materializes the quantized Hamiltonian S_mu on a
// small grid, diagonalizes it once, and checks
//   e^{i S t/hbar} O(0) e^{-i S t/hbar} psi  ==  O(t) psi
// against the closed-form Heisenberg operators.

#include <Eigen/Dense>

#include "symplab/quantum/engine.hpp"

namespace symplab {

class DenseConjugator {
 public:
  /// Largest points-per-axis accepted; the matrix is N^2 x N^2.
  static constexpr int kMaxPoints = 48;

  /// Throws std::invalid_argument if grid.points > kMaxPoints.
  DenseConjugator(const QuantizationScheme& s, const GridSpec& grid);

  const QuantumEngine& engine() const { return engine_; }
  const QuantizationScheme& scheme() const { return scheme_; }

  /// Dense generator matrix before Hermitian symmetrization.
  const Eigen::MatrixXcd& generator() const { return generator_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

  /// e^{-i S t / hbar} psi.
  WaveFunction evolve(const WaveFunction& psi, double t) const;

  /// e^{i S t/hbar} O(0) e^{-i S t/hbar} psi.
  WaveFunction conjugated_action(Observable which, double t, const WaveFunction& psi) const;

  /// || conjugated - O(t) psi || / || O(t) psi ||.
  double deviation(Observable which, double t, const WaveFunction& psi) const;

 private:
  WaveFunction propagate(const WaveFunction& psi, double t) const;

  QuantizationScheme scheme_;
  QuantumEngine engine_;
  Eigen::MatrixXcd generator_;
  Eigen::MatrixXcd eigenvectors_;
  Eigen::VectorXd eigenvalues_;
};

/// Displaced, boosted ground-width packet; localized on the default small grid.
GaussianPacket conjugation_probe_packet(const PhysParams& params);

/// Builds a DenseConjugator on `small_grid` and returns the deviation on
/// conjugation_probe_packet.
double unitary_conjugation_check(const QuantizationScheme& s, Observable which, double t,
                                 const GridSpec& small_grid);

}  // namespace symplab
