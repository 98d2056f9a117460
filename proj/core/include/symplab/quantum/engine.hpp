#pragma once

#include <memory>
#include <stdexcept>

#include "symplab/quantum/grid.hpp"
#include "symplab/quantum/operator_expr.hpp"
#include "symplab/quantum/scheme.hpp"

namespace symplab {

namespace detail {
class SpectralPlans;
}

class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Applies operator expressions to wave functions on one fixed grid.
/// Derivatives are spectral (periodic DFT, Nyquist mode dropped for odd
/// orders), so the discrete d/dx is real antisymmetric. Immutable after
/// construction; all methods are safe to call concurrently.
class QuantumEngine {
 public:
  explicit QuantumEngine(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }

  /// Not renormalized. Throws GridMismatchError if psi lives elsewhere.
  WaveFunction apply(const OperatorExpr& op, const WaveFunction& psi) const;

  /// <psi| op psi> by uniform-weight quadrature.
  cplx expectation(const OperatorExpr& op, const WaveFunction& psi) const;

  /// <A^2> - <A>^2 for Hermitian A, evaluated as ||A psi||^2 - |<A>|^2.
  double variance(const OperatorExpr& op, const WaveFunction& psi) const;

 private:
  GridSpec grid_;
  std::shared_ptr<const detail::SpectralPlans> plans_;
};

struct CommutatorCheck {
  /// <psi|[A, B] psi> for every pair of fundamental operators.
  CommutatorTable measured{};
  /// max over pairs of ||[A,B]psi - C^{AB} psi|| / ||psi||.
  double max_deviation = 0.0;
  /// False when the boundary precondition fails; the numbers are then a warning only.
  bool localized = true;
  double boundary_max = 0.0;
};

CommutatorCheck commutator_table_check(const QuantumEngine& engine, const QuantizationScheme& s,
                                       const WaveFunction& psi);

/// Delta A(t) * Delta B(t) with the scheme's Heisenberg operators.
double uncertainty_product(const QuantumEngine& engine, const QuantizationScheme& s,
                           ObservablePair pair, const WaveFunction& psi, double t);

struct CommutatorEstimate {
  cplx value;
  bool localized = true;
};

/// <psi| [x(t), x(t2)] psi>.
CommutatorEstimate two_time_commutator(const QuantumEngine& engine, const QuantizationScheme& s,
                                       double t, double t2, const WaveFunction& psi);

}  // namespace symplab
