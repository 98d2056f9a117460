#pragma once

// The four quantum theories obtained from Dirac's rule [f, g] = i hbar {f, g}
// applied to each oscillator bracket, with their coordinate representations
// on L^2(R^2, dx dy).

#include <array>
#include <optional>
#include <string_view>

#include "symplab/phase_core.hpp"
#include "symplab/quantum/operator_expr.hpp"

namespace symplab {

/// Fundamental observables, in phase-space coordinate order.
enum class Observable : int { X = 0, Y = 1, PX = 2, PY = 3 };

inline constexpr std::array<Observable, 4> kAllObservables{Observable::X, Observable::Y, Observable::PX,
                                                           Observable::PY};

const char* to_string(Observable o);
std::optional<Observable> parse_observable(std::string_view name);

using CommutatorTable = std::array<std::array<cplx, 4>, 4>;

struct QuantizationScheme {
  int id = 0;
  PhysParams params;
  /// C^{ab} = i hbar omega^{ab}: the algebra the representation must realize.
  CommutatorTable commutators{};
  /// Operators for x0, y0, p_x0, p_y0.
  std::array<OperatorExpr, 4> assignment;

  const OperatorExpr& fundamental(Observable o) const { return assignment[static_cast<int>(o)]; }
};

inline constexpr int kSchemeCount = 4;

/// Throws std::out_of_range for id outside 0..3.
QuantizationScheme make_scheme(int id, const PhysParams& params);

/// O(t) = sum_nu J(t)_{which,nu} O_nu(0), J the classical flow matrix.
OperatorExpr heisenberg_operator(const QuantizationScheme& s, Observable which, double t);

struct ObservablePair {
  Observable first;
  Observable second;
  friend bool operator==(const ObservablePair&, const ObservablePair&) = default;
};

/// The two non-commuting pairs whose uncertainty product is bounded in scheme `id`.
std::array<ObservablePair, 2> canonical_pairs(int id);

/// Robertson bound |<[A(t), B(t)]>| / 2. The commutator of two Heisenberg
/// operators is a c-number here, so the bound is state independent.
double uncertainty_bound(const QuantizationScheme& s, ObservablePair pair, double t);

/// <x, y | p_x, p_y> for schemes 0..2. Scheme 3 has no common momentum
/// basis and throws std::domain_error.
cplx kernel_overlap(const QuantizationScheme& s, double x, double y, double px, double py);

struct QuantizeStats {
  int symmetrized_terms = 0;
};

/// Substitutes the fundamental operators into a polynomial of degree <= 2.
/// Products of non-commuting factors are symmetrized, (AB + BA)/2.
/// Throws std::invalid_argument for higher degree.
OperatorExpr quantize_observable(const QuantizationScheme& s, const Polynomial<double>& f,
                                 QuantizeStats* stats = nullptr);

}  // namespace symplab
