#pragma once

// Enumerates the constant symplectic forms and quadratic Hamiltonians that
// reproduce a given linear vector field.
//
// With H = 1/2 x^T S x and lower form theta = omega^{-1}, the requirement
// omega grad H = A x is S = theta A. S must be symmetric, which for
// antisymmetric theta reads theta A + A^T theta = 0: a linear condition on
// the six independent entries of theta.

#include <span>
#include <stdexcept>
#include <vector>

#include "symplab/phase_core.hpp"

namespace symplab {

/// Basis of the antisymmetric theta with theta A + A^T theta = 0.
struct InverseFormBasis {
  std::vector<Matrix4<double>> basis;

  std::size_t dimension() const { return basis.size(); }

  /// Max-entry distance from `theta` to the span of the basis.
  double distance(const Matrix4<double>& theta) const;

  /// sum_k coeffs[k] * basis[k]
  Matrix4<double> combine(std::span<const double> coeffs) const;
};

/// The six strictly-upper entries (i < j) used to parametrize antisymmetric 4x4 matrices.
inline constexpr std::array<std::pair<int, int>, 6> kAntisymmetricSlots{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

Matrix4<double> antisymmetric_from_params(std::span<const double, 6> params);

/// Null space of theta -> theta A + A^T theta over antisymmetric theta,
/// via SVD with a singular-value cutoff of 1e-10 relative to the largest.
InverseFormBasis admissible_inverse_forms(const LinearVectorField<double>& field);

class PairConstructionError : public std::invalid_argument {
 public:
  enum class Kind { AsymmetricProduct, DegenerateForm };
  PairConstructionError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

template <class T>
struct HamiltonianPair {
  SymplecticForm<T> form;
  Polynomial<T> hamiltonian;

  /// Drops the additive constant of `h`, which never affects the dynamics.
  static HamiltonianPair canonical(SymplecticForm<T> form, Polynomial<T> h) {
    h.add_term({0, 0, 0, 0}, -h.coefficient({0, 0, 0, 0}));
    return {std::move(form), std::move(h)};
  }
};

/// H = 1/2 x^T (theta A) x. Requires theta A symmetric (exactly, or to
/// 1e-12 relative for doubles) and theta invertible.
template <class T>
Polynomial<T> hamiltonian_from_form(const Matrix4<T>& theta, const LinearVectorField<T>& field) {
  const Matrix4<T> hessian = theta * field.matrix;
  const double scale = hessian.max_abs();
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!detail::negligible<T>(hessian(i, j) - hessian(j, i), scale)) {
        throw PairConstructionError(PairConstructionError::Kind::AsymmetricProduct,
                                    "asymmetric product: theta*A is not symmetric");
      }
    }
  }
  if (!detail::invert(theta)) {
    throw PairConstructionError(PairConstructionError::Kind::DegenerateForm,
                                "degenerate form: theta has no inverse");
  }
  Polynomial<T> h;
  const T half = T(1) / T(2);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      Exponents e{0, 0, 0, 0};
      e[i] += 1;
      e[j] += 1;
      // Symmetrized Hessian; off-diagonal pairs contribute twice.
      const T c = i == j ? T(half * hessian(i, i)) : T(half * (hessian(i, j) + hessian(j, i)));
      h.add_term(e, c);
    }
  }
  return h;
}

template <class T>
HamiltonianPair<T> complete_pair(const Matrix4<T>& theta, const LinearVectorField<T>& field) {
  Polynomial<T> h = hamiltonian_from_form(theta, field);
  return HamiltonianPair<T>::canonical(SymplecticForm<T>::from_lower(theta), std::move(h));
}

/// X_H - field, componentwise. Zero certifies the pair.
template <class T>
PolyVector<T> verify_pair(const HamiltonianPair<T>& pair, const LinearVectorField<T>& field) {
  return hamiltonian_vector_field(pair.form, pair.hamiltonian) - field.components();
}

template <class T>
HamiltonianPair<T> canonical_pair(int mu, const T& m, const T& omega) {
  return {canonical_form<T>(mu, m, omega), canonical_hamiltonian<T>(mu, m, omega)};
}

/// Pairs completed from each basis element; non-invertible elements are
/// reported separately.
struct AdmissiblePairs {
  std::vector<HamiltonianPair<double>> pairs;
  std::vector<Matrix4<double>> degenerate;
};

AdmissiblePairs pairs_from_basis(const InverseFormBasis& basis,
                                 const LinearVectorField<double>& field);

enum class Boundedness { BoundedBelow, BoundedAbove, Unbounded };

const char* to_string(Boundedness b);

/// Classifies a quadratic Hamiltonian by the definiteness of its Hessian.
/// Throws std::invalid_argument for degree > 2.
Boundedness classify_boundedness(const Polynomial<double>& h);

}  // namespace symplab
