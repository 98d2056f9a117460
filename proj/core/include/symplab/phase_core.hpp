#pragma once

// Phase-space algebra on R^4 with coordinates (x, y, p_x, p_y): constant
// symplectic forms, Poisson brackets, Hamiltonian vector fields and the
// four bracket/Hamiltonian pairs of the 2-D isotropic oscillator.

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

#include "symplab/params.hpp"
#include "symplab/polynomial.hpp"

namespace symplab {

namespace detail {

// Zero test used by validation: exact for exact fields, relative 1e-12 for doubles.
template <class T>
bool negligible(const T& v, double scale) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::abs(v) <= 1e-12 * std::max(1.0, scale);
  } else {
    return ScalarTraits<T>::is_zero(v);
  }
}

template <class T>
std::optional<Matrix4<T>> invert(const Matrix4<T>& m) {
  if constexpr (std::is_floating_point_v<T>) {
    Eigen::Matrix4d e;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) e(i, j) = m(i, j);
    Eigen::FullPivLU<Eigen::Matrix4d> lu(e);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) return std::nullopt;
    const Eigen::Matrix4d inv = lu.inverse();
    Matrix4<T> out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out(i, j) = inv(i, j);
    return out;
  } else {
    // Gauss-Jordan with first-nonzero pivoting; exact over the field.
    Matrix4<T> a = m;
    Matrix4<T> inv = Matrix4<T>::identity();
    for (int col = 0; col < 4; ++col) {
      int pivot = -1;
      for (int r = col; r < 4; ++r) {
        if (!ScalarTraits<T>::is_zero(a(r, col))) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return std::nullopt;
      std::swap(a.a[col], a.a[pivot]);
      std::swap(inv.a[col], inv.a[pivot]);
      const T p = a(col, col);
      for (int j = 0; j < 4; ++j) {
        a(col, j) = a(col, j) / p;
        inv(col, j) = inv(col, j) / p;
      }
      for (int r = 0; r < 4; ++r) {
        if (r == col || ScalarTraits<T>::is_zero(a(r, col))) continue;
        const T f = a(r, col);
        for (int j = 0; j < 4; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }
}

}  // namespace detail

/// Outcome of validate_form.
struct FormValidation {
  enum class Status { Ok, NotAntisymmetric, Degenerate, JacobiViolated };
  Status status = Status::Ok;
  std::string reason;

  bool ok() const { return status == Status::Ok; }
};

inline const char* to_string(FormValidation::Status s) {
  switch (s) {
    case FormValidation::Status::Ok: return "ok";
    case FormValidation::Status::NotAntisymmetric: return "not antisymmetric";
    case FormValidation::Status::Degenerate: return "degenerate";
    case FormValidation::Status::JacobiViolated: return "Jacobi violated";
  }
  return "unknown";
}

class InvalidFormError : public std::invalid_argument {
 public:
  explicit InvalidFormError(FormValidation v)
      : std::invalid_argument(std::string("invalid symplectic form: ") + to_string(v.status) +
                              (v.reason.empty() ? "" : " (" + v.reason + ")")),
        validation_(std::move(v)) {}
  const FormValidation& validation() const { return validation_; }

 private:
  FormValidation validation_;
};

/// {f, g} = df/dx^mu  upper^{mu nu}  dg/dx^nu.
template <class T>
Polynomial<T> poisson_bracket(const Polynomial<T>& f, const Polynomial<T>& g,
                              const Matrix4<T>& upper) {
  std::array<Polynomial<T>, 4> df, dg;
  for (int k = 0; k < 4; ++k) {
    df[k] = f.derivative(static_cast<Coord>(k));
    dg[k] = g.derivative(static_cast<Coord>(k));
  }
  Polynomial<T> out;
  for (int mu = 0; mu < 4; ++mu) {
    if (df[mu].is_zero()) continue;
    for (int nu = 0; nu < 4; ++nu) {
      if (ScalarTraits<T>::is_zero(upper(mu, nu)) || dg[nu].is_zero()) continue;
      out += (df[mu] * dg[nu]) * upper(mu, nu);
    }
  }
  return out;
}

template <class T>
FormValidation validate_form(const Matrix4<T>& candidate) {
  const double scale = candidate.max_abs();
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      if (!detail::negligible<T>(candidate(i, j) + candidate(j, i), scale)) {
        return {FormValidation::Status::NotAntisymmetric,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ")"};
      }
    }
  }
  if (!detail::invert(candidate)) {
    return {FormValidation::Status::Degenerate, "matrix has no inverse"};
  }
  // {{x^a, x^b}, x^c} + cyclic on every coordinate triple. Constant forms
  // pass trivially; the check still runs through the bracket code.
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        const auto xa = Polynomial<T>::variable(static_cast<Coord>(a));
        const auto xb = Polynomial<T>::variable(static_cast<Coord>(b));
        const auto xc = Polynomial<T>::variable(static_cast<Coord>(c));
        const auto jac = poisson_bracket(poisson_bracket(xa, xb, candidate), xc, candidate) +
                         poisson_bracket(poisson_bracket(xb, xc, candidate), xa, candidate) +
                         poisson_bracket(poisson_bracket(xc, xa, candidate), xb, candidate);
        bool violated = false;
        if constexpr (std::is_floating_point_v<T>) {
          violated = jac.max_abs_coefficient() > 1e-12 * std::max(1.0, scale * scale);
        } else {
          violated = !jac.is_zero();
        }
        if (violated) {
          return {FormValidation::Status::JacobiViolated,
                  "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")"};
        }
      }
    }
  }
  return {};
}

/// Constant symplectic form: bracket matrix omega^{mu nu} ("upper") and its
/// inverse omega_{mu nu} ("lower").
template <class T>
class SymplecticForm {
 public:
  /// Throws InvalidFormError if `upper` is not antisymmetric and invertible.
  static SymplecticForm from_upper(const Matrix4<T>& upper) {
    FormValidation v = validate_form(upper);
    if (!v.ok()) throw InvalidFormError(std::move(v));
    return SymplecticForm(upper, *detail::invert(upper));
  }

  static SymplecticForm from_lower(const Matrix4<T>& lower) {
    FormValidation v = validate_form(lower);
    if (!v.ok()) throw InvalidFormError(std::move(v));
    return SymplecticForm(*detail::invert(lower), lower);
  }

  const Matrix4<T>& upper() const { return upper_; }
  const Matrix4<T>& lower() const { return lower_; }

  friend bool operator==(const SymplecticForm&, const SymplecticForm&) = default;

 private:
  SymplecticForm(Matrix4<T> upper, Matrix4<T> lower)
      : upper_(std::move(upper)), lower_(std::move(lower)) {}

  Matrix4<T> upper_;
  Matrix4<T> lower_;
};

template <class T>
Polynomial<T> poisson_bracket(const Polynomial<T>& f, const Polynomial<T>& g,
                              const SymplecticForm<T>& form) {
  return poisson_bracket(f, g, form.upper());
}

/// Component mu is omega^{mu nu} dH/dx^nu.
template <class T>
PolyVector<T> hamiltonian_vector_field(const SymplecticForm<T>& form, const Polynomial<T>& h) {
  PolyVector<T> out;
  for (int nu = 0; nu < 4; ++nu) {
    const auto dh = h.derivative(static_cast<Coord>(nu));
    if (dh.is_zero()) continue;
    for (int mu = 0; mu < 4; ++mu) {
      if (!ScalarTraits<T>::is_zero(form.upper()(mu, nu))) out[mu] += dh * form.upper()(mu, nu);
    }
  }
  return out;
}

/// x-dot^mu = A^mu_nu x^nu.
template <class T>
struct LinearVectorField {
  Matrix4<T> matrix = Matrix4<T>::zero();

  PolyVector<T> components() const {
    PolyVector<T> out;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        if (!ScalarTraits<T>::is_zero(matrix(mu, nu)))
          out[mu] += Polynomial<T>::variable(static_cast<Coord>(nu)) * matrix(mu, nu);
    return out;
  }
};

/// df/dt along the field: sum_mu df/dx^mu (A x)^mu.
template <class T>
Polynomial<T> lie_derivative(const Polynomial<T>& f, const LinearVectorField<T>& field) {
  const auto rhs = field.components();
  Polynomial<T> out;
  for (int mu = 0; mu < 4; ++mu) {
    if (rhs[mu].is_zero()) continue;
    out += f.derivative(static_cast<Coord>(mu)) * rhs[mu];
  }
  return out;
}

/// Exact check; no bracket or Hamiltonian is needed, only the field.
template <class T>
bool is_constant_of_motion(const Polynomial<T>& f, const LinearVectorField<T>& field) {
  return lie_derivative(f, field).is_zero();
}

template <class T>
PolyVector<T> operator-(const PolyVector<T>& a, const PolyVector<T>& b) {
  PolyVector<T> out;
  for (int k = 0; k < 4; ++k) out[k] = a[k] - b[k];
  return out;
}

template <class T>
bool is_zero(const PolyVector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& p) { return p.is_zero(); });
}

template <class T>
double max_abs_coefficient(const PolyVector<T>& v) {
  double best = 0.0;
  for (const auto& p : v) best = std::max(best, p.max_abs_coefficient());
  return best;
}

// ---------------------------------------------------------------------------
// The isotropic oscillator and its four (form, Hamiltonian) pairs.

/// x' = p_x/m, y' = p_y/m, p_x' = -m w^2 x, p_y' = -m w^2 y.
template <class T>
LinearVectorField<T> oscillator_field(const T& m, const T& omega) {
  LinearVectorField<T> f;
  f.matrix(0, 2) = T(1) / m;
  f.matrix(1, 3) = T(1) / m;
  f.matrix(2, 0) = -(m * omega * omega);
  f.matrix(3, 1) = -(m * omega * omega);
  return f;
}

/// Bracket matrix omega_mu^{ab} for mu in {0,1,2,3}.
template <class T>
Matrix4<T> canonical_upper(int mu, const T& m, const T& omega) {
  Matrix4<T> w = Matrix4<T>::zero();
  auto set = [&w](int i, int j, const T& v) {
    w(i, j) = v;
    w(j, i) = -v;
  };
  switch (mu) {
    case 0:  // {x, p_x} = 1, {y, p_y} = 1
      set(0, 2, T(1));
      set(1, 3, T(1));
      break;
    case 1:  // {x, p_y} = 1, {y, p_x} = 1
      set(0, 3, T(1));
      set(1, 2, T(1));
      break;
    case 2:  // {x, p_x} = -1, {y, p_y} = 1
      set(0, 2, T(-1));
      set(1, 3, T(1));
      break;
    case 3:  // {x, y} = -1/(m w), {p_x, p_y} = -m w
      set(0, 1, -(T(1) / (m * omega)));
      set(2, 3, -(m * omega));
      break;
    default:
      throw std::out_of_range("form index must be 0..3");
  }
  return w;
}

template <class T>
SymplecticForm<T> canonical_form(int mu, const T& m, const T& omega) {
  return SymplecticForm<T>::from_upper(canonical_upper(mu, m, omega));
}

/// The Hamiltonians S_0 .. S_3.
template <class T>
Polynomial<T> canonical_hamiltonian(int mu, const T& m, const T& omega) {
  using P = Polynomial<T>;
  const P x = P::variable(Coord::X), y = P::variable(Coord::Y);
  const P px = P::variable(Coord::PX), py = P::variable(Coord::PY);
  const T half = T(1) / T(2);
  const T inv_m = T(1) / m;
  const T mw2 = m * omega * omega;
  switch (mu) {
    case 0: return half * (px * px * inv_m + x * x * mw2 + py * py * inv_m + y * y * mw2);
    case 1: return px * py * inv_m + x * y * mw2;
    case 2: return (py * py - px * px) * (half * inv_m) + (y * y - x * x) * (half * mw2);
    case 3: return (x * py - y * px) * omega;
    default: throw std::out_of_range("Hamiltonian index must be 0..3");
  }
}

/// Numeric instantiations at concrete parameter values.
inline SymplecticForm<double> canonical_form(int mu, const PhysParams& p) {
  return canonical_form<double>(mu, p.m, p.omega);
}
inline Polynomial<double> canonical_hamiltonian(int mu, const PhysParams& p) {
  return canonical_hamiltonian<double>(mu, p.m, p.omega);
}
inline LinearVectorField<double> oscillator_field(const PhysParams& p) {
  return oscillator_field<double>(p.m, p.omega);
}

/// Symbolic (m, omega) evaluated at concrete parameters.
inline Polynomial<double> evaluate(const Polynomial<ParamPoly>& p, const PhysParams& params) {
  return p.map_coefficients([&](const ParamPoly& c) { return c.evaluate(params); });
}

}  // namespace symplab
