#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "symplab/phase_core.hpp"

namespace symplab {

struct PhaseState {
  double x = 0.0;
  double y = 0.0;
  double px = 0.0;
  double py = 0.0;

  std::array<double, 4> as_array() const { return {x, y, px, py}; }
  Eigen::Vector4d as_vector() const { return {x, y, px, py}; }
  static PhaseState from(const Eigen::Vector4d& v) { return {v(0), v(1), v(2), v(3)}; }

  friend bool operator==(const PhaseState&, const PhaseState&) = default;
};

/// Closed-form oscillator solution: a rotation in each (q, p/(m w)) plane.
PhaseState exact_flow(const PhaseState& s0, double t, const PhysParams& params);

/// J(t) with exact_flow(s, t) = J(t) s.
Eigen::Matrix4d flow_jacobian(double t, const PhysParams& params);

struct SymplecticCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

/// max |J^T lower J - lower| <= 1e-12 for an arbitrary linear map J.
SymplecticCheck verify_symplectic_map(const SymplecticForm<double>& form, const Eigen::Matrix4d& map);

/// The pullback of the form by the time-t flow has the same constant coefficients.
SymplecticCheck verify_flow_symplectic(const SymplecticForm<double>& form, double t,
                                       const PhysParams& params);

/// max_t |f(exact_flow(s0, t)) - f(s0)|. Throws if `times` is empty.
double conserved_along_flow(const Polynomial<double>& f, const PhaseState& s0,
                            std::span<const double> times, const PhysParams& params);

/// `count` uniform samples on [0, span]; defaults to 100 points over two periods.
std::vector<double> uniform_times(const PhysParams& params, std::size_t count = 100,
                                  double periods = 2.0);

}  // namespace symplab
