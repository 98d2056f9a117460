#include "symplab/classical_flow.hpp"

#include <cmath>
#include <stdexcept>

namespace symplab {

Eigen::Matrix4d flow_jacobian(double t, const PhysParams& params) {
  const double c = std::cos(params.omega * t);
  const double s = std::sin(params.omega * t);
  const double mw = params.m * params.omega;
  Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
  // x = x0 c + p_x0 s/(m w);  p_x = -m w x0 s + p_x0 c;  same for (y, p_y).
  for (int q = 0; q < 2; ++q) {
    const int p = q + 2;
    j(q, q) = c;
    j(q, p) = s / mw;
    j(p, q) = -mw * s;
    j(p, p) = c;
  }
  return j;
}

PhaseState exact_flow(const PhaseState& s0, double t, const PhysParams& params) {
  return PhaseState::from(flow_jacobian(t, params) * s0.as_vector());
}

SymplecticCheck verify_symplectic_map(const SymplecticForm<double>& form, const Eigen::Matrix4d& map) {
  Eigen::Matrix4d lower;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) lower(i, k) = form.lower()(i, k);
  const double dev = (map.transpose() * lower * map - lower).cwiseAbs().maxCoeff();
  return {dev <= 1e-12, dev};
}

SymplecticCheck verify_flow_symplectic(const SymplecticForm<double>& form, double t,
                                       const PhysParams& params) {
  return verify_symplectic_map(form, flow_jacobian(t, params));
}

double conserved_along_flow(const Polynomial<double>& f, const PhaseState& s0,
                            std::span<const double> times, const PhysParams& params) {
  if (times.empty()) throw std::invalid_argument("conserved_along_flow needs at least one time");
  const double f0 = f.evaluate(s0.as_array());
  double worst = 0.0;
  for (double t : times) {
    worst = std::max(worst, std::abs(f.evaluate(exact_flow(s0, t, params).as_array()) - f0));
  }
  return worst;
}

std::vector<double> uniform_times(const PhysParams& params, std::size_t count, double periods) {
  std::vector<double> out(count);
  const double span = periods * params.period();
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = count > 1 ? span * static_cast<double>(k) / static_cast<double>(count - 1) : 0.0;
  }
  return out;
}

}  // namespace symplab
