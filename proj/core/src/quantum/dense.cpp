#include "symplab/quantum/dense.hpp"

#include <stdexcept>

namespace symplab {

namespace {

Eigen::VectorXcd to_vector(const WaveFunction& psi) {
  const auto v = psi.values();
  return Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

WaveFunction from_vector(const GridSpec& grid, const Eigen::VectorXcd& v) {
  return WaveFunction(grid, std::vector<cplx>(v.data(), v.data() + v.size()));
}

}  // namespace

DenseConjugator::DenseConjugator(const QuantizationScheme& s, const GridSpec& grid)
    : scheme_(s), engine_(grid) {
  if (grid.points > kMaxPoints) {
    throw std::invalid_argument("grid too large for dense conjugation (N <= " + std::to_string(kMaxPoints) + ")");
  }
  const OperatorExpr s_hat = quantize_observable(s, canonical_hamiltonian(s.id, s.params));

  const auto dim = static_cast<Eigen::Index>(grid.size());
  generator_.resize(dim, dim);
  WaveFunction unit(grid);
  for (Eigen::Index j = 0; j < dim; ++j) {
    unit.values()[j] = 1.0;
    generator_.col(j) = to_vector(engine_.apply(s_hat, unit));
    unit.values()[j] = 0.0;
  }
  const Eigen::MatrixXcd hermitian = 0.5 * (generator_ + generator_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  eigenvectors_ = solver.eigenvectors();
  eigenvalues_ = solver.eigenvalues();
}

WaveFunction DenseConjugator::propagate(const WaveFunction& psi, double t) const {
  Eigen::VectorXcd c = eigenvectors_.adjoint() * to_vector(psi);
  const double hbar = scheme_.params.hbar;
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::polar(1.0, -eigenvalues_(k) * t / hbar);
  return from_vector(engine_.grid(), eigenvectors_ * c);
}

WaveFunction DenseConjugator::evolve(const WaveFunction& psi, double t) const { return propagate(psi, t); }

WaveFunction DenseConjugator::conjugated_action(Observable which, double t, const WaveFunction& psi) const {
  const WaveFunction forward = propagate(psi, t);
  const WaveFunction acted = engine_.apply(scheme_.fundamental(which), forward);
  return propagate(acted, -t);
}

double DenseConjugator::deviation(Observable which, double t, const WaveFunction& psi) const {
  const WaveFunction direct = engine_.apply(heisenberg_operator(scheme_, which, t), psi);
  const WaveFunction diff = conjugated_action(which, t, psi) - direct;
  const double denom = direct.norm();
  return diff.norm() / (denom > 0.0 ? denom : psi.norm());
}

GaussianPacket conjugation_probe_packet(const PhysParams& params) {
  const double ref = params.reference_length();
  return {-0.3 * ref, -0.2 * ref, 0.3 / ref, 0.2 / ref, params.ground_width()};
}

double unitary_conjugation_check(const QuantizationScheme& s, Observable which, double t,
                                 const GridSpec& small_grid) {
  DenseConjugator conj(s, small_grid);
  const WaveFunction psi = conjugation_probe_packet(s.params).sample(small_grid);
  return conj.deviation(which, t, psi);
}

}  // namespace symplab
