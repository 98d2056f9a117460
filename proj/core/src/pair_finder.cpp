#include "symplab/pair_finder.hpp"

#include <Eigen/Dense>

namespace symplab {

namespace {

constexpr double kRelativeSingularCutoff = 1e-10;

Eigen::Matrix<double, 6, 1> params_of(const Matrix4<double>& theta) {
  Eigen::Matrix<double, 6, 1> p;
  for (int k = 0; k < 6; ++k) p(k) = theta(kAntisymmetricSlots[k].first, kAntisymmetricSlots[k].second);
  return p;
}

Matrix4<double> matrix_of(const Eigen::Matrix<double, 6, 1>& p) {
  std::array<double, 6> buf{};
  for (int k = 0; k < 6; ++k) buf[k] = p(k);
  return antisymmetric_from_params(buf);
}

}  // namespace

Matrix4<double> antisymmetric_from_params(std::span<const double, 6> params) {
  Matrix4<double> t = Matrix4<double>::zero();
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kAntisymmetricSlots[k];
    t(i, j) = params[k];
    t(j, i) = -params[k];
  }
  return t;
}

double InverseFormBasis::distance(const Matrix4<double>& theta) const {
  const auto p = params_of(theta);
  Eigen::Matrix<double, 6, 1> proj = Eigen::Matrix<double, 6, 1>::Zero();
  for (const auto& b : basis) {
    const auto q = params_of(b);
    proj += q * (q.dot(p) / q.squaredNorm());
  }
  // Antisymmetric part off the slots must vanish too.
  double off = 0.0;
  for (int i = 0; i < 4; ++i) {
    off = std::max(off, std::abs(theta(i, i)));
    for (int j = i + 1; j < 4; ++j) off = std::max(off, std::abs(theta(i, j) + theta(j, i)));
  }
  return std::max(off, (p - proj).cwiseAbs().maxCoeff());
}

Matrix4<double> InverseFormBasis::combine(std::span<const double> coeffs) const {
  if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient count must match basis dimension");
  Matrix4<double> out = Matrix4<double>::zero();
  for (std::size_t k = 0; k < basis.size(); ++k) out = out + coeffs[k] * basis[k];
  return out;
}

InverseFormBasis admissible_inverse_forms(const LinearVectorField<double>& field) {
  Eigen::Matrix4d a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = field.matrix(i, j);

  // Column k holds the 16 entries of E_k A + A^T E_k for the k-th antisymmetric unit.
  Eigen::Matrix<double, 16, 6> system;
  for (int k = 0; k < 6; ++k) {
    Eigen::Matrix4d e = Eigen::Matrix4d::Zero();
    const auto [i, j] = kAntisymmetricSlots[k];
    e(i, j) = 1.0;
    e(j, i) = -1.0;
    const Eigen::Matrix4d image = e * a + a.transpose() * e;
    system.col(k) = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(image.data());
  }

  Eigen::JacobiSVD<Eigen::Matrix<double, 16, 6>> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = kRelativeSingularCutoff * largest;

  InverseFormBasis out;
  const auto& v = svd.matrixV();
  for (int k = 0; k < 6; ++k) {
    // A zero system (A = 0) has every direction in its null space.
    if (largest == 0.0 || sv(k) <= cutoff) {
      Eigen::Matrix<double, 6, 1> col = v.col(k);
      // Fix the sign so the result is reproducible.
      Eigen::Index idx;
      col.cwiseAbs().maxCoeff(&idx);
      if (col(idx) < 0) col = -col;
      out.basis.push_back(matrix_of(col));
    }
  }
  return out;
}

AdmissiblePairs pairs_from_basis(const InverseFormBasis& basis, const LinearVectorField<double>& field) {
  AdmissiblePairs out;
  for (const auto& theta : basis.basis) {
    try {
      out.pairs.push_back(complete_pair(theta, field));
    } catch (const PairConstructionError& e) {
      if (e.kind() != PairConstructionError::Kind::DegenerateForm) throw;
      out.degenerate.push_back(theta);
    } catch (const InvalidFormError&) {
      out.degenerate.push_back(theta);
    }
  }
  return out;
}

const char* to_string(Boundedness b) {
  switch (b) {
    case Boundedness::BoundedBelow: return "bounded below";
    case Boundedness::BoundedAbove: return "bounded above";
    case Boundedness::Unbounded: return "unbounded";
  }
  return "unknown";
}

Boundedness classify_boundedness(const Polynomial<double>& h) {
  if (h.degree() > 2) throw std::invalid_argument("boundedness classifier needs degree <= 2");
  Eigen::Matrix4d hess = Eigen::Matrix4d::Zero();
  bool has_linear = false;
  for (const auto& [e, c] : h.terms()) {
    const int deg = e[0] + e[1] + e[2] + e[3];
    if (deg == 1) has_linear = true;
    if (deg != 2) continue;
    int first = -1, second = -1;
    for (int k = 0; k < 4; ++k) {
      for (int r = 0; r < e[k]; ++r) (first < 0 ? first : second) = k;
    }
    if (first == second) {
      hess(first, first) += 2.0 * c;
    } else {
      hess(first, second) += c;
      hess(second, first) += c;
    }
  }
  const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(hess).eigenvalues();
  const double tol = 1e-12 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  const double lo = ev.minCoeff(), hi = ev.maxCoeff();
  if (lo > tol) return Boundedness::BoundedBelow;
  if (hi < -tol) return Boundedness::BoundedAbove;
  // Semidefinite without a linear drive is still one-sided.
  if (!has_linear && lo >= -tol) return Boundedness::BoundedBelow;
  if (!has_linear && hi <= tol) return Boundedness::BoundedAbove;
  return Boundedness::Unbounded;
}

}  // namespace symplab
