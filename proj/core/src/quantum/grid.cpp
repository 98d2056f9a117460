#include "symplab/quantum/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace symplab {

void GridSpec::validate() const {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("grid half-width must be positive");
  }
  if (points < 16 || points % 2 != 0) {
    throw std::invalid_argument("grid points per axis must be an even integer >= 16");
  }
}

GridSpec GridSpec::defaults(const PhysParams& params) { return {8.0 * params.reference_length(), 128}; }

WaveFunction::WaveFunction(const GridSpec& grid) : grid_(grid), values_(grid.size()) { grid_.validate(); }

WaveFunction::WaveFunction(const GridSpec& grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.size()) throw std::invalid_argument("sample count does not match grid");
}

void WaveFunction::check_same_grid(const WaveFunction& o) const {
  if (!(grid_ == o.grid_)) throw std::invalid_argument("wave functions live on different grids");
}

cplx WaveFunction::inner(const WaveFunction& other) const {
  check_same_grid(other);
  cplx sum = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) sum += std::conj(values_[k]) * other.values_[k];
  const double h = grid_.spacing();
  return sum * (h * h);
}

double WaveFunction::norm() const {
  double sum = 0.0;
  for (const auto& v : values_) sum += std::norm(v);
  return std::sqrt(sum) * grid_.spacing();
}

WaveFunction& WaveFunction::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize a zero wave function");
  for (auto& v : values_) v /= n;
  return *this;
}

double WaveFunction::boundary_max() const {
  const int n = grid_.points;
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    best = std::max({best, std::abs(at(i, 0)), std::abs(at(i, n - 1)), std::abs(at(0, i)),
                     std::abs(at(n - 1, i))});
  }
  return best;
}

WaveFunction& WaveFunction::operator+=(const WaveFunction& o) {
  check_same_grid(o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

WaveFunction& WaveFunction::operator-=(const WaveFunction& o) {
  check_same_grid(o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  return *this;
}

WaveFunction& WaveFunction::operator*=(cplx s) {
  for (auto& v : values_) v *= s;
  return *this;
}

WaveFunction GaussianPacket::sample(const GridSpec& grid) const {
  if (!(sigma > 0.0)) throw std::invalid_argument("packet width must be positive");
  WaveFunction psi(grid);
  const double inv4s2 = 1.0 / (4.0 * sigma * sigma);
  for (int iy = 0; iy < grid.points; ++iy) {
    const double y = grid.coordinate(iy);
    for (int ix = 0; ix < grid.points; ++ix) {
      const double x = grid.coordinate(ix);
      const double dx = x - center_x, dy = y - center_y;
      psi.at(ix, iy) = std::exp(cplx(-(dx * dx + dy * dy) * inv4s2, k_x * x + k_y * y));
    }
  }
  psi.normalize();
  return psi;
}

}  // namespace symplab
