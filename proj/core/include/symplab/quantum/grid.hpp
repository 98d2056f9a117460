#pragma once

#include <complex>
#include <span>
#include <vector>

#include "symplab/params.hpp"

namespace symplab {

using cplx = std::complex<double>;

/// Square periodic grid [-L, L)^2 with N points per axis.
struct GridSpec {
  double half_width = 8.0;
  int points = 128;

  double spacing() const { return 2.0 * half_width / points; }
  double coordinate(int i) const { return -half_width + i * spacing(); }
  std::size_t size() const { return static_cast<std::size_t>(points) * points; }

  /// Throws std::invalid_argument unless L > 0 and N is even and >= 16.
  void validate() const;

  /// N = 128, L = 8 sqrt(hbar/(m omega)).
  static GridSpec defaults(const PhysParams& params);

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Complex samples on a GridSpec, stored x-fastest: index = iy * N + ix.
class WaveFunction {
 public:
  WaveFunction() = default;
  explicit WaveFunction(const GridSpec& grid);
  WaveFunction(const GridSpec& grid, std::vector<cplx> values);

  const GridSpec& grid() const { return grid_; }
  std::span<cplx> values() { return values_; }
  std::span<const cplx> values() const { return values_; }

  cplx& at(int ix, int iy) { return values_[static_cast<std::size_t>(iy) * grid_.points + ix]; }
  const cplx& at(int ix, int iy) const { return values_[static_cast<std::size_t>(iy) * grid_.points + ix]; }

  /// Riemann-sum inner product <this|other> with weight h^2.
  cplx inner(const WaveFunction& other) const;
  double norm() const;
  WaveFunction& normalize();

  /// Largest |psi| on the outermost ring of grid points.
  double boundary_max() const;

  WaveFunction& operator+=(const WaveFunction& o);
  WaveFunction& operator-=(const WaveFunction& o);
  WaveFunction& operator*=(cplx s);
  friend WaveFunction operator+(WaveFunction a, const WaveFunction& b) { return a += b; }
  friend WaveFunction operator-(WaveFunction a, const WaveFunction& b) { return a -= b; }
  friend WaveFunction operator*(cplx s, WaveFunction a) { return a *= s; }

 private:
  void check_same_grid(const WaveFunction& o) const;

  GridSpec grid_;
  std::vector<cplx> values_;
};

/// Isotropic Gaussian exp(-|r - c|^2 / (4 sigma^2) + i k.r); sigma is the
/// position standard deviation of |psi|^2.
struct GaussianPacket {
  double center_x = 0.0;
  double center_y = 0.0;
  double k_x = 0.0;
  double k_y = 0.0;
  double sigma = 1.0;

  /// Sampled and normalized on `grid`.
  WaveFunction sample(const GridSpec& grid) const;

  static GaussianPacket ground(const PhysParams& params) { return {0, 0, 0, 0, params.ground_width()}; }

  friend bool operator==(const GaussianPacket&, const GaussianPacket&) = default;
};

/// Boundary magnitude below which a state counts as localized.
inline constexpr double kLocalizationThreshold = 1e-12;

}  // namespace symplab
