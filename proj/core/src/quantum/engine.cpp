#include "symplab/quantum/engine.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <vector>

namespace symplab {

namespace detail {

namespace {
// FFTW's planner is not reentrant; execution on fresh arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwDeleter>;

FftwBuffer make_buffer(std::size_t n) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (!p) throw std::bad_alloc();
  return FftwBuffer(p);
}
}  // namespace

class SpectralPlans {
 public:
  explicit SpectralPlans(const GridSpec& grid) : n_(grid.points) {
    const double dk = M_PI / grid.half_width;  // 2 pi / (2 L)
    wavenumber_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      if (j < n_ / 2) wavenumber_[j] = dk * j;
      else if (j == n_ / 2) wavenumber_[j] = 0.0;
      else wavenumber_[j] = dk * (j - n_);
    }
    coordinate_.resize(n_);
    for (int j = 0; j < n_; ++j) coordinate_[j] = grid.coordinate(j);

    auto scratch = make_buffer(grid.size());
    std::lock_guard lock(planner_mutex());
    int len[1] = {n_};
    // Along x: each row (fixed iy) is contiguous.
    fwd_x_ = fftw_plan_many_dft(1, len, n_, scratch.get(), nullptr, 1, n_, scratch.get(), nullptr, 1, n_,
                                FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_x_ = fftw_plan_many_dft(1, len, n_, scratch.get(), nullptr, 1, n_, scratch.get(), nullptr, 1, n_,
                                FFTW_BACKWARD, FFTW_ESTIMATE);
    // Along y: stride N, consecutive columns one apart.
    fwd_y_ = fftw_plan_many_dft(1, len, n_, scratch.get(), nullptr, n_, 1, scratch.get(), nullptr, n_, 1,
                                FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_y_ = fftw_plan_many_dft(1, len, n_, scratch.get(), nullptr, n_, 1, scratch.get(), nullptr, n_, 1,
                                FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!fwd_x_ || !bwd_x_ || !fwd_y_ || !bwd_y_) throw std::runtime_error("FFTW planning failed");
  }

  ~SpectralPlans() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd_x_);
    fftw_destroy_plan(bwd_x_);
    fftw_destroy_plan(fwd_y_);
    fftw_destroy_plan(bwd_y_);
  }

  SpectralPlans(const SpectralPlans&) = delete;
  SpectralPlans& operator=(const SpectralPlans&) = delete;

  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }
  FftwBuffer allocate() const { return make_buffer(size()); }

  void apply(Primitive p, fftw_complex* data) const {
    switch (p) {
      case Primitive::Identity: return;
      case Primitive::MulX:
        for (int iy = 0; iy < n_; ++iy)
          for (int ix = 0; ix < n_; ++ix) scale(data[iy * n_ + ix], coordinate_[ix]);
        return;
      case Primitive::MulY:
        for (int iy = 0; iy < n_; ++iy)
          for (int ix = 0; ix < n_; ++ix) scale(data[iy * n_ + ix], coordinate_[iy]);
        return;
      case Primitive::DX:
        fftw_execute_dft(fwd_x_, data, data);
        for (int iy = 0; iy < n_; ++iy)
          for (int ix = 0; ix < n_; ++ix) times_ik(data[iy * n_ + ix], wavenumber_[ix]);
        fftw_execute_dft(bwd_x_, data, data);
        return;
      case Primitive::DY:
        fftw_execute_dft(fwd_y_, data, data);
        for (int iy = 0; iy < n_; ++iy)
          for (int ix = 0; ix < n_; ++ix) times_ik(data[iy * n_ + ix], wavenumber_[iy]);
        fftw_execute_dft(bwd_y_, data, data);
        return;
    }
  }

 private:
  static void scale(fftw_complex& v, double s) {
    v[0] *= s;
    v[1] *= s;
  }
  // Multiplies by i k / N; the 1/N undoes the unnormalized inverse transform.
  void times_ik(fftw_complex& v, double k) const {
    const double f = k / n_;
    const double re = v[0];
    v[0] = -f * v[1];
    v[1] = f * re;
  }

  int n_;
  std::vector<double> wavenumber_;
  std::vector<double> coordinate_;
  fftw_plan fwd_x_ = nullptr, bwd_x_ = nullptr, fwd_y_ = nullptr, bwd_y_ = nullptr;
};

}  // namespace detail

QuantumEngine::QuantumEngine(const GridSpec& grid) : grid_(grid) {
  grid_.validate();
  plans_ = std::make_shared<const detail::SpectralPlans>(grid_);
}

WaveFunction QuantumEngine::apply(const OperatorExpr& op, const WaveFunction& psi) const {
  if (!(psi.grid() == grid_)) throw GridMismatchError("wave function grid does not match engine grid");
  static_assert(sizeof(fftw_complex) == sizeof(cplx));

  WaveFunction out(grid_);
  auto work = plans_->allocate();
  const std::size_t n = plans_->size();
  auto* work_c = reinterpret_cast<cplx*>(work.get());
  for (const auto& term : op.terms()) {
    std::memcpy(work.get(), psi.values().data(), n * sizeof(cplx));
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) plans_->apply(*it, work.get());
    auto dst = out.values();
    for (std::size_t k = 0; k < n; ++k) dst[k] += term.coeff * work_c[k];
  }
  return out;
}

cplx QuantumEngine::expectation(const OperatorExpr& op, const WaveFunction& psi) const {
  return psi.inner(apply(op, psi));
}

double QuantumEngine::variance(const OperatorExpr& op, const WaveFunction& psi) const {
  const WaveFunction a_psi = apply(op, psi);
  const cplx mean = psi.inner(a_psi);
  const double second = a_psi.inner(a_psi).real();
  return second - std::norm(mean);
}

CommutatorCheck commutator_table_check(const QuantumEngine& engine, const QuantizationScheme& s,
                                       const WaveFunction& psi) {
  CommutatorCheck out;
  out.boundary_max = psi.boundary_max();
  out.localized = out.boundary_max <= kLocalizationThreshold;
  const double psi_norm = psi.norm();

  std::array<WaveFunction, 4> single;
  for (int a = 0; a < 4; ++a) single[a] = engine.apply(s.assignment[a], psi);

  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      WaveFunction comm = engine.apply(s.assignment[a], single[b]) - engine.apply(s.assignment[b], single[a]);
      const cplx measured = psi.inner(comm);
      out.measured[a][b] = measured;
      out.measured[b][a] = -measured;
      comm -= s.commutators[a][b] * psi;
      out.max_deviation = std::max(out.max_deviation, comm.norm() / psi_norm);
    }
  }
  return out;
}

double uncertainty_product(const QuantumEngine& engine, const QuantizationScheme& s, ObservablePair pair,
                           const WaveFunction& psi, double t) {
  const double va = engine.variance(heisenberg_operator(s, pair.first, t), psi);
  const double vb = engine.variance(heisenberg_operator(s, pair.second, t), psi);
  return std::sqrt(std::max(va, 0.0)) * std::sqrt(std::max(vb, 0.0));
}

CommutatorEstimate two_time_commutator(const QuantumEngine& engine, const QuantizationScheme& s, double t,
                                       double t2, const WaveFunction& psi) {
  const OperatorExpr a = heisenberg_operator(s, Observable::X, t);
  const OperatorExpr b = heisenberg_operator(s, Observable::X, t2);
  const WaveFunction ab = engine.apply(a, engine.apply(b, psi));
  const WaveFunction ba = engine.apply(b, engine.apply(a, psi));
  return {psi.inner(ab - ba), psi.boundary_max() <= kLocalizationThreshold};
}

}  // namespace symplab
