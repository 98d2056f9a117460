#include <benchmark/benchmark.h>

#include "symplab/symplab.hpp"

namespace {

using namespace symplab;

void BM_SpectralHeisenbergApply(benchmark::State& state) {
  const PhysParams p{};
  const GridSpec g{8.0 * p.reference_length(), static_cast<int>(state.range(0))};
  const QuantumEngine e(g);
  const WaveFunction psi = GaussianPacket{0.5, -0.3, 0.8, 0.2, p.ground_width()}.sample(g);
  const auto op = heisenberg_operator(make_scheme(static_cast<int>(state.range(1)), p), Observable::PX, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(e.apply(op, psi));
}
BENCHMARK(BM_SpectralHeisenbergApply)->ArgsProduct({{64, 128, 256}, {0, 1, 3}})->Unit(benchmark::kMicrosecond);

void BM_UncertaintyProduct(benchmark::State& state) {
  const PhysParams p{};
  const GridSpec g = GridSpec::defaults(p);
  const QuantumEngine e(g);
  const WaveFunction psi = GaussianPacket::ground(p).sample(g);
  const auto s = make_scheme(3, p);
  for (auto _ : state) benchmark::DoNotOptimize(uncertainty_product(e, s, {Observable::X, Observable::Y}, psi, 0.4));
}
BENCHMARK(BM_UncertaintyProduct)->Unit(benchmark::kMillisecond);

void BM_DenseConjugatorSetup(benchmark::State& state) {
  const PhysParams p{};
  const GridSpec g{8.0 * p.reference_length(), static_cast<int>(state.range(0))};
  const auto s = make_scheme(0, p);
  for (auto _ : state) benchmark::DoNotOptimize(DenseConjugator(s, g).eigenvalues().size());
}
BENCHMARK(BM_DenseConjugatorSetup)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SymbolicPoissonBracket(benchmark::State& state) {
  const ParamPoly m = ParamPoly::m(), w = ParamPoly::omega();
  const auto s0 = canonical_hamiltonian<ParamPoly>(0, m, w);
  const auto s3 = canonical_hamiltonian<ParamPoly>(3, m, w);
  const auto upper = canonical_upper<ParamPoly>(3, m, w);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_bracket(s0, s3, upper));
}
BENCHMARK(BM_SymbolicPoissonBracket);

void BM_AdmissibleInverseForms(benchmark::State& state) {
  const auto field = oscillator_field(PhysParams{1.3, 0.7, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(admissible_inverse_forms(field).dimension());
}
BENCHMARK(BM_AdmissibleInverseForms);

void BM_FlowSymplecticCheck(benchmark::State& state) {
  const PhysParams p{};
  const auto form = canonical_form(1, p);
  double t = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_flow_symplectic(form, t += 0.01, p).max_deviation);
}
BENCHMARK(BM_FlowSymplecticCheck);

}  // namespace

BENCHMARK_MAIN();
