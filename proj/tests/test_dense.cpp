#include <gtest/gtest.h>

#include "symplab/quantum/dense.hpp"

namespace {

using namespace symplab;

GridSpec small_grid(const PhysParams& p, int n = 32) { return {8.0 * p.reference_length(), n}; }

TEST(Dense, RejectsLargeGrid) {
  const PhysParams p{};
  EXPECT_THROW(DenseConjugator(make_scheme(0, p), small_grid(p, 64)), std::invalid_argument);
}

TEST(Dense, ZeroTimeIsExact) {
  const PhysParams p{};
  const GridSpec g = small_grid(p, 16);
  for (int id = 0; id < kSchemeCount; ++id) {
    const DenseConjugator conj(make_scheme(id, p), g);
    const WaveFunction psi = conjugation_probe_packet(p).sample(g);
    for (Observable o : kAllObservables) EXPECT_LE(conj.deviation(o, 0.0, psi), 1e-12) << id;
  }
}

TEST(Dense, EvolutionPreservesNorm) {
  const PhysParams p{1.2, 0.8, 0.9};
  const GridSpec g = small_grid(p, 16);
  for (int id = 0; id < kSchemeCount; ++id) {
    const DenseConjugator conj(make_scheme(id, p), g);
    const WaveFunction psi = conjugation_probe_packet(p).sample(g);
    for (double t : {0.3, 2.0, 17.0}) EXPECT_NEAR(conj.evolve(psi, t).norm(), 1.0, 1e-8) << id;
  }
}

TEST(Dense, GeneratorIsHermitian) {
  const PhysParams p{};
  const DenseConjugator conj(make_scheme(3, p), small_grid(p, 16));
  const auto& gmat = conj.generator();
  EXPECT_LE((gmat - gmat.adjoint()).cwiseAbs().maxCoeff(), 1e-10 * gmat.cwiseAbs().maxCoeff());
}

TEST(Dense, ProbePacketIsLocalized) {
  for (const PhysParams p : {PhysParams{}, PhysParams{2.0, 0.5, 1.5}}) {
    EXPECT_LE(conjugation_probe_packet(p).sample(small_grid(p)).boundary_max(), kLocalizationThreshold);
  }
}

TEST(Dense, ConjugationMatchesHeisenbergOperator) {
  const PhysParams p{};
  const GridSpec g = small_grid(p);
  EXPECT_LE(unitary_conjugation_check(make_scheme(0, p), Observable::X, 0.6 / p.omega, g), 1e-5);
  EXPECT_LE(unitary_conjugation_check(make_scheme(3, p), Observable::PX, 1.1 / p.omega, g), 1e-5);
}

}  // namespace
