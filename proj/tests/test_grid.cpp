#include <gtest/gtest.h>

#include "symplab/quantum/grid.hpp"

namespace {

using namespace symplab;

TEST(GridSpec, Defaults) {
  const PhysParams p{2.0, 0.5, 1.0};
  const GridSpec g = GridSpec::defaults(p);
  EXPECT_EQ(g.points, 128);
  EXPECT_DOUBLE_EQ(g.half_width, 8.0 * p.reference_length());
  EXPECT_DOUBLE_EQ(g.spacing(), 2.0 * g.half_width / 128);
  EXPECT_DOUBLE_EQ(g.coordinate(0), -g.half_width);
  EXPECT_EQ(g.size(), 128u * 128u);
}

TEST(GridSpec, Validation) {
  EXPECT_NO_THROW((GridSpec{3.0, 16}.validate()));
  EXPECT_THROW((GridSpec{3.0, 14}.validate()), std::invalid_argument);
  EXPECT_THROW((GridSpec{3.0, 17}.validate()), std::invalid_argument);
  EXPECT_THROW((GridSpec{0.0, 32}.validate()), std::invalid_argument);
}

TEST(WaveFunction, PacketIsNormalized) {
  const GridSpec g{8.0, 64};
  const WaveFunction psi = GaussianPacket{0.5, -0.5, 1.0, 0.3, 0.9}.sample(g);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
}

TEST(WaveFunction, StorageIsXFastest) {
  const GridSpec g{4.0, 16};
  WaveFunction psi(g);
  psi.at(3, 5) = 2.0;
  EXPECT_EQ(psi.values()[5 * 16 + 3], cplx(2.0));
}

TEST(WaveFunction, InnerProductUsesCellArea) {
  const GridSpec g{4.0, 16};
  WaveFunction psi(g, std::vector<cplx>(g.size(), cplx(1.0)));
  EXPECT_NEAR(psi.inner(psi).real(), 64.0, 1e-12);
}

TEST(WaveFunction, BoundaryMaxSeesOuterRing) {
  const GridSpec g{4.0, 16};
  WaveFunction psi(g);
  psi.at(8, 8) = 5.0;
  EXPECT_EQ(psi.boundary_max(), 0.0);
  psi.at(0, 7) = 0.25;
  psi.at(15, 15) = cplx(0.0, -0.5);
  EXPECT_EQ(psi.boundary_max(), 0.5);
}

TEST(WaveFunction, GroundPacketLocalizedOnDefaultGrid) {
  const PhysParams p{};
  const WaveFunction psi = GaussianPacket::ground(p).sample(GridSpec::defaults(p));
  EXPECT_LE(psi.boundary_max(), kLocalizationThreshold);
  const WaveFunction coarse = GaussianPacket::ground(p).sample(GridSpec{3.0, 16});
  EXPECT_GT(coarse.boundary_max(), kLocalizationThreshold);
}

TEST(WaveFunction, ArithmeticChecksGrid) {
  const WaveFunction a(GridSpec{4.0, 16}), b(GridSpec{4.0, 32});
  EXPECT_THROW(a + b, std::invalid_argument);
}

}  // namespace
