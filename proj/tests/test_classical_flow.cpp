#include <gtest/gtest.h>

#include <numbers>

#include "generators.hpp"
#include "oracles/leapfrog.hpp"
#include "symplab/classical_flow.hpp"
#include "symplab/pair_finder.hpp"

namespace {

using namespace symplab;
constexpr double kPi = std::numbers::pi;

PhaseState random_state(gen::Source& src) {
  return {src.real(-2, 2), src.real(-2, 2), src.real(-2, 2), src.real(-2, 2)};
}

double max_diff(const PhaseState& a, const PhaseState& b) {
  return (a.as_vector() - b.as_vector()).cwiseAbs().maxCoeff();
}

TEST(ExactFlow, IdentityAtZero) {
  gen::Source src(1);
  const PhaseState s = random_state(src);
  EXPECT_EQ(exact_flow(s, 0.0, PhysParams{}), s);
}

TEST(ExactFlow, QuarterPeriod) {
  const PhysParams p{2.0, 3.0, 1.0};
  const PhaseState s = exact_flow({1, 0, 0, 0}, kPi / (2 * p.omega), p);
  EXPECT_NEAR(s.x, 0.0, 1e-15);
  EXPECT_NEAR(s.px, -p.m * p.omega, 1e-14);
  EXPECT_EQ(s.y, 0.0);
  EXPECT_EQ(s.py, 0.0);
}

TEST(ExactFlow, MatchesLeapfrog) {
  gen::Source src(5);
  for (const PhysParams p : {PhysParams{}, PhysParams{0.7, 1.9, 1.0}}) {
    const PhaseState s = random_state(src);
    const auto lf = oracle::leapfrog(s.as_array(), 0.37, 1e-5, p);
    const PhaseState e = exact_flow(s, 0.37, p);
    EXPECT_LE(max_diff(e, {lf[0], lf[1], lf[2], lf[3]}), 1e-8);
  }
}

TEST(ExactFlow, GroupLaw) {
  gen::Source src(8);
  const PhysParams p{1.4, 0.9, 1.0};
  for (int trial = 0; trial < 20; ++trial) {
    const PhaseState s = random_state(src);
    const double t1 = src.real(-5, 5), t2 = src.real(-5, 5);
    EXPECT_LE(max_diff(exact_flow(exact_flow(s, t1, p), t2, p), exact_flow(s, t1 + t2, p)), 1e-12);
  }
}

TEST(FlowJacobian, IdentityAtZeroAndFullPeriod) {
  const PhysParams p{1.0, 2.5, 1.0};
  EXPECT_EQ(flow_jacobian(0.0, p), Eigen::Matrix4d::Identity());
  EXPECT_LE((flow_jacobian(p.period(), p) - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(FlowJacobian, QuarterPeriodBlockRotation) {
  Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
  expected(0, 2) = 1;
  expected(1, 3) = 1;
  expected(2, 0) = -1;
  expected(3, 1) = -1;
  EXPECT_LE((flow_jacobian(kPi / 2, PhysParams{}) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(FlowJacobian, UnitDeterminantAndFiniteDifference) {
  const PhysParams p{0.8, 1.3, 1.0};
  gen::Source src(13);
  for (int trial = 0; trial < 10; ++trial) {
    const double t = src.real(-4, 4);
    const Eigen::Matrix4d j = flow_jacobian(t, p);
    EXPECT_NEAR(j.determinant(), 1.0, 1e-12);
    const PhaseState base = random_state(src);
    const double h = 1e-6;
    for (int k = 0; k < 4; ++k) {
      Eigen::Vector4d dp = base.as_vector(), dm = base.as_vector();
      dp(k) += h;
      dm(k) -= h;
      const Eigen::Vector4d col =
          (exact_flow(PhaseState::from(dp), t, p).as_vector() - exact_flow(PhaseState::from(dm), t, p).as_vector()) /
          (2 * h);
      EXPECT_LE((col - j.col(k)).cwiseAbs().maxCoeff(), 1e-7);
    }
  }
}

TEST(FlowSymplectic, PaperExamples) {
  const PhysParams p{};
  EXPECT_TRUE(verify_flow_symplectic(canonical_form(0, p), 1.23, p).ok);
  EXPECT_TRUE(verify_flow_symplectic(canonical_form(3, p), 0.77, p).ok);
}

TEST(FlowSymplectic, ScalingIsRejected) {
  const auto r = verify_symplectic_map(canonical_form(0, PhysParams{}), 2.0 * Eigen::Matrix4d::Identity());
  EXPECT_FALSE(r.ok);
  EXPECT_NEAR(r.max_deviation, 3.0, 1e-15);
}

TEST(FlowSymplectic, AllFormsAtRandomTimes) {
  gen::Source src(21);
  for (const PhysParams p : {PhysParams{}, PhysParams{1.7, 0.4, 1.0}}) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int k = 0; k < 20; ++k) {
        const double t = src.real(-10, 10);
        const auto r = verify_flow_symplectic(canonical_form(mu, p), t, p);
        EXPECT_TRUE(r.ok) << "mu=" << mu << " t=" << t << " dev=" << r.max_deviation;
      }
    }
  }
}

TEST(FlowSymplectic, EveryInvertibleAdmissibleForm) {
  const PhysParams p{1.2, 0.7, 1.0};
  const auto basis = admissible_inverse_forms(oscillator_field(p));
  gen::Source src(34);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> c(basis.dimension());
    for (auto& v : c) v = src.real(-1, 1);
    const auto theta = basis.combine(c);
    if (!validate_form(theta).ok()) continue;
    const auto form = SymplecticForm<double>::from_lower(theta);
    for (int k = 0; k < 20; ++k) EXPECT_TRUE(verify_flow_symplectic(form, src.real(-6, 6), p).ok);
  }
  for (const auto& theta : basis.basis) {
    if (!validate_form(theta).ok()) continue;
    const auto form = SymplecticForm<double>::from_lower(theta);
    for (int k = 0; k < 20; ++k) EXPECT_TRUE(verify_flow_symplectic(form, src.real(-6, 6), p).ok);
  }
}

TEST(Conservation, AllHamiltoniansOverTwoPeriods) {
  gen::Source src(55);
  const PhysParams p{0.9, 1.6, 1.0};
  const auto times = uniform_times(p);
  ASSERT_EQ(times.size(), 100u);
  EXPECT_NEAR(times.back(), 4 * kPi / p.omega, 1e-12);
  for (int mu = 0; mu < 4; ++mu) {
    const PhaseState s = random_state(src);
    EXPECT_LE(conserved_along_flow(canonical_hamiltonian(mu, p), s, times, p), 1e-10) << mu;
  }
}

TEST(Conservation, PositionIsNotConserved) {
  const PhysParams p{};
  const std::array<double, 1> t{kPi / 2};
  EXPECT_NEAR(conserved_along_flow(Polynomial<double>::variable(Coord::X), {1, 0, 0, 0}, t, p), 1.0, 1e-15);
}

TEST(Conservation, EmptyTimesThrow) {
  EXPECT_THROW(conserved_along_flow(Polynomial<double>(1.0), {}, std::span<const double>{}, PhysParams{}),
               std::invalid_argument);
}

}  // namespace
