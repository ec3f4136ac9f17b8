#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bgrip/statics/equilibria.hpp"
#include "../support/grid_oracle.hpp"
#include "../support/test_designs.hpp"

using namespace bgrip;
using bgrip::testing::baseline;
using bgrip::testing::pure_quartic;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Equilibria, ZeroRingHasSingleRestState) {
  auto d = baseline();
  d.ring.stiffness = 0.0;
  const auto r = find_equilibria_1dof(d);
  ASSERT_EQ(r.equilibria.size(), 1u);
  EXPECT_NEAR(r.equilibria[0].theta, d.finger.rest_angle(), 1e-11);
  EXPECT_EQ(r.equilibria[0].stability, Stability::stable);
  EXPECT_FALSE(r.bistable());
  EXPECT_THROW((void)r.open_state(), NotBistable);
}

TEST(Equilibria, PureQuarticWellsAndBarrier) {
  const auto d = pure_quartic(1.0, 1.0, 0.0);
  const auto r = find_equilibria_1dof(d);
  ASSERT_TRUE(r.bistable());
  EXPECT_NEAR(r.open_state().theta, -1.0, 1e-11);
  EXPECT_NEAR(r.saddle_state().theta, 0.0, 1e-11);
  EXPECT_NEAR(r.closed_state().theta, 1.0, 1e-11);
  EXPECT_NEAR(*r.snap_through_energy, 0.125, 1e-14);
  EXPECT_NEAR(snap_through_energy(d), 0.125, 1e-14);
  EXPECT_NEAR(r.open_state().curvature, 1.0, 1e-6);
}

TEST(Equilibria, PureQuarticTriggerMoment) {
  const double k = 0.7, delta = 1.1, center = 0.2;
  const auto d = pure_quartic(k, delta, center);
  // max of U' on [center - delta, center] sits at center - delta / sqrt(3)
  const double x = -delta / std::sqrt(3.0);
  const double expected = (k / (2.0 * delta * delta)) * x * (x * x - delta * delta);
  EXPECT_NEAR(expected, k * delta / (3.0 * std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(trigger_moment(d), expected, 1e-12);
}

TEST(Equilibria, BaselineMatchesDenseGridOracle) {
  const auto d = baseline();
  const auto r = find_equilibria_1dof(d);
  const auto grid = bgrip::testing::grid_extrema(d, -kPi, kPi, 1000000);
  ASSERT_TRUE(r.bistable());
  ASSERT_EQ(grid.size(), r.equilibria.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(r.equilibria[i].theta, grid[i].theta, 1e-5);
    EXPECT_NEAR(r.equilibria[i].energy, grid[i].energy, 1e-9);
    EXPECT_EQ(r.equilibria[i].stability == Stability::stable, grid[i].minimum);
  }
  EXPECT_NEAR(*r.snap_through_energy, grid[1].energy - grid[0].energy, 1e-9);
}

TEST(Equilibria, BaselineTriggerMatchesGridScan) {
  const auto d = baseline();
  const auto r = find_equilibria_1dof(d);
  const double oracle = bgrip::testing::grid_max_gradient(d, r.open_state().theta,
                                                          r.saddle_state().theta, 1000001);
  EXPECT_NEAR(trigger_moment(d, r), oracle, 1e-9);
}

TEST(Equilibria, TriggerMomentFallsWithWidthScale) {
  auto d = baseline();
  double prev = trigger_moment(d);
  for (double w : {0.9, 0.8, 0.7, 0.6}) {
    d.ring.width_scale = w;
    const double t = trigger_moment(d);
    EXPECT_LT(t, prev) << "width_scale " << w;
    prev = t;
  }
}

TEST(Equilibria, BarrierFallsTowardZeroAsRingIsTrimmed) {
  auto d = baseline();
  double prev = snap_through_energy(d);
  double w = 1.0;
  bool lost = false;
  while (w > 0.01) {
    w *= 0.95;
    d.ring.width_scale = w;
    const auto r = find_equilibria_1dof(d);
    if (!r.bistable()) {
      lost = true;
      break;
    }
    EXPECT_LT(*r.snap_through_energy, prev);
    EXPECT_GT(*r.snap_through_energy, 0.0);
    prev = *r.snap_through_energy;
  }
  EXPECT_TRUE(lost);
}

TEST(Equilibria, ReportedPointsSatisfyGradientTolerance) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto d = bgrip::testing::random_design(rng, true);
    const auto r = find_equilibria_1dof(d);
    for (const auto &eq : r.equilibria)
      EXPECT_LT(std::abs(gradient_1dof(eq.theta, d)), 1e-10);
    if (r.bistable()) {
      EXPECT_LT(r.open_state().theta, r.saddle_state().theta);
      EXPECT_LT(r.saddle_state().theta, r.closed_state().theta);
      EXPECT_GT(r.saddle_state().energy,
                std::max(r.open_state().energy, r.closed_state().energy));
    }
  }
}

TEST(Equilibria, SnapThroughInvariantUnderEnergyShift) {
  // Moving the gravity datum adds the same constant to every energy.
  auto d = baseline();
  d.gravity = 9.81;
  const double b0 = snap_through_energy(d);
  const auto r = find_equilibria_1dof(d);
  const double shift = 3.7;
  const double shifted = (r.saddle_state().energy + shift) - (r.open_state().energy + shift);
  EXPECT_NEAR(shifted, b0, 1e-12);
}

TEST(Equilibria, RandomDesignsMatchGridOracle) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 25) {
    const auto d = bgrip::testing::random_design(rng);
    const auto r = find_equilibria_1dof(d);
    if (!r.bistable())
      continue;
    const auto grid = bgrip::testing::grid_extrema(d, -kPi, kPi, 1000000);
    ASSERT_EQ(grid.size(), r.equilibria.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      EXPECT_NEAR(r.equilibria[i].theta, grid[i].theta, 1e-5);
    EXPECT_NEAR(*r.snap_through_energy, grid[1].energy - grid[0].energy, 1e-9);
    ++checked;
  }
}

TEST(Equilibria, RejectsBadWindow) {
  const auto d = baseline();
  EXPECT_THROW((void)find_equilibria_1dof(d, 1.0, -1.0, 4096), ContractViolation);
  EXPECT_THROW((void)find_equilibria_1dof(d, -1.0, 1.0, 50), ContractViolation);
}

TEST(Equilibria, MonostableSnapThroughThrows) {
  auto d = baseline();
  d.ring.stiffness = 0.0;
  EXPECT_THROW((void)snap_through_energy(d), NotBistable);
  EXPECT_THROW((void)trigger_moment(d), NotBistable);
  try {
    (void)snap_through_energy(d);
  } catch (const NotBistable &e) {
    EXPECT_STREQ(e.what(), "design is not bistable");
  }
}
