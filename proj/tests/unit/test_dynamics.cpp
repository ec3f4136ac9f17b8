#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bgrip/dynamics/closing.hpp"
#include "bgrip/dynamics/frequency.hpp"
#include "bgrip/dynamics/gravity.hpp"
#include "bgrip/dynamics/simulate.hpp"
#include "../support/test_designs.hpp"

using namespace bgrip;
using bgrip::testing::baseline;

namespace {

GripperDesign calibrated() {
  GripperDesign d = baseline();
  const auto c = calibrate_dynamics(d);
  d.inertia = c.inertia;
  d.damping = c.damping;
  return d;
}

/// Mean period from upward zero crossings of theta - centre (linear interpolation).
double measured_period(const Trajectory &tr, double centre) {
  std::vector<double> crossings;
  for (std::size_t i = 1; i < tr.size(); ++i) {
    const double a = tr.thetas[i - 1] - centre, b = tr.thetas[i] - centre;
    if (a < 0.0 && b >= 0.0)
      crossings.push_back(tr.times[i - 1] + (tr.times[i] - tr.times[i - 1]) * (-a) / (b - a));
  }
  return (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
}

double stable_dt(const GripperDesign &d) {
  return passive_time_step(d, find_equilibria_1dof(d), DynamicsSettings{});
}

} // namespace

TEST(Simulate, StableEquilibriumIsFixedPoint) {
  auto d = baseline();
  const auto r = find_equilibria_1dof(d);
  for (const auto &eq : {r.open_state(), r.closed_state()}) {
    const auto tr = simulate_1dof(d, eq.theta, 0.0, {}, stable_dt(d), 0.2);
    for (double th : tr.thetas)
      EXPECT_NEAR(th, eq.theta, 1e-12);
  }
}

TEST(Simulate, SmallOscillationPeriodMatchesLinearisation) {
  auto d = baseline();
  d.damping = 0.0;
  const auto cl = find_equilibria_1dof(d).closed_state();
  const double omega = natural_frequency(d, cl);
  const double dt = 0.01 / omega;
  const auto tr = simulate_1dof(d, cl.theta + 1e-3, 0.0, {}, dt, 40.0 * 2.0 * std::numbers::pi / omega);
  EXPECT_NEAR(measured_period(tr, cl.theta), 2.0 * std::numbers::pi / omega,
              0.005 * 2.0 * std::numbers::pi / omega);
}

TEST(Simulate, UndampedSnapConservesEnergy) {
  auto d = baseline();
  d.damping = 0.0;
  const auto r = find_equilibria_1dof(d);
  const double omega0 = std::sqrt(4.0 * *r.snap_through_energy / d.inertia);
  const double dt = stable_dt(d);
  const auto tr = simulate_1dof(d, r.open_state().theta, omega0, {}, dt, 1e5 * dt);
  ASSERT_EQ(tr.size(), 100001u);
  const double e0 = tr.mechanical_energy(0);
  double worst = 0.0;
  for (std::size_t i = 0; i < tr.size(); ++i)
    worst = std::max(worst, std::abs(tr.mechanical_energy(i) - e0));
  EXPECT_LT(worst / std::abs(e0), 1e-6);
  EXPECT_GT(*std::max_element(tr.thetas.begin(), tr.thetas.end()), r.saddle_state().theta);
}

TEST(Simulate, DampedRunBalancesDissipation) {
  const auto d = calibrated();
  const auto r = find_equilibria_1dof(d);
  const double p = standard_trigger_impulse(d, r);
  const double dt = stable_dt(d);
  const auto tr = simulate_1dof(d, r.open_state().theta, p / d.inertia, {}, dt, 1e5 * dt);
  const double e0 = tr.mechanical_energy(0);
  for (std::size_t i = 0; i < tr.size(); i += 97)
    ASSERT_LT(std::abs(tr.mechanical_energy(i) + tr.dissipated[i] - e0) / std::abs(e0), 1e-6);
  EXPECT_GT(tr.dissipated.back(), 0.0);
}

TEST(Simulate, ExternalWorkEntersTheBalance) {
  auto d = baseline();
  const auto r = find_equilibria_1dof(d);
  const ExternalMoment tau = [](double t, double) { return 0.02 * std::sin(300.0 * t); };
  const double dt = stable_dt(d);
  const auto tr = simulate_1dof(d, r.open_state().theta, 0.0, tau, dt, 2e4 * dt);
  const double e0 = tr.mechanical_energy(0);
  for (std::size_t i = 0; i < tr.size(); i += 101)
    ASSERT_NEAR(tr.mechanical_energy(i) + tr.dissipated[i] - tr.external_work[i], e0,
                1e-6 * std::abs(e0));
}

TEST(Simulate, UndampedRunIsTimeReversible) {
  auto d = baseline();
  d.damping = 0.0;
  const auto r = find_equilibria_1dof(d);
  // RK4 is not symmetric in time; a quarter of the default step keeps the
  // round-trip defect below the tolerance over a full snap.
  const double dt = 0.25 * stable_dt(d);
  const double w0 = std::sqrt(4.0 * *r.snap_through_energy / d.inertia);
  const auto fwd = simulate_1dof(d, r.open_state().theta, w0, {}, dt, 8e4 * dt);
  const auto back = simulate_1dof(d, fwd.thetas.back(), -fwd.velocities.back(), {}, dt, 8e4 * dt);
  EXPECT_NEAR(back.thetas.back(), r.open_state().theta, 1e-6);
}

TEST(Simulate, RejectsCoarseStep) {
  const auto d = baseline();
  const auto cl = find_equilibria_1dof(d).closed_state();
  const double omega = natural_frequency(d, cl);
  EXPECT_THROW((void)simulate_1dof(d, cl.theta, 0.0, {}, 0.06 / omega, 1.0), StepSizeError);
  EXPECT_NO_THROW((void)simulate_1dof(d, cl.theta, 0.0, {}, 0.04 / omega, 10.0 / omega));
  EXPECT_THROW((void)simulate_1dof(d, cl.theta, 0.0, {}, 0.0, 1.0), ContractViolation);
}

TEST(NaturalFrequency, QuarticWellAndInertiaScaling) {
  auto d = bgrip::testing::pure_quartic(0.8, 1.0, 0.0);
  const auto r = find_equilibria_1dof(d);
  EXPECT_NEAR(natural_frequency(d, r.closed_state()), std::sqrt(0.8 / d.inertia), 1e-6 * std::sqrt(0.8 / d.inertia));
  const double w = natural_frequency(d, r.open_state());
  d.inertia *= 4.0;
  EXPECT_NEAR(natural_frequency(d, r.open_state()), 0.5 * w, 1e-12 * w);
  EXPECT_THROW((void)natural_frequency(d, r.saddle_state()), ContractViolation);
}

TEST(NaturalFrequency, MatchesSimulatedPeriodAtBaselineClosedState) {
  auto d = baseline();
  d.damping = 0.0;
  const auto cl = find_equilibria_1dof(d).closed_state();
  const double omega = natural_frequency(d, cl);
  const auto tr = simulate_1dof(d, cl.theta - 5e-4, 0.0, {}, 0.005 / omega, 30.0 * 2.0 * std::numbers::pi / omega);
  const double sim_omega = 2.0 * std::numbers::pi / measured_period(tr, cl.theta);
  EXPECT_NEAR(sim_omega, omega, 0.005 * omega);
}

TEST(ClosingTime, ImpulseBelowEnergyBoundDoesNotTrigger) {
  const auto d = calibrated();
  const auto r = find_equilibria_1dof(d);
  const double bound = std::sqrt(2.0 * d.inertia * *r.snap_through_energy);
  const auto ev = closing_time(d, 0.99 * bound);
  EXPECT_FALSE(ev.triggered);
  EXPECT_GE(minimum_trigger_impulse(d, r), bound);
}

TEST(ClosingTime, CalibratedBaselineInExperimentalRange) {
  const auto d = calibrated();
  const auto r = find_equilibria_1dof(d);
  const auto ev = closing_time(d, standard_trigger_impulse(d, r));
  ASSERT_TRUE(ev.triggered);
  EXPECT_GE(ev.closing_time, 0.015);
  EXPECT_LE(ev.closing_time, 0.030);
  EXPECT_GT(ev.peak_velocity, 0.0);
}

TEST(ClosingTime, LargerImpulsesNeverCloseLater) {
  const auto d = calibrated();
  const auto r = find_equilibria_1dof(d);
  const double p = minimum_trigger_impulse(d, r);
  const double dt = passive_time_step(d, r, {});
  double prev = INFINITY;
  for (double f : {1.1, 1.25, 1.4, 1.55, 1.7}) {
    const auto ev = closing_time(d, f * p, r);
    ASSERT_TRUE(ev.triggered);
    EXPECT_LE(ev.closing_time, prev + dt) << "factor " << f;
    prev = ev.closing_time;
  }
}

TEST(ClosingTime, TrimmedRingClosesSlower) {
  const auto d = calibrated();
  auto t = d;
  t.ring.width_scale = 0.5;
  const double base = closing_time(d, standard_trigger_impulse(d, find_equilibria_1dof(d))).closing_time;
  const double trim = closing_time(t, standard_trigger_impulse(t, find_equilibria_1dof(t))).closing_time;
  EXPECT_GT(trim, base);
}

TEST(ClosingTime, MonostableThrows) {
  auto d = baseline();
  d.ring.stiffness = 0.0;
  EXPECT_THROW((void)closing_time(d, 1e-3), NotBistable);
}

TEST(GravityCheck, NoGravityReportsFullBarrier) {
  const auto d = baseline();
  const auto g = gravity_trigger_check(d, +1);
  EXPECT_FALSE(g.triggered);
  EXPECT_NEAR(g.margin, snap_through_energy(d), 1e-15);
}

TEST(GravityCheck, FlippedOrientationRaisesMargin) {
  auto d = baseline();
  d.gravity = 9.81;
  const auto down = gravity_trigger_check(d, +1);
  const auto up = gravity_trigger_check(d, -1);
  EXPECT_FALSE(up.triggered);
  EXPECT_GT(up.margin, down.margin);
}

TEST(GravityCheck, HeavyTrimTriggers) {
  auto d = baseline();
  d.gravity = 9.81;
  d.ring.width_scale = 0.12; // just below the gravity-marginal width
  EXPECT_TRUE(gravity_trigger_check(d, +1).triggered);
  EXPECT_FALSE(gravity_trigger_check(d, -1).triggered);
}

TEST(FrequencyStudy, FourfoldStiffnessDoublesFrequency) {
  const auto d = calibrated();
  const auto rows = closing_time_vs_frequency_study(d, {1.0, 4.0});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[1].natural_frequency / rows[0].natural_frequency, 2.0, 1e-6);
  EXPECT_NEAR(rows[1].ring_stiffness, 4.0 * rows[0].ring_stiffness, 1e-12);
}

TEST(FrequencyStudy, SinglePointTable) {
  EXPECT_EQ(closing_time_vs_frequency_study(calibrated(), {1.0}).size(), 1u);
}

TEST(FrequencyStudy, EightPointLadderRankCorrelation) {
  const auto rows = closing_time_vs_frequency_study(calibrated(), geometric_ladder(0.35, 4.0, 8));
  ASSERT_EQ(rows.size(), 8u);
  for (const auto &r : rows)
    ASSERT_TRUE(r.bistable && r.triggered);
  EXPECT_GT(frequency_study_correlation(rows), 0.95);
}

TEST(FrequencyStudy, NonBistablePointsAreFlagged) {
  auto d = calibrated();
  d.ring.stiffness = 0.0;
  const auto rows = closing_time_vs_frequency_study(d, {1.0, 2.0});
  EXPECT_FALSE(rows[0].bistable);
  EXPECT_FALSE(rows[1].bistable);
}

TEST(Spearman, KnownValues) {
  EXPECT_DOUBLE_EQ(spearman_correlation({1, 2, 3, 4}, {10, 20, 30, 40}), 1.0);
  EXPECT_DOUBLE_EQ(spearman_correlation({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0);
  // textbook example with ties: ranks (1, 2.5, 2.5, 4) vs (1, 2, 3, 4)
  EXPECT_NEAR(spearman_correlation({1, 2, 2, 3}, {1, 2, 3, 4}), 0.9486832980505138, 1e-12);
  EXPECT_THROW((void)spearman_correlation({1}, {1}), ContractViolation);
}
