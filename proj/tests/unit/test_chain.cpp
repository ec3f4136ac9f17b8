#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bgrip/core/chain.hpp"
#include "../support/test_designs.hpp"

using namespace bgrip;
using bgrip::testing::baseline;

namespace {

GripperDesign with_segments(GripperDesign d, std::size_t n) {
  d.finger.n_segments = n;
  return d;
}

ChainConfiguration random_config(std::mt19937_64 &rng, std::size_t n, double spread = 0.6) {
  std::uniform_real_distribution<double> u(-spread, spread);
  ChainConfiguration c;
  for (std::size_t i = 0; i < n; ++i)
    c.joint_angles.push_back(u(rng) * 4.0 / static_cast<double>(n) + 0.1);
  return c;
}

TEST(Chain, SingleSegmentReducesToOneDof) {
  for (double attach : {1.0, 0.5, 0.3}) {
    auto d = with_segments(baseline(), 1);
    d.ring.attach_fraction = attach;
    d.gravity = 9.81;
    d.payload_mass = 0.01;
    for (double theta : {-2.0, -0.9, 0.0, 0.4, 1.6, 2.5}) {
      const ChainConfiguration c{{theta}};
      const double ref = total_energy_1dof(theta, d);
      EXPECT_NEAR(chain_energy(c, d), ref, 1e-12 * std::abs(ref));
      EXPECT_NEAR(chain_gradient(c, d)[0], gradient_1dof(theta, d),
                  1e-12 * std::max(1e-3, std::abs(gradient_1dof(theta, d))));
    }
  }
}

TEST(Chain, UniformCurvatureFingerTermEqualsOneDof) {
  auto d = with_segments(baseline(), 16);
  d.ring.attach_fraction = 1.0;
  for (double theta : {-1.0, 0.5, 2.2}) {
    const auto terms = detail::chain_terms(uniform_configuration(16, theta), d);
    const double ref = finger_energy_1dof(theta, d.finger);
    EXPECT_NEAR(terms.finger, ref, 1e-13 * ref);
    EXPECT_NEAR(terms.ring, ring_energy_1dof(theta, d.ring), 1e-14 * std::max(1.0, terms.ring));
  }
}

TEST(Chain, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 4u, 8u, 32u}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto d = with_segments(bgrip::testing::random_design(rng, true), n);
      const auto c = random_config(rng, n);
      const auto g = chain_gradient(c, d);
      Eigen::VectorXd fd(g.size());
      for (std::size_t j = 0; j < n; ++j) {
        auto p = c, m = c;
        const double h = 1e-6;
        p.joint_angles[j] += h;
        m.joint_angles[j] -= h;
        fd[static_cast<Eigen::Index>(j)] = (chain_energy(p, d) - chain_energy(m, d)) / (2 * h);
      }
      // Relative to the gradient's magnitude: FD round-off is absolute.
      EXPECT_LE((g - fd).cwiseAbs().maxCoeff(), 1e-6 * g.cwiseAbs().maxCoeff()) << "n=" << n;
    }
  }
}

// Oracle: march along the centreline in fine steps and accumulate the lateral
// mass moment directly.
double lateral_moment_by_marching(const ChainConfiguration &c, const GripperDesign &d) {
  const std::size_t n = c.joint_angles.size();
  const double ell = d.finger.length / static_cast<double>(n);
  constexpr int kSub = 4000;
  const double ds = ell / kSub;
  double x = 0.0, psi = 0.0, moment = 0.0;
  for (double phi : c.joint_angles) {
    for (int k = 0; k < kSub; ++k) {
      const double x_mid = x + 0.5 * ds * std::sin(psi + phi * k / kSub);
      moment += d.finger.linear_density * ds * x_mid;
      const double a0 = psi + phi * k / kSub, a1 = psi + phi * (k + 1) / kSub;
      x += (std::abs(a1 - a0) > 1e-14) ? ds * (std::cos(a0) - std::cos(a1)) / (a1 - a0)
                                        : ds * std::sin(a0);
    }
    psi += phi;
  }
  return moment + d.payload_mass * x;
}

TEST(Chain, GravityMatchesCentrelineMarching) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {2u, 5u, 12u}) {
    auto d = with_segments(baseline(), n);
    d.gravity = 9.81;
    d.payload_mass = 0.02;
    const auto c = random_config(rng, n);
    const double oracle = -d.gravity * lateral_moment_by_marching(c, d);
    const double got = detail::chain_terms(c, d).gravity;
    EXPECT_NEAR(got, oracle, 1e-6 * std::abs(oracle)) << n;
  }
}

TEST(Chain, RejectsLengthMismatch) {
  const auto d = with_segments(baseline(), 8);
  EXPECT_THROW(chain_energy(uniform_configuration(7, 1.0), d), ContractViolation);
  EXPECT_THROW(chain_gradient(uniform_configuration(9, 1.0), d), ContractViolation);
}

TEST(ForwardKinematics, StraightChainPointsUp) {
  const auto d = with_segments(baseline(), 8);
  const auto nodes = forward_kinematics(uniform_configuration(8, 0.0), d.finger);
  ASSERT_EQ(nodes.size(), 9u);
  EXPECT_NEAR(nodes.back().x, 0.0, 1e-15);
  EXPECT_NEAR(nodes.back().y, d.finger.length, 1e-15);
}

TEST(ForwardKinematics, SingleLinkQuarterTurn) {
  const auto d = with_segments(baseline(), 1);
  const auto nodes = forward_kinematics({{std::numbers::pi / 2}}, d.finger);
  EXPECT_NEAR(nodes.back().x, d.finger.length, 1e-15);
  EXPECT_NEAR(nodes.back().y, 0.0, 1e-15);
}

TEST(ForwardKinematics, QuarterCircleLimit) {
  const auto d = with_segments(baseline(), 200);
  const auto nodes = forward_kinematics(uniform_configuration(200, std::numbers::pi / 2), d.finger);
  // Base-joint links make this a one-sided Riemann sum: error ~ L / (2n), in metres.
  const double L = d.finger.length;
  EXPECT_NEAR(nodes.back().x, 2.0 * L / std::numbers::pi, 1e-3);
  EXPECT_NEAR(nodes.back().y, 2.0 * L / std::numbers::pi, 1e-3);
}

TEST(RingStation, InterpolatesWithinSegment) {
  auto d = with_segments(baseline(), 4);
  d.ring.attach_fraction = 0.6; // 2.4 segments
  const ChainConfiguration c{{0.1, 0.2, 0.3, 0.4}};
  EXPECT_NEAR(ring_station_angle(c, d.ring), 0.1 + 0.2 + 0.4 * 0.3, 1e-15);
  d.ring.attach_fraction = 1.0;
  EXPECT_NEAR(ring_station_angle(c, d.ring), 1.0, 1e-15);
}

} // namespace
