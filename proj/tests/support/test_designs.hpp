#ifndef BGRIP_TESTS_SUPPORT_TEST_DESIGNS_HPP
#define BGRIP_TESTS_SUPPORT_TEST_DESIGNS_HPP

#include <cmath>
#include <random>

#include "bgrip/core/types.hpp"

namespace bgrip::testing {

/// The shipped baseline (configs/baseline.cfg) without dynamics calibration.
inline GripperDesign baseline() { return GripperDesign{}; }

/// Ring-only double well: no finger stiffness, ring at the tip.
inline GripperDesign pure_quartic(double k_eff = 1.0, double halfwidth = 1.0, double center = 0.0) {
  GripperDesign d;
  d.finger.material = LinearElastic{0.0};
  d.ring.attach_fraction = 1.0;
  d.ring.stiffness = k_eff;
  d.ring.well_halfwidth = halfwidth;
  d.ring.well_center = center;
  return d;
}

inline double log_uniform(std::mt19937_64 &rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

/// Random design around the baseline: log-uniform ring stiffness, well
/// half-width and natural curvature; optionally gravity and a payload.
inline GripperDesign random_design(std::mt19937_64 &rng, bool with_gravity = false) {
  GripperDesign d;
  d.ring.stiffness = log_uniform(rng, 0.5, 10.0);
  d.ring.well_halfwidth = log_uniform(rng, 0.6, 1.6);
  d.finger.natural_curvature = log_uniform(rng, 10.0, 30.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  d.ring.well_center = -0.2 + 0.8 * u(rng);
  d.ring.attach_fraction = 0.3 + 0.7 * u(rng);
  if (with_gravity) {
    d.gravity = (u(rng) - 0.5) * 2.0 * 9.81;
    d.payload_mass = 0.02 * u(rng);
  }
  return d;
}

} // namespace bgrip::testing

#endif // BGRIP_TESTS_SUPPORT_TEST_DESIGNS_HPP
