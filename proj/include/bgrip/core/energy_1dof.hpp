#ifndef BGRIP_CORE_ENERGY_1DOF_HPP
#define BGRIP_CORE_ENERGY_1DOF_HPP

#include <cstddef>
#include <vector>

#include "bgrip/core/arc.hpp"
#include "bgrip/core/constitutive.hpp"
#include "bgrip/core/types.hpp"
#include "bgrip/errors.hpp"

// Reduced model: the finger bends with uniform curvature and the tip bend
// angle theta is the only coordinate. Positive theta closes the gripper.

namespace bgrip {

/// Elastic energy of the finger relative to its stress-free shape.
inline double finger_energy_1dof(double theta, const FingerDesign &finger) {
  const double kappa = (theta - finger.rest_angle()) / finger.length;
  return finger.length * bending_energy_density(kappa, finger.section, finger.material);
}

inline double finger_moment_1dof(double theta, const FingerDesign &finger) {
  const double kappa = (theta - finger.rest_angle()) / finger.length;
  return moment_curvature(kappa, finger.section, finger.material);
}

/// Quartic double well with zero-energy minima at well_center +- well_halfwidth.
inline double ring_energy_1dof(double theta, const RingDesign &ring) {
  const double d2 = ring.well_halfwidth * ring.well_halfwidth;
  const double x = theta - ring.well_center;
  const double q = x * x - d2;
  return ring.effective_stiffness() / (8.0 * d2) * q * q;
}

inline double ring_moment_1dof(double theta, const RingDesign &ring) {
  const double d2 = ring.well_halfwidth * ring.well_halfwidth;
  const double x = theta - ring.well_center;
  return ring.effective_stiffness() / (2.0 * d2) * (x * x - d2) * x;
}

/// Gravity potential of the distributed finger mass plus a tip payload.
inline double gravity_energy_1dof(double theta, const GripperDesign &design) {
  if (design.gravity == 0.0)
    return 0.0;
  const auto &f = design.finger;
  const double com = f.length * arc::mean_lateral(theta).f;
  const double tip = f.length * arc::end_lateral(theta).f;
  return -design.gravity * (f.mass() * com + design.payload_mass * tip);
}

inline double gravity_moment_1dof(double theta, const GripperDesign &design) {
  if (design.gravity == 0.0)
    return 0.0;
  const auto &f = design.finger;
  const double dcom = f.length * arc::mean_lateral(theta).df;
  const double dtip = f.length * arc::end_lateral(theta).df;
  return -design.gravity * (f.mass() * dcom + design.payload_mass * dtip);
}

struct EnergyTerms {
  double finger = 0.0;
  double ring = 0.0;
  double gravity = 0.0;

  [[nodiscard]] double total() const { return finger + ring + gravity; }
};

inline EnergyTerms energy_terms_1dof(double theta, const GripperDesign &design) {
  return {finger_energy_1dof(theta, design.finger), ring_energy_1dof(theta, design.ring),
          gravity_energy_1dof(theta, design)};
}

inline double total_energy_1dof(double theta, const GripperDesign &design) {
  return energy_terms_1dof(theta, design).total();
}

/// dU/dtheta.
inline double gradient_1dof(double theta, const GripperDesign &design) {
  return finger_moment_1dof(theta, design.finger) + ring_moment_1dof(theta, design.ring) +
         gravity_moment_1dof(theta, design);
}

/// d2U/dtheta2 by central difference of the analytic gradient.
inline double curvature_1dof(double theta, const GripperDesign &design, double h = 1e-6) {
  return (gradient_1dof(theta + h, design) - gradient_1dof(theta - h, design)) / (2.0 * h);
}

struct EnergyLandscape {
  std::vector<double> theta_grid;
  std::vector<double> total;
  std::vector<double> finger;
  std::vector<double> ring;
  std::vector<double> gravity;

  [[nodiscard]] std::size_t size() const { return theta_grid.size(); }
};

/// Samples the energy decomposition on n equally spaced angles in [lo, hi].
inline EnergyLandscape sample_landscape(const GripperDesign &design, double lo, double hi,
                                        std::size_t n) {
  if (n < 2 || !(hi > lo))
    throw ContractViolation("landscape needs n >= 2 and hi > lo");
  EnergyLandscape land;
  land.theta_grid.reserve(n);
  for (auto *v : {&land.total, &land.finger, &land.ring, &land.gravity})
    v->reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    const auto terms = energy_terms_1dof(theta, design);
    land.theta_grid.push_back(theta);
    land.finger.push_back(terms.finger);
    land.ring.push_back(terms.ring);
    land.gravity.push_back(terms.gravity);
    land.total.push_back(terms.total());
  }
  return land;
}

} // namespace bgrip

#endif // BGRIP_CORE_ENERGY_1DOF_HPP
