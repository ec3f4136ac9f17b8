#ifndef BGRIP_EXPLORER_GRIP_HPP
#define BGRIP_EXPLORER_GRIP_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "bgrip/core/arc.hpp"
#include "bgrip/core/energy_1dof.hpp"
#include "bgrip/errors.hpp"
#include "bgrip/statics/equilibria.hpp"

namespace bgrip {

/// Distance from the gripper axis to the fingertip of a constant-curvature
/// finger bent by theta (positive bends toward the axis).
inline double tip_span(const GripperDesign &d, double theta) {
  return d.base_halfspan - d.finger.length * arc::end_lateral(theta).f;
}

/// Straight-line distance from finger root to tip.
inline double tip_chord(const GripperDesign &d, double theta) {
  const double c = arc::end_lateral(theta).f;
  const double s = arc::end_axial(theta).f;
  return d.finger.length * std::hypot(c, s);
}

struct GripEstimate {
  double force = 0.0;         // N, normal to the chord at the tip
  double contact_angle = 0.0; // rad
  double moment_arm = 0.0;    // m
};

/// Blocked-angle grip force: the finger stops where its tip meets an object
/// of the given half-width; the closing moment there divided by the root-tip
/// chord gives the tip force. No force if the finger would reach its closed
/// state first, or if contact happens before the transition state.
inline GripEstimate grip_force_estimate(const GripperDesign &design, double object_halfwidth,
                                        const EquilibriumReport &report) {
  if (!report.bistable())
    throw NotBistable();
  const double open = report.open_state().theta;
  const double closed = report.closed_state().theta;
  if (object_halfwidth >= tip_span(design, open))
    throw ObjectTooLarge("object half-width " + std::to_string(object_halfwidth) +
                         " m does not fit inside the open tip span " +
                         std::to_string(tip_span(design, open)) + " m");
  GripEstimate g;
  if (object_halfwidth <= tip_span(design, closed)) {
    g.contact_angle = closed;
    g.moment_arm = tip_chord(design, closed);
    return g;
  }
  // tip_span decreases monotonically on [open, closed] for |theta| < 2.3 rad
  double lo = open, hi = closed;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tip_span(design, mid) > object_halfwidth ? lo : hi) = mid;
  }
  g.contact_angle = 0.5 * (lo + hi);
  g.moment_arm = tip_chord(design, g.contact_angle);
  g.force = std::max(0.0, -gradient_1dof(g.contact_angle, design)) / g.moment_arm;
  return g;
}

inline GripEstimate grip_force_estimate(const GripperDesign &design, double object_halfwidth,
                                        const SolverSettings &s = {}) {
  return grip_force_estimate(design, object_halfwidth, find_equilibria_1dof(design, s));
}

} // namespace bgrip

#endif // BGRIP_EXPLORER_GRIP_HPP
