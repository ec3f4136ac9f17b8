#ifndef BGRIP_DYNAMICS_GRAVITY_HPP
#define BGRIP_DYNAMICS_GRAVITY_HPP

#include <cmath>
#include <limits>
#include <optional>

#include "bgrip/core/settings.hpp"
#include "bgrip/statics/equilibria.hpp"

namespace bgrip {

struct GravityCheck {
  bool triggered = false;
  double margin = 0.0; // J, barrier left between the open state and closure
};

/// Barrier guarding the open state: the open state is the lowest-angle stable
/// equilibrium on the open side of the ring well centre. Returns nullopt when
/// no such state exists and +infinity when nothing stands between it and a
/// monostable open landscape (no transition state above it).
inline std::optional<double> open_state_barrier(const GripperDesign &design,
                                                const SolverSettings &s = {}) {
  const auto report = find_equilibria_1dof(design, s);
  const auto &eq = report.equilibria;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    if (eq[i].stability != Stability::stable || eq[i].theta >= design.ring.well_center)
      continue;
    for (std::size_t j = i + 1; j < eq.size(); ++j)
      if (eq[j].stability == Stability::unstable)
        return eq[j].energy - eq[i].energy;
    return std::numeric_limits<double>::infinity();
  }
  return std::nullopt;
}

/// Re-evaluates the landscape with gravity of the design's magnitude oriented
/// along (+1) or against (-1) the closing direction. Triggered when the open
/// state is gone or its barrier is below the tolerance.
inline GravityCheck gravity_trigger_check(const GripperDesign &design, int orientation_sign,
                                          const Settings &s = {}) {
  GripperDesign d = design;
  d.gravity = (orientation_sign >= 0 ? 1.0 : -1.0) * std::abs(design.gravity);
  const auto barrier = open_state_barrier(d, s.solver);
  if (!barrier)
    return {true, 0.0};
  return {*barrier < s.explorer.gravity_barrier_tol, *barrier};
}

} // namespace bgrip

#endif // BGRIP_DYNAMICS_GRAVITY_HPP
