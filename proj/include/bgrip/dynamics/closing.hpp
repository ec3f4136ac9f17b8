#ifndef BGRIP_DYNAMICS_CLOSING_HPP
#define BGRIP_DYNAMICS_CLOSING_HPP

#include <algorithm>
#include <cmath>

#include "bgrip/core/settings.hpp"
#include "bgrip/dynamics/simulate.hpp"
#include "bgrip/errors.hpp"
#include "bgrip/statics/equilibria.hpp"

namespace bgrip {

struct ClosingEvent {
  bool triggered = false;
  double closing_time = 0.0; // s, meaningful only when triggered
  double peak_velocity = 0.0; // rad/s
};

/// Integration step used for passive runs: a fixed fraction of the period of
/// the stiffest equilibrium.
inline double passive_time_step(const GripperDesign &design, const EquilibriumReport &report,
                                const DynamicsSettings &ds) {
  double omega = 0.0;
  for (const auto &eq : report.equilibria)
    omega = std::max(omega, std::sqrt(std::abs(eq.curvature) / design.inertia));
  if (!(omega > 0.0))
    throw ContractViolation("landscape has no curvature to set a time step");
  return ds.dt_fraction / omega;
}

/// Closing event after an impulse delivered at the open state. Closure is the
/// first entry into the closure band around the closed state that is then
/// held for the dwell time. A run whose mechanical energy falls below the
/// saddle while still in the open basin can never close and stops early.
inline ClosingEvent closing_time(const GripperDesign &design, double impulse,
                                 const EquilibriumReport &report, const DynamicsSettings &ds = {}) {
  if (!report.bistable())
    throw NotBistable();
  const double theta_open = report.open_state().theta;
  const double theta_saddle = report.saddle_state().theta;
  const double theta_closed = report.closed_state().theta;
  const double u_saddle = report.saddle_state().energy;

  const double dt = passive_time_step(design, report, ds);
  const Rk4Stepper stepper(design, {}, dt);
  DynState st{0.0, theta_open, impulse / design.inertia, 0.0, 0.0};
  ClosingEvent ev;
  ev.peak_velocity = std::abs(st.omega);
  bool inside = false;
  double entered = 0.0; // time of the current band entry, valid while inside
  const auto steps = static_cast<long long>(std::ceil(ds.t_max / dt));
  for (long long k = 1; k <= steps; ++k) {
    stepper.step(st);
    st.t = static_cast<double>(k) * dt;
    ev.peak_velocity = std::max(ev.peak_velocity, std::abs(st.omega));
    if (std::abs(st.theta - theta_closed) < ds.closure_band) {
      if (!inside)
        entered = st.t;
      inside = true;
      if (st.t - entered >= ds.closure_dwell - 0.5 * dt) {
        ev.triggered = true;
        ev.closing_time = entered;
        return ev;
      }
    } else {
      inside = false;
    }
    const double e = total_energy_1dof(st.theta, design) +
                     0.5 * design.inertia * st.omega * st.omega;
    if (e < u_saddle && st.theta < theta_saddle)
      return ev; // trapped in the open basin
  }
  return ev;
}

inline ClosingEvent closing_time(const GripperDesign &design, double impulse,
                                 const Settings &s = {}) {
  return closing_time(design, impulse, find_equilibria_1dof(design, s.solver), s.dynamics);
}

/// Which basin a damped run from the open state with the given impulse ends
/// in: true once the mechanical energy is below the saddle on the closed side.
inline bool impulse_crosses(const GripperDesign &design, double impulse,
                            const EquilibriumReport &report, const DynamicsSettings &ds) {
  const double theta_saddle = report.saddle_state().theta;
  const double u_saddle = report.saddle_state().energy;
  const double dt = passive_time_step(design, report, ds);
  const Rk4Stepper stepper(design, {}, dt);
  DynState st{0.0, report.open_state().theta, impulse / design.inertia, 0.0, 0.0};
  const auto steps = static_cast<long long>(std::ceil(ds.t_max / dt));
  for (long long k = 1; k <= steps; ++k) {
    stepper.step(st);
    const double e = total_energy_1dof(st.theta, design) +
                     0.5 * design.inertia * st.omega * st.omega;
    if (e < u_saddle)
      return st.theta > theta_saddle;
  }
  return st.theta > theta_saddle;
}

/// Smallest impulse at the open state that ends in the closed basin, by
/// bisection on damped runs. The undamped bound sqrt(2 J barrier) is a
/// lower limit.
inline double minimum_trigger_impulse(const GripperDesign &design,
                                      const EquilibriumReport &report,
                                      const DynamicsSettings &ds = {}) {
  if (!report.bistable())
    throw NotBistable();
  const double p_energy = std::sqrt(2.0 * design.inertia * *report.snap_through_energy);
  double lo = p_energy;
  double hi = 2.0 * p_energy;
  for (int k = 0; !impulse_crosses(design, hi, report, ds); ++k) {
    if (k > 60)
      throw NonConvergence("no impulse found that triggers closure");
    lo = hi;
    hi *= 2.0;
  }
  while ((hi - lo) > ds.impulse_rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (impulse_crosses(design, mid, report, ds))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

/// The trigger impulse used for closing-time runs: a fixed multiple of the minimum.
inline double standard_trigger_impulse(const GripperDesign &design,
                                       const EquilibriumReport &report,
                                       const DynamicsSettings &ds = {}) {
  return ds.trigger_impulse_factor * minimum_trigger_impulse(design, report, ds);
}

struct Calibration {
  double inertia = 0.0;    // kg m^2
  double damping = 0.0;    // N m s / rad
  double impulse = 0.0;    // N m s
  double closing_time = 0.0; // s
};

/// Damping for a given inertia: the configured fraction of critical damping
/// at the closed state.
inline double damping_for(double inertia, const EquilibriumReport &report,
                          const DynamicsSettings &ds) {
  return ds.damping_ratio * 2.0 * std::sqrt(report.closed_state().curvature * inertia);
}

/// Fits J (and c through the damping ratio) so the design closes in the
/// target time under its standard trigger impulse. Bisection on log J.
inline Calibration calibrate_dynamics(const GripperDesign &design, const Settings &s = {}) {
  const auto report = find_equilibria_1dof(design, s.solver);
  if (!report.bistable())
    throw NotBistable();
  const auto run = [&](double inertia) {
    GripperDesign d = design;
    d.inertia = inertia;
    d.damping = damping_for(inertia, report, s.dynamics);
    const double p = standard_trigger_impulse(d, report, s.dynamics);
    const auto ev = closing_time(d, p, report, s.dynamics);
    if (!ev.triggered)
      throw NonConvergence("calibration run did not close");
    return Calibration{inertia, d.damping, p, ev.closing_time};
  };
  const double target = s.dynamics.target_closing_time;
  // Closing time scales as sqrt(J) at fixed damping ratio and impulse energy.
  Calibration c0 = run(design.inertia);
  double guess = design.inertia * (target / c0.closing_time) * (target / c0.closing_time);
  double lo = guess / 2.0, hi = guess * 2.0;
  Calibration clo = run(lo), chi = run(hi);
  for (int k = 0; clo.closing_time > target; ++k) {
    if (k > 40)
      throw TargetUnreachable("closing time target below reachable range");
    lo /= 2.0;
    clo = run(lo);
  }
  for (int k = 0; chi.closing_time < target; ++k) {
    if (k > 40)
      throw TargetUnreachable("closing time target above reachable range");
    hi *= 2.0;
    chi = run(hi);
  }
  Calibration best = std::abs(clo.closing_time - target) < std::abs(chi.closing_time - target) ? clo : chi;
  for (int it = 0; it < 60 && hi / lo > 1.0 + 1e-10; ++it) {
    const double mid = std::sqrt(lo * hi);
    const Calibration cm = run(mid);
    if (std::abs(cm.closing_time - target) < std::abs(best.closing_time - target))
      best = cm;
    if (cm.closing_time < target)
      lo = mid;
    else
      hi = mid;
    if (std::abs(cm.closing_time - target) < 1e-9)
      break;
  }
  return best;
}

} // namespace bgrip

#endif // BGRIP_DYNAMICS_CLOSING_HPP
