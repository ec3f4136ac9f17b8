#ifndef BGRIP_DYNAMICS_SIMULATE_HPP
#define BGRIP_DYNAMICS_SIMULATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "bgrip/core/energy_1dof.hpp"
#include "bgrip/core/settings.hpp"
#include "bgrip/errors.hpp"
#include "bgrip/statics/equilibria.hpp"

namespace bgrip {

/// Applied generalised moment tau(t, theta) in N m.
using ExternalMoment = std::function<double(double, double)>;

/// Audit columns are sampled at every step, t = 0 included.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> thetas;
  std::vector<double> velocities;
  std::vector<double> potential;     // U(theta)
  std::vector<double> kinetic;       // J omega^2 / 2
  std::vector<double> dissipated;    // cumulative damping loss
  std::vector<double> external_work; // cumulative work of tau_ext

  [[nodiscard]] std::size_t size() const { return times.size(); }
  [[nodiscard]] double mechanical_energy(std::size_t i) const { return potential[i] + kinetic[i]; }
};

/// State of J theta'' = -U'(theta) - c theta' + tau, augmented with the
/// dissipated energy and external work so the audit integrates with the
/// same accuracy as the motion.
struct DynState {
  double t = 0.0;
  double theta = 0.0;
  double omega = 0.0;
  double dissipated = 0.0;
  double work = 0.0;
};

class Rk4Stepper {
public:
  Rk4Stepper(const GripperDesign &design, ExternalMoment tau, double dt)
      : design_(design), tau_(std::move(tau)), dt_(dt) {}

  void step(DynState &s) const {
    const double h = dt_;
    const Deriv k1 = eval(s.t, s.theta, s.omega);
    const Deriv k2 = eval(s.t + 0.5 * h, s.theta + 0.5 * h * k1.dtheta, s.omega + 0.5 * h * k1.domega);
    const Deriv k3 = eval(s.t + 0.5 * h, s.theta + 0.5 * h * k2.dtheta, s.omega + 0.5 * h * k2.domega);
    const Deriv k4 = eval(s.t + h, s.theta + h * k3.dtheta, s.omega + h * k3.domega);
    s.theta += h / 6.0 * (k1.dtheta + 2.0 * k2.dtheta + 2.0 * k3.dtheta + k4.dtheta);
    s.omega += h / 6.0 * (k1.domega + 2.0 * k2.domega + 2.0 * k3.domega + k4.domega);
    s.dissipated += h / 6.0 * (k1.ddiss + 2.0 * k2.ddiss + 2.0 * k3.ddiss + k4.ddiss);
    s.work += h / 6.0 * (k1.dwork + 2.0 * k2.dwork + 2.0 * k3.dwork + k4.dwork);
    s.t += h;
  }

  [[nodiscard]] double dt() const { return dt_; }

private:
  struct Deriv {
    double dtheta, domega, ddiss, dwork;
  };

  [[nodiscard]] Deriv eval(double t, double theta, double omega) const {
    const double tau = tau_ ? tau_(t, theta) : 0.0;
    const double c = design_.damping;
    return {omega, (-gradient_1dof(theta, design_) - c * omega + tau) / design_.inertia,
            c * omega * omega, tau * omega};
  }

  const GripperDesign &design_;
  ExternalMoment tau_;
  double dt_;
};

/// sqrt(|U''| / J) at the equilibrium closest to theta; falls back to the
/// local curvature when the landscape has no equilibrium.
inline double local_frequency_near(const GripperDesign &design, double theta,
                                   const SolverSettings &s = {}) {
  const auto report = find_equilibria_1dof(design, s);
  double curv = curvature_1dof(theta, design);
  double best = std::numeric_limits<double>::infinity();
  for (const auto &eq : report.equilibria) {
    if (std::abs(eq.theta - theta) < best) {
      best = std::abs(eq.theta - theta);
      curv = eq.curvature;
    }
  }
  return std::sqrt(std::abs(curv) / design.inertia);
}

/// Fixed-step RK4 integration of the passive 1-DOF dynamics from t = 0 to
/// t_end. dt must satisfy dt <= 0.05 / omega at the nearest equilibrium.
inline Trajectory simulate_1dof(const GripperDesign &design, double theta0, double omega0,
                                const ExternalMoment &tau, double dt, double t_end,
                                const SolverSettings &s = {}) {
  if (!(dt > 0.0) || !(t_end > dt))
    throw ContractViolation("simulation needs dt > 0 and t_end > dt");
  const double omega_nat = local_frequency_near(design, theta0, s);
  if (dt * omega_nat > 0.05)
    throw StepSizeError("dt = " + std::to_string(dt) + " s exceeds 0.05 / omega_nat = " +
                        std::to_string(0.05 / omega_nat) + " s");

  const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
  Trajectory tr;
  for (auto *v : {&tr.times, &tr.thetas, &tr.velocities, &tr.potential, &tr.kinetic,
                  &tr.dissipated, &tr.external_work})
    v->reserve(steps + 1);
  const auto record = [&](const DynState &st) {
    tr.times.push_back(st.t);
    tr.thetas.push_back(st.theta);
    tr.velocities.push_back(st.omega);
    tr.potential.push_back(total_energy_1dof(st.theta, design));
    tr.kinetic.push_back(0.5 * design.inertia * st.omega * st.omega);
    tr.dissipated.push_back(st.dissipated);
    tr.external_work.push_back(st.work);
  };

  const Rk4Stepper stepper(design, tau, dt);
  DynState st{0.0, theta0, omega0, 0.0, 0.0};
  record(st);
  for (std::size_t k = 1; k <= steps; ++k) {
    stepper.step(st);
    st.t = static_cast<double>(k) * dt; // no accumulated drift in t
    record(st);
  }
  return tr;
}

/// Natural frequency sqrt(U''/J) of small oscillations about a stable equilibrium.
inline double natural_frequency(const GripperDesign &design, const Equilibrium &at) {
  if (at.stability != Stability::stable || !(at.curvature > 0.0))
    throw ContractViolation("natural frequency is defined only at stable equilibria");
  return std::sqrt(at.curvature / design.inertia);
}

} // namespace bgrip

#endif // BGRIP_DYNAMICS_SIMULATE_HPP
