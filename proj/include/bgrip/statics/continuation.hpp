#ifndef BGRIP_STATICS_CONTINUATION_HPP
#define BGRIP_STATICS_CONTINUATION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bgrip/core/energy_1dof.hpp"
#include "bgrip/core/settings.hpp"
#include "bgrip/errors.hpp"
#include "bgrip/statics/equilibria.hpp"

namespace bgrip {

struct ContinuationPoint {
  double moment = 0.0; // applied closing moment, N m
  double theta = 0.0;
  double energy = 0.0; // elastic + gravity energy U(theta), load potential excluded
};

struct FoldPoint {
  double moment = 0.0;       // first load at which the tracked branch was lost
  double theta_before = 0.0; // last converged angle on the old branch
  double theta_after = 0.0;  // angle after relaxing onto the new branch
};

struct ContinuationPath {
  std::vector<ContinuationPoint> points;
  std::vector<FoldPoint> folds;
};

struct RelaxResult {
  double theta = 0.0;
  bool converged = false;
  bool crossed_inflection = false; // some iterate had U'' <= 0
  int iterations = 0;
};

/// Minimises U(theta) - moment * theta from a seed by damped Newton with
/// step halving; negative curvature falls back to a bounded descent step.
inline RelaxResult relax_under_moment(const GripperDesign &design, double moment, double seed,
                                      const SolverSettings &s = {}, double max_step = 0.25) {
  const auto potential = [&](double th) { return total_energy_1dof(th, design) - moment * th; };
  RelaxResult r{seed, false, false, 0};
  double theta = seed;
  for (int it = 0; it < s.newton_max_iter; ++it) {
    r.iterations = it + 1;
    const double g = gradient_1dof(theta, design) - moment;
    if (std::abs(g) < s.gradient_tol) {
      r.converged = true;
      break;
    }
    const double h = curvature_1dof(theta, design);
    double step;
    if (h > 0.0) {
      step = -g / h;
    } else {
      r.crossed_inflection = true;
      step = -std::copysign(max_step, g);
    }
    step = std::clamp(step, -max_step, max_step);

    const double p0 = potential(theta);
    bool accepted = false;
    for (int k = 0; k <= s.max_halvings; ++k) {
      const double trial = theta + step;
      const double g_trial = gradient_1dof(trial, design) - moment;
      // Armijo decrease, or a contracting residual once energy differences
      // drop below round-off.
      if (potential(trial) <= p0 - 1e-4 * std::abs(step * g) ||
          std::abs(g_trial) < 0.5 * std::abs(g)) {
        theta = trial;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted)
      break;
  }
  if (curvature_1dof(theta, design) <= 0.0)
    r.crossed_inflection = true;
  r.theta = theta;
  return r;
}

namespace detail {

/// True when U'' <= 0 somewhere between a and b, i.e. the two angles do not
/// lie on one stable branch.
inline bool spans_inflection(const GripperDesign &design, double a, double b) {
  constexpr int kSamples = 64;
  for (int i = 0; i <= kSamples; ++i)
    if (curvature_1dof(a + (b - a) * i / kSamples, design) <= 0.0)
      return true;
  return false;
}

} // namespace detail

/// Quasi-static ramp of a closing moment from 0 to tau_max in n_steps equal
/// loads, each solved from the previous equilibrium. A fold is recorded
/// wherever the tracked branch disappears; the path continues on the branch
/// the relaxation lands on.
inline ContinuationPath continuation_ramped_load(const GripperDesign &design, double tau_max,
                                                 std::size_t n_steps,
                                                 const SolverSettings &s = {}) {
  if (n_steps < 10)
    throw ContractViolation("continuation needs n_steps >= 10");
  const auto report = find_equilibria_1dof(design, s);
  double theta = 0.0;
  bool found = false;
  for (const auto &eq : report.equilibria) {
    if (eq.stability == Stability::stable) {
      theta = eq.theta;
      found = true;
      break;
    }
  }
  if (!found)
    throw NonConvergence("no stable equilibrium to start the load ramp from");

  ContinuationPath path;
  path.points.reserve(n_steps);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double tau = tau_max * static_cast<double>(k) / static_cast<double>(n_steps - 1);
    const auto r = relax_under_moment(design, tau, theta, s);
    if (!r.converged)
      throw NonConvergence("load step " + std::to_string(k) + " (moment " + std::to_string(tau) +
                           " N m) did not converge");
    if (detail::spans_inflection(design, theta, r.theta))
      path.folds.push_back({tau, theta, r.theta});
    theta = r.theta;
    path.points.push_back({tau, theta, total_energy_1dof(theta, design)});
  }
  return path;
}

} // namespace bgrip

#endif // BGRIP_STATICS_CONTINUATION_HPP
