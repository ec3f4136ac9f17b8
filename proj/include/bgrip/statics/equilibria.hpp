#ifndef BGRIP_STATICS_EQUILIBRIA_HPP
#define BGRIP_STATICS_EQUILIBRIA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "bgrip/core/energy_1dof.hpp"
#include "bgrip/core/settings.hpp"
#include "bgrip/core/types.hpp"
#include "bgrip/errors.hpp"

namespace bgrip {

enum class Stability { stable, unstable };

inline const char *to_string(Stability s) { return s == Stability::stable ? "stable" : "unstable"; }

struct Equilibrium {
  double theta = 0.0;
  double energy = 0.0;
  Stability stability = Stability::stable;
  double curvature = 0.0; // U'' at theta, N m / rad
};

struct EquilibriumReport {
  std::vector<Equilibrium> equilibria; // ascending theta
  std::optional<std::size_t> open;
  std::optional<std::size_t> saddle;
  std::optional<std::size_t> closed;
  std::optional<double> snap_through_energy;

  [[nodiscard]] bool bistable() const { return snap_through_energy.has_value(); }

  [[nodiscard]] const Equilibrium &open_state() const { return at(open); }
  [[nodiscard]] const Equilibrium &saddle_state() const { return at(saddle); }
  [[nodiscard]] const Equilibrium &closed_state() const { return at(closed); }

private:
  [[nodiscard]] const Equilibrium &at(const std::optional<std::size_t> &idx) const {
    if (!idx)
      throw NotBistable();
    return equilibria[*idx];
  }
};

namespace detail {

inline double bisect_root(const GripperDesign &design, double lo, double hi, double g_lo,
                          double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    const double g_mid = gradient_1dof(mid, design);
    if (g_mid == 0.0)
      return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline Equilibrium make_equilibrium(double theta, const GripperDesign &design) {
  const double curv = curvature_1dof(theta, design);
  return {theta, total_energy_1dof(theta, design),
          curv > 0.0 ? Stability::stable : Stability::unstable, curv};
}

} // namespace detail

/// Locates every sign change of dU/dtheta on a uniform grid and refines it by
/// bisection. The report is bistable only for exactly three equilibria
/// ordered stable / unstable / stable.
inline EquilibriumReport find_equilibria_1dof(const GripperDesign &design, double theta_min,
                                              double theta_max, std::size_t grid_n,
                                              double root_tol = 1e-12) {
  if (!(theta_min < theta_max))
    throw ContractViolation("equilibrium search needs theta_min < theta_max");
  if (grid_n < 100)
    throw ContractViolation("equilibrium search needs grid_n >= 100");

  EquilibriumReport report;
  const double step = (theta_max - theta_min) / static_cast<double>(grid_n - 1);
  double prev_theta = theta_min;
  double prev_g = gradient_1dof(prev_theta, design);
  if (prev_g == 0.0)
    report.equilibria.push_back(detail::make_equilibrium(prev_theta, design));
  for (std::size_t i = 1; i < grid_n; ++i) {
    const double theta = theta_min + step * static_cast<double>(i);
    const double g = gradient_1dof(theta, design);
    if (g == 0.0) {
      report.equilibria.push_back(detail::make_equilibrium(theta, design));
    } else if (prev_g != 0.0 && (g < 0.0) != (prev_g < 0.0)) {
      const double root = detail::bisect_root(design, prev_theta, theta, prev_g, root_tol);
      report.equilibria.push_back(detail::make_equilibrium(root, design));
    }
    prev_theta = theta;
    prev_g = g;
  }

  const auto &eq = report.equilibria;
  if (eq.size() == 3 && eq[0].stability == Stability::stable &&
      eq[1].stability == Stability::unstable && eq[2].stability == Stability::stable) {
    report.open = 0;
    report.saddle = 1;
    report.closed = 2;
    report.snap_through_energy = eq[1].energy - eq[0].energy;
  }
  return report;
}

inline EquilibriumReport find_equilibria_1dof(const GripperDesign &design,
                                              const SolverSettings &s = {}) {
  return find_equilibria_1dof(design, s.theta_min, s.theta_max, s.grid_n, s.root_tol);
}

/// Barrier from the open stable state to the transition state.
inline double snap_through_energy(const GripperDesign &design, const SolverSettings &s = {}) {
  const auto report = find_equilibria_1dof(design, s);
  if (!report.bistable())
    throw NotBistable();
  return *report.snap_through_energy;
}

/// Smallest quasi-static closing moment that carries the open state over the
/// barrier: the largest dU/dtheta between the open state and the saddle.
inline double trigger_moment(const GripperDesign &design, const EquilibriumReport &report) {
  if (!report.bistable())
    throw NotBistable();
  const double lo = report.open_state().theta;
  const double hi = report.saddle_state().theta;
  constexpr int kScan = 2000;
  int best = 0;
  double best_g = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kScan; ++i) {
    const double g = gradient_1dof(lo + (hi - lo) * i / kScan, design);
    if (g > best_g) {
      best_g = g;
      best = i;
    }
  }
  // Golden-section refinement on the bracketing cells.
  double a = lo + (hi - lo) * std::max(best - 1, 0) / kScan;
  double b = lo + (hi - lo) * std::min(best + 1, kScan) / kScan;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double gc = gradient_1dof(c, design);
  double gd = gradient_1dof(d, design);
  for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - ratio * (b - a);
      gc = gradient_1dof(c, design);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + ratio * (b - a);
      gd = gradient_1dof(d, design);
    }
  }
  return std::max({best_g, gc, gd});
}

inline double trigger_moment(const GripperDesign &design, const SolverSettings &s = {}) {
  return trigger_moment(design, find_equilibria_1dof(design, s));
}

} // namespace bgrip

#endif // BGRIP_STATICS_EQUILIBRIA_HPP
