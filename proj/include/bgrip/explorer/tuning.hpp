#ifndef BGRIP_EXPLORER_TUNING_HPP
#define BGRIP_EXPLORER_TUNING_HPP

#include <cmath>
#include <string>

#include "bgrip/core/settings.hpp"
#include "bgrip/dynamics/gravity.hpp"
#include "bgrip/errors.hpp"

namespace bgrip {

struct TuneResult {
  double width_scale = 1.0;
  double lo = 1.0; // barrier(lo) <= target
  double hi = 1.0; // barrier(hi) >= target
  double barrier = 0.0;
  int iterations = 0;
};

/// Open-state barrier with the ring trimmed to width w; zero once the open
/// state has disappeared.
inline double trimmed_barrier(const GripperDesign &design, double w, const SolverSettings &s) {
  GripperDesign d = design;
  d.ring.width_scale = w;
  const auto b = open_state_barrier(d, s);
  return b ? *b : 0.0;
}

/// Bisection on ring width_scale in (0, 1] for a target open-state barrier.
/// Stops once |barrier - target| < tol or after the iteration cap; the final
/// bracket is returned with the result.
inline TuneResult tune_ring_width(const GripperDesign &design, double target, double tol,
                                  const Settings &s = {}) {
  constexpr double kMinWidth = 1e-6;
  const double b_full = trimmed_barrier(design, 1.0, s.solver);
  if (b_full == 0.0)
    throw NotBistable();
  if (!(target > 0.0) || target > b_full)
    throw TargetUnreachable("target barrier " + std::to_string(target) +
                            " J is outside (0, " + std::to_string(b_full) + "] J");
  if (std::abs(b_full - target) < tol)
    return {1.0, 1.0, 1.0, b_full, 0};
  const double b_min = trimmed_barrier(design, kMinWidth, s.solver);
  if (b_min > target)
    throw TargetUnreachable("barrier " + std::to_string(b_min) +
                            " J at vanishing ring width still exceeds the target");

  constexpr int kProbe = 16;
  double prev = b_min;
  for (int i = 1; i <= kProbe; ++i) {
    const double w = kMinWidth + (1.0 - kMinWidth) * i / kProbe;
    const double b = trimmed_barrier(design, w, s.solver);
    if (b < prev && b < std::numeric_limits<double>::infinity())
      throw ContractViolation("barrier is not monotone in width_scale near " + std::to_string(w));
    prev = b;
  }

  TuneResult r;
  r.lo = kMinWidth;
  r.hi = 1.0;
  r.barrier = b_full;
  r.width_scale = 1.0;
  for (r.iterations = 1; r.iterations <= s.explorer.tune_max_iter; ++r.iterations) {
    const double mid = 0.5 * (r.lo + r.hi);
    const double b = trimmed_barrier(design, mid, s.solver);
    r.width_scale = mid;
    r.barrier = b;
    if (std::abs(b - target) < tol)
      break;
    if (b < target)
      r.lo = mid;
    else
      r.hi = mid;
  }
  return r;
}

inline TuneResult tune_ring_width(const GripperDesign &design, double target,
                                  const Settings &s = {}) {
  return tune_ring_width(design, target, s.explorer.tune_tol, s);
}

/// Width at which gravity alone starts to trigger closure: bisection to the
/// iteration cap on the gravity-trigger tolerance. Widths at or below lo
/// trigger, widths at or above hi hold the open state.
inline TuneResult gravity_marginal_width(const GripperDesign &design, const Settings &s = {}) {
  auto r = tune_ring_width(design, s.explorer.gravity_barrier_tol, 0.0, s);
  r.width_scale = r.hi;
  r.barrier = trimmed_barrier(design, r.hi, s.solver);
  return r;
}

} // namespace bgrip

#endif // BGRIP_EXPLORER_TUNING_HPP
