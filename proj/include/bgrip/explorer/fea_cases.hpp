#ifndef BGRIP_EXPLORER_FEA_CASES_HPP
#define BGRIP_EXPLORER_FEA_CASES_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bgrip/core/settings.hpp"
#include "bgrip/errors.hpp"
#include "bgrip/explorer/sweep.hpp"

namespace bgrip {

struct FeaCase {
  std::string name;
  GripperDesign design;
  DesignMetrics metrics;
};

enum class AssertionStatus { pass, fail, skipped };

inline const char *to_string(AssertionStatus s) {
  switch (s) {
  case AssertionStatus::pass:
    return "pass";
  case AssertionStatus::fail:
    return "fail";
  default:
    return "skipped";
  }
}

struct FeaAssertion {
  std::string name;
  std::string statement;
  AssertionStatus status = AssertionStatus::skipped;
  std::string detail;
};

struct FeaCaseReport {
  std::vector<FeaCase> cases; // baseline, ring_higher, ring_lower, thinner_ring, higher_curvature
  std::vector<FeaAssertion> assertions;
  // best point of the curvature-up / ring-lower sweep
  double matched_kappa = 0.0;
  double matched_attach = 0.0;
  double matched_grip_force = 0.0;
  double matched_barrier = 0.0;

  [[nodiscard]] const FeaCase &at(const std::string &name) const {
    for (const auto &c : cases)
      if (c.name == name)
        return c;
    throw ContractViolation("no case named " + name);
  }
  [[nodiscard]] bool all_passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const auto &a) { return a.status != AssertionStatus::fail; });
  }
};

namespace detail {

inline std::string delta_text(const char *what, double base, double value) {
  return std::string(what) + " " + std::to_string(base) + " -> " + std::to_string(value);
}

} // namespace detail

/// The four morphology changes applied to a base design, their metrics, and
/// the expected orderings of open-state energy, snap-through energy, closing
/// time and grip force.
inline FeaCaseReport reproduce_fea_cases(const GripperDesign &base, const Settings &s = {}) {
  const auto &ex = s.explorer;
  FeaCaseReport rep;
  {
    GripperDesign hi = base, lo = base, thin = base, curv = base;
    hi.ring.attach_fraction = base.ring.attach_fraction - ex.ring_shift;
    lo.ring.attach_fraction = std::min(1.0, base.ring.attach_fraction + ex.ring_shift);
    thin.ring.width_scale = base.ring.width_scale * ex.thin_factor;
    curv.finger.natural_curvature = ex.high_curvature;
    rep.cases = {{"baseline", base, {}},
                 {"ring_higher", hi, {}},
                 {"ring_lower", lo, {}},
                 {"thinner_ring", thin, {}},
                 {"higher_curvature", curv, {}}};
  }
  for (auto &c : rep.cases) {
    if (!validation_errors(c.design).empty())
      continue; // e.g. ring pushed past the finger root: reported as not bistable
    c.metrics = evaluate_design(c.design, s, true, true);
  }
  const auto &b = rep.at("baseline").metrics;
  if (!b.bistable)
    throw NotBistable();

  const auto check = [&](const std::string &name, const std::string &statement,
                         std::initializer_list<const char *> needs, auto &&pred, auto &&detail) {
    FeaAssertion a{name, statement, AssertionStatus::skipped, {}};
    bool ok = true;
    for (const char *n : needs)
      ok = ok && rep.at(n).metrics.bistable;
    if (ok) {
      a.status = pred() ? AssertionStatus::pass : AssertionStatus::fail;
      a.detail = detail();
    } else {
      a.detail = "a compared design is not bistable";
    }
    rep.assertions.push_back(std::move(a));
  };

  const auto &hi = rep.at("ring_higher").metrics;
  const auto &lo = rep.at("ring_lower").metrics;
  const auto &th = rep.at("thinner_ring").metrics;
  const auto &cu = rep.at("higher_curvature").metrics;

  check("ring_higher", "open-state energy and snap-through both decrease", {"ring_higher"},
        [&] { return hi.open_energy < b.open_energy && hi.snap_through < b.snap_through; },
        [&] {
          return detail::delta_text("open", b.open_energy, hi.open_energy) + "; " +
                 detail::delta_text("snap", b.snap_through, hi.snap_through);
        });
  check("ring_lower", "open-state energy and snap-through both increase", {"ring_lower"},
        [&] { return lo.open_energy > b.open_energy && lo.snap_through > b.snap_through; },
        [&] {
          return detail::delta_text("open", b.open_energy, lo.open_energy) + "; " +
                 detail::delta_text("snap", b.snap_through, lo.snap_through);
        });
  check("thinner_ring",
        "open-state energy and snap-through both decrease, by less than the ring placement changes",
        {"thinner_ring", "ring_higher", "ring_lower"},
        [&] {
          const double d_snap = std::abs(th.snap_through - b.snap_through);
          return th.open_energy < b.open_energy && th.snap_through < b.snap_through &&
                 d_snap < std::abs(hi.snap_through - b.snap_through) &&
                 d_snap < std::abs(lo.snap_through - b.snap_through) &&
                 std::abs(th.open_energy - b.open_energy) < std::abs(hi.open_energy - b.open_energy);
        },
        [&] {
          return detail::delta_text("open", b.open_energy, th.open_energy) + "; " +
                 detail::delta_text("snap", b.snap_through, th.snap_through);
        });
  check("higher_curvature", "open-state energy increases and snap-through decreases",
        {"higher_curvature"},
        [&] { return cu.open_energy > b.open_energy && cu.snap_through < b.snap_through; },
        [&] {
          return detail::delta_text("open", b.open_energy, cu.open_energy) + "; " +
                 detail::delta_text("snap", b.snap_through, cu.snap_through);
        });
  check("ring_lower_closes_fastest", "ring_lower closes before baseline and ring_higher",
        {"ring_higher", "ring_lower"},
        [&] { return lo.closing_time < b.closing_time && lo.closing_time < hi.closing_time; },
        [&] {
          return "closing times higher " + std::to_string(hi.closing_time) + " baseline " +
                 std::to_string(b.closing_time) + " lower " + std::to_string(lo.closing_time);
        });

  // Curvature up and ring down together: a point with more grip force at
  // (nearly) the baseline barrier.
  SweepSpec spec;
  const double k0 = base.finger.natural_curvature;
  const double af0 = base.ring.attach_fraction;
  spec.parameters = {
      {"finger.natural_curvature", linspace(k0, k0 + 2.0 * std::abs(ex.high_curvature - k0), 9)},
      {"ring.attach_fraction", linspace(af0, std::min(1.0, af0 + ex.ring_shift), 7)}};
  const auto table = run_sweep(base, spec, s);
  double best_force = -1.0;
  for (const auto &row : table.rows) {
    const auto &m = row.metrics;
    if (!m.bistable || std::isnan(m.grip_force))
      continue;
    if (std::abs(m.snap_through - b.snap_through) < ex.barrier_match_tol * b.snap_through &&
        m.grip_force > best_force) {
      best_force = m.grip_force;
      rep.matched_kappa = row.values[0];
      rep.matched_attach = row.values[1];
      rep.matched_grip_force = m.grip_force;
      rep.matched_barrier = m.snap_through;
    }
  }
  FeaAssertion force{"force_up_at_equal_barrier",
                     "a curvature-up / ring-lower design grips harder at the baseline barrier",
                     best_force > b.grip_force ? AssertionStatus::pass : AssertionStatus::fail,
                     "baseline force " + std::to_string(b.grip_force) + " N; best matched " +
                         std::to_string(best_force) + " N at kappa0 " +
                         std::to_string(rep.matched_kappa) + ", attach " +
                         std::to_string(rep.matched_attach)};
  rep.assertions.push_back(std::move(force));
  return rep;
}

} // namespace bgrip

#endif // BGRIP_EXPLORER_FEA_CASES_HPP
