#ifndef BGRIP_EXPLORER_SWEEP_HPP
#define BGRIP_EXPLORER_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "bgrip/core/fields.hpp"
#include "bgrip/core/settings.hpp"
#include "bgrip/core/validation.hpp"
#include "bgrip/dynamics/closing.hpp"
#include "bgrip/errors.hpp"
#include "bgrip/explorer/grip.hpp"
#include "bgrip/statics/equilibria.hpp"

namespace bgrip {

struct SweepParameter {
  std::string path; // dotted design key, e.g. ring.stiffness
  std::vector<double> values;
};

struct SweepSpec {
  std::vector<SweepParameter> parameters;
  bool with_grip_force = true;
  bool with_closing_time = false;
};

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0)
    throw ContractViolation("linspace needs at least one point");
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

/// Metrics of one design point. Barrier metrics are NaN on non-bistable rows,
/// as are metrics that were not requested or could not be evaluated.
struct DesignMetrics {
  bool bistable = false;
  double open_energy = std::numeric_limits<double>::quiet_NaN();
  double saddle_energy = std::numeric_limits<double>::quiet_NaN();
  double closed_energy = std::numeric_limits<double>::quiet_NaN();
  double snap_through = std::numeric_limits<double>::quiet_NaN();
  double trigger_moment = std::numeric_limits<double>::quiet_NaN();
  double grip_force = std::numeric_limits<double>::quiet_NaN();
  double closing_time = std::numeric_limits<double>::quiet_NaN();
};

inline DesignMetrics evaluate_design(const GripperDesign &design, const Settings &s,
                                     bool with_grip_force, bool with_closing_time) {
  DesignMetrics m;
  const auto report = find_equilibria_1dof(design, s.solver);
  if (!report.bistable())
    return m;
  m.bistable = true;
  m.open_energy = report.open_state().energy;
  m.saddle_energy = report.saddle_state().energy;
  m.closed_energy = report.closed_state().energy;
  m.snap_through = *report.snap_through_energy;
  m.trigger_moment = trigger_moment(design, report);
  if (with_grip_force) {
    try {
      m.grip_force = grip_force_estimate(design, s.explorer.object_halfwidth, report).force;
    } catch (const ObjectTooLarge &) {
    }
  }
  if (with_closing_time) {
    const auto ev =
        closing_time(design, standard_trigger_impulse(design, report, s.dynamics), report, s.dynamics);
    if (ev.triggered)
      m.closing_time = ev.closing_time;
  }
  return m;
}

struct SweepRow {
  std::vector<double> values; // one per sweep parameter
  DesignMetrics metrics;
  std::string error;          // per-point failure, empty when evaluated
};

struct SweepTable {
  std::vector<std::string> parameters;
  std::vector<SweepRow> rows;
};

/// Number of design points of the Cartesian product.
inline std::size_t sweep_size(const SweepSpec &spec) {
  std::size_t n = 1;
  for (const auto &p : spec.parameters) {
    if (p.values.empty())
      return 0;
    if (n > std::numeric_limits<std::size_t>::max() / p.values.size())
      return std::numeric_limits<std::size_t>::max();
    n *= p.values.size();
  }
  return n;
}

/// Evaluates the Cartesian product of the parameter values. Row k enumerates
/// parameter indices lexicographically (last parameter fastest) regardless of
/// the number of worker threads.
inline SweepTable run_sweep(const GripperDesign &base, const SweepSpec &spec,
                            const Settings &s = {}) {
  if (spec.parameters.empty())
    throw ContractViolation("sweep needs at least one parameter");
  std::vector<const DesignField *> fields;
  for (const auto &p : spec.parameters) {
    const auto *f = find_design_field(p.path);
    if (!f)
      throw ContractViolation("unknown sweep parameter '" + p.path + "'");
    if (p.values.empty())
      throw ContractViolation("sweep parameter '" + p.path + "' has no values");
    fields.push_back(f);
  }
  const std::size_t total = sweep_size(spec);
  if (total > s.explorer.budget)
    throw BudgetExceeded("sweep has " + std::to_string(total) + " points, budget is " +
                         std::to_string(s.explorer.budget));

  SweepTable table;
  for (const auto &p : spec.parameters)
    table.parameters.push_back(p.path);
  table.rows.resize(total);

  const auto eval_point = [&](std::size_t k) {
    SweepRow &row = table.rows[k];
    row.values.resize(spec.parameters.size());
    std::size_t rem = k;
    for (std::size_t j = spec.parameters.size(); j-- > 0;) {
      const auto &vals = spec.parameters[j].values;
      row.values[j] = vals[rem % vals.size()];
      rem /= vals.size();
    }
    try {
      GripperDesign d = base;
      for (std::size_t j = 0; j < fields.size(); ++j)
        fields[j]->set(d, row.values[j]);
      validate(d);
      row.metrics = evaluate_design(d, s, spec.with_grip_force, spec.with_closing_time);
    } catch (const DomainError &e) {
      row.error = e.what();
    }
  };

  const std::size_t n_threads = std::max<std::size_t>(1, std::min(s.explorer.threads, total));
  if (n_threads == 1) {
    for (std::size_t k = 0; k < total; ++k)
      eval_point(k);
    return table;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n_threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < total; k = next++)
        eval_point(k);
    });
  for (auto &th : pool)
    th.join();
  return table;
}

} // namespace bgrip

#endif // BGRIP_EXPLORER_SWEEP_HPP
