#ifndef BGRIP_DYNAMICS_FREQUENCY_HPP
#define BGRIP_DYNAMICS_FREQUENCY_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "bgrip/core/settings.hpp"
#include "bgrip/dynamics/closing.hpp"
#include "bgrip/errors.hpp"

namespace bgrip {

/// Multiplies every stiffness in the design (finger modulus or Yeoh
/// coefficients, and ring stiffness) by s. The landscape keeps its shape and
/// its energies scale by s, so closed-state frequencies scale by sqrt(s).
inline GripperDesign scale_stiffness(GripperDesign d, double s) {
  d.ring.stiffness *= s;
  std::visit(
      [s](auto &m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, LinearElastic>) {
          m.youngs_modulus *= s;
        } else {
          m.c10 *= s;
          m.c20 *= s;
          m.c30 *= s;
        }
      },
      d.finger.material);
  return d;
}

struct FrequencyStudyRow {
  double scale = 1.0;
  double ring_stiffness = 0.0;    // N m / rad
  double natural_frequency = 0.0; // rad/s at the closed state
  double closing_time = 0.0;      // s
  double impulse = 0.0;           // N m s
  bool bistable = false;
  bool triggered = false;
};

/// Geometric ladder of n scales from lo to hi.
inline std::vector<double> geometric_ladder(double lo, double hi, std::size_t n) {
  if (n == 0 || !(lo > 0.0) || !(hi >= lo))
    throw ContractViolation("ladder needs n >= 1 and 0 < lo <= hi");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

/// Closing time against closed-state natural frequency over a stiffness
/// ladder at fixed J and c. Each point is triggered with its own standard
/// impulse; non-bistable points are kept with the flag cleared.
inline std::vector<FrequencyStudyRow>
closing_time_vs_frequency_study(const GripperDesign &design, const std::vector<double> &scales,
                                const Settings &s = {}) {
  std::vector<FrequencyStudyRow> rows;
  rows.reserve(scales.size());
  for (double sc : scales) {
    const GripperDesign d = scale_stiffness(design, sc);
    FrequencyStudyRow row;
    row.scale = sc;
    row.ring_stiffness = d.ring.stiffness;
    const auto report = find_equilibria_1dof(d, s.solver);
    if (report.bistable()) {
      row.bistable = true;
      row.natural_frequency = natural_frequency(d, report.closed_state());
      row.impulse = standard_trigger_impulse(d, report, s.dynamics);
      const auto ev = closing_time(d, row.impulse, report, s.dynamics);
      row.triggered = ev.triggered;
      row.closing_time = ev.closing_time;
    }
    rows.push_back(row);
  }
  return rows;
}

/// Ranks with ties sharing their mean rank.
inline std::vector<double> fractional_ranks(const std::vector<double> &v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]])
      ++j;
    const double mean = 0.5 * static_cast<double>(i + j);
    for (std::size_t k = i; k <= j; ++k)
      r[idx[k]] = mean;
    i = j + 1;
  }
  return r;
}

/// Spearman rank correlation: Pearson correlation of the fractional ranks.
inline double spearman_correlation(const std::vector<double> &a, const std::vector<double> &b) {
  if (a.size() != b.size() || a.size() < 2)
    throw ContractViolation("rank correlation needs two equal-length samples of size >= 2");
  const auto ra = fractional_ranks(a);
  const auto rb = fractional_ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0)
    return 0.0;
  return sab / std::sqrt(saa * sbb);
}

/// Spearman correlation of (1/omega, closing time) over the triggered rows.
inline double frequency_study_correlation(const std::vector<FrequencyStudyRow> &rows) {
  std::vector<double> period, t;
  for (const auto &r : rows) {
    if (r.bistable && r.triggered) {
      period.push_back(1.0 / r.natural_frequency);
      t.push_back(r.closing_time);
    }
  }
  return spearman_correlation(period, t);
}

} // namespace bgrip

#endif // BGRIP_DYNAMICS_FREQUENCY_HPP
