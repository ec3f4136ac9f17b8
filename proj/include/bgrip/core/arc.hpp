#ifndef BGRIP_CORE_ARC_HPP
#define BGRIP_CORE_ARC_HPP

#include <cmath>

// Shape functions of a constant-curvature arc with total bend phi. For
// |phi| below kSeriesCutoff they switch to Taylor series, which are exact to
// double precision there and avoid the 0/0 forms.

namespace bgrip::arc {

inline constexpr double kSeriesCutoff = 1e-2;

struct Value {
  double f;  // value
  double df; // derivative in phi
};

namespace detail {

inline double inv_factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i)
    r /= i;
  return r;
}

} // namespace detail

/// Mean lateral offset over a unit-length arc starting tangent to y:
/// A(phi) = (phi - sin phi) / phi^2.
inline Value mean_lateral(double phi) {
  if (std::abs(phi) < kSeriesCutoff) {
    // sum_{k>=1} (-1)^(k+1) phi^(2k-1) / (2k+1)!
    double f = 0.0, df = 0.0, sign = 1.0;
    for (int k = 1; k <= 6; ++k) {
      const double c = sign * detail::inv_factorial(2 * k + 1);
      f += c * std::pow(phi, 2 * k - 1);
      df += c * (2 * k - 1) * std::pow(phi, 2 * k - 2);
      sign = -sign;
    }
    return {f, df};
  }
  const double s = std::sin(phi), c = std::cos(phi);
  const double p2 = phi * phi;
  return {(phi - s) / p2, (1.0 - c) / p2 - 2.0 * (phi - s) / (p2 * phi)};
}

/// Mean axial-to-lateral coupling: B(phi) = (1 - cos phi) / phi^2.
inline Value mean_axial(double phi) {
  if (std::abs(phi) < kSeriesCutoff) {
    // sum_{k>=1} (-1)^(k+1) phi^(2k-2) / (2k)!
    double f = 0.0, df = 0.0, sign = 1.0;
    for (int k = 1; k <= 6; ++k) {
      const double c = sign * detail::inv_factorial(2 * k);
      f += c * std::pow(phi, 2 * k - 2);
      if (k > 1)
        df += c * (2 * k - 2) * std::pow(phi, 2 * k - 3);
      sign = -sign;
    }
    return {f, df};
  }
  const double s = std::sin(phi), c = std::cos(phi);
  const double p2 = phi * phi;
  return {(1.0 - c) / p2, s / p2 - 2.0 * (1.0 - c) / (p2 * phi)};
}

/// Lateral end displacement of a unit arc: C(phi) = (1 - cos phi) / phi.
inline Value end_lateral(double phi) {
  const Value b = mean_axial(phi);
  return {phi * b.f, b.f + phi * b.df};
}

/// Axial end displacement of a unit arc: S(phi) = sin phi / phi.
inline Value end_axial(double phi) {
  if (std::abs(phi) < kSeriesCutoff) {
    double f = 0.0, df = 0.0, sign = 1.0;
    for (int k = 0; k <= 6; ++k) {
      const double c = sign * detail::inv_factorial(2 * k + 1);
      f += c * std::pow(phi, 2 * k);
      if (k > 0)
        df += c * (2 * k) * std::pow(phi, 2 * k - 1);
      sign = -sign;
    }
    return {f, df};
  }
  const double s = std::sin(phi), c = std::cos(phi);
  return {s / phi, c / phi - s / (phi * phi)};
}

} // namespace bgrip::arc

#endif // BGRIP_CORE_ARC_HPP
