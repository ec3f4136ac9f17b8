#ifndef BGRIP_CORE_CONSTITUTIVE_HPP
#define BGRIP_CORE_CONSTITUTIVE_HPP

#include <cmath>
#include <string>
#include <variant>

#include "bgrip/core/quadrature.hpp"
#include "bgrip/core/types.hpp"
#include "bgrip/errors.hpp"

namespace bgrip {

/// Largest admissible |kappa| * t/2 (outer-fiber strain).
inline constexpr double kMaxFiberStrain = 0.9;

/// Cauchy stress of an incompressible Yeoh solid in uniaxial tension/compression.
inline double yeoh_uniaxial_stress(double stretch, const Yeoh &m) {
  const double i1m3 = stretch * stretch + 2.0 / stretch - 3.0;
  const double dw_di1 = m.c10 + 2.0 * m.c20 * i1m3 + 3.0 * m.c30 * i1m3 * i1m3;
  return 2.0 * (stretch * stretch - 1.0 / stretch) * dw_di1;
}

/// d(sigma)/d(stretch) of the uniaxial Yeoh stress.
inline double yeoh_uniaxial_tangent(double stretch, const Yeoh &m) {
  const double i1m3 = stretch * stretch + 2.0 / stretch - 3.0;
  const double di1 = 2.0 * stretch - 2.0 / (stretch * stretch);
  const double dw_di1 = m.c10 + 2.0 * m.c20 * i1m3 + 3.0 * m.c30 * i1m3 * i1m3;
  const double d2w = 2.0 * m.c20 + 6.0 * m.c30 * i1m3;
  const double g = stretch * stretch - 1.0 / stretch;
  const double dg = 2.0 * stretch + 1.0 / (stretch * stretch);
  return 2.0 * (dg * dw_di1 + g * d2w * di1);
}

inline void check_fiber_range(double kappa, const CrossSection &section) {
  if (std::abs(kappa) * 0.5 * section.thickness >= kMaxFiberStrain)
    throw ConstitutiveRangeError("curvature " + std::to_string(kappa) +
                                 " 1/m compresses the outer fiber beyond the valid range");
}

/// Bending moment carried by the section at curvature kappa, measured from
/// the stress-free state.
inline double moment_curvature(double kappa, const CrossSection &section,
                               const MaterialModel &material) {
  check_fiber_range(kappa, section);
  if (const auto *lin = std::get_if<LinearElastic>(&material))
    return lin->youngs_modulus * section.second_moment() * kappa;
  const auto &yeoh = std::get<Yeoh>(material);
  const double half = 0.5 * section.thickness;
  const auto integrand = [&](double z) {
    return yeoh_uniaxial_stress(1.0 + kappa * z, yeoh) * z;
  };
  return section.width * gauss_legendre_64().integrate(integrand, -half, half);
}

/// dM/dkappa, the tangent bending stiffness.
inline double bending_tangent(double kappa, const CrossSection &section,
                              const MaterialModel &material) {
  check_fiber_range(kappa, section);
  if (const auto *lin = std::get_if<LinearElastic>(&material))
    return lin->youngs_modulus * section.second_moment();
  const auto &yeoh = std::get<Yeoh>(material);
  const double half = 0.5 * section.thickness;
  const auto integrand = [&](double z) {
    return yeoh_uniaxial_tangent(1.0 + kappa * z, yeoh) * z * z;
  };
  return section.width * gauss_legendre_64().integrate(integrand, -half, half);
}

/// Bending energy per unit length, the integral of M from 0 to kappa.
inline double bending_energy_density(double kappa, const CrossSection &section,
                                     const MaterialModel &material) {
  check_fiber_range(kappa, section);
  if (const auto *lin = std::get_if<LinearElastic>(&material))
    return 0.5 * lin->youngs_modulus * section.second_moment() * kappa * kappa;
  if (kappa == 0.0)
    return 0.0;
  return gauss_legendre_64().integrate(
      [&](double k) { return moment_curvature(k, section, material); }, 0.0, kappa);
}

/// Small-strain Young's modulus equivalent of a material.
inline double small_strain_modulus(const MaterialModel &material) {
  if (const auto *lin = std::get_if<LinearElastic>(&material))
    return lin->youngs_modulus;
  return 6.0 * std::get<Yeoh>(material).c10;
}

/// True when the uniaxial stress increases strictly on stretch in [0.5, 2].
inline bool yeoh_is_monotone(const Yeoh &m, int samples = 301) {
  double prev = yeoh_uniaxial_stress(0.5, m);
  for (int i = 1; i < samples; ++i) {
    const double stretch = 0.5 + 1.5 * static_cast<double>(i) / (samples - 1);
    const double s = yeoh_uniaxial_stress(stretch, m);
    if (!(s > prev))
      return false;
    prev = s;
  }
  return true;
}

} // namespace bgrip

#endif // BGRIP_CORE_CONSTITUTIVE_HPP
