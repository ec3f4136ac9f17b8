#ifndef BGRIP_CORE_VALIDATION_HPP
#define BGRIP_CORE_VALIDATION_HPP

#include <cmath>
#include <string>
#include <vector>

#include "bgrip/core/constitutive.hpp"
#include "bgrip/core/types.hpp"
#include "bgrip/errors.hpp"

namespace bgrip {

/// Every violated design invariant, phrased with the field name. Empty when valid.
inline std::vector<std::string> validation_errors(const GripperDesign &d) {
  std::vector<std::string> errs;
  const auto require = [&errs](bool ok, const char *msg) {
    if (!ok)
      errs.emplace_back(msg);
  };
  const auto &f = d.finger;
  require(f.length > 0.0, "finger.length must be > 0");
  require(std::isfinite(f.natural_curvature), "finger.natural_curvature must be finite");
  require(f.section.width > 0.0, "finger.width must be > 0");
  require(f.section.thickness > 0.0, "finger.thickness must be > 0");
  require(f.n_segments >= 1, "finger.n_segments must be >= 1");
  require(f.linear_density >= 0.0, "finger.linear_density must be >= 0");
  if (const auto *lin = std::get_if<LinearElastic>(&f.material)) {
    require(lin->youngs_modulus > 0.0, "finger.youngs_modulus must be > 0");
  } else {
    const auto &y = std::get<Yeoh>(f.material);
    require(y.c10 > 0.0, "finger.yeoh_c10 must be > 0");
    if (y.c10 > 0.0)
      require(yeoh_is_monotone(y),
              "Yeoh uniaxial stress must increase monotonically for stretch in [0.5, 2]");
  }
  const auto &r = d.ring;
  require(r.attach_fraction > 0.0 && r.attach_fraction <= 1.0,
          "ring.attach_fraction must lie in (0, 1]");
  require(r.well_halfwidth > 0.0, "ring.well_halfwidth must be > 0");
  require(r.stiffness >= 0.0, "ring.stiffness must satisfy k_r >= 0");
  require(r.width_scale > 0.0 && r.width_scale <= 1.0, "ring.width_scale must lie in (0, 1]");
  require(r.placement_exponent >= 0.0, "ring.placement_exponent must be >= 0");
  require(d.inertia > 0.0, "gripper.inertia must be > 0");
  require(d.damping >= 0.0, "gripper.damping must be >= 0");
  require(d.payload_mass >= 0.0, "gripper.payload_mass must be >= 0");
  require(std::isfinite(d.gravity), "gripper.gravity must be finite");
  require(d.base_halfspan >= 0.0, "gripper.base_halfspan must be >= 0");
  return errs;
}

inline void validate(const GripperDesign &d) {
  const auto errs = validation_errors(d);
  if (errs.empty())
    return;
  std::string msg = "invalid design:";
  for (const auto &e : errs)
    msg += "\n  " + e;
  throw ContractViolation(msg);
}

} // namespace bgrip

#endif // BGRIP_CORE_VALIDATION_HPP
