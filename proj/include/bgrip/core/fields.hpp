#ifndef BGRIP_CORE_FIELDS_HPP
#define BGRIP_CORE_FIELDS_HPP

#include <cmath>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bgrip/core/types.hpp"
#include "bgrip/errors.hpp"

namespace bgrip {

/// A named scalar field of GripperDesign, addressable by its dotted key in
/// config files and sweep specifications.
struct DesignField {
  std::string key;
  bool integral = false;
  std::function<double(const GripperDesign &)> get;
  std::function<void(GripperDesign &, double)> set;
};

namespace detail {

template <class M> M &material_as(GripperDesign &d, std::string_view key) {
  if (auto *m = std::get_if<M>(&d.finger.material))
    return *m;
  throw ContractViolation(std::string(key) + " does not apply to the selected finger.material");
}

template <class M> double material_get(const GripperDesign &d, double M::*field) {
  const auto *m = std::get_if<M>(&d.finger.material);
  return m ? m->*field : std::nan("");
}

} // namespace detail

inline const std::vector<DesignField> &design_fields() {
  using G = GripperDesign;
  static const std::vector<DesignField> fields = {
      {"finger.length", false, [](const G &d) { return d.finger.length; },
       [](G &d, double v) { d.finger.length = v; }},
      {"finger.natural_curvature", false, [](const G &d) { return d.finger.natural_curvature; },
       [](G &d, double v) { d.finger.natural_curvature = v; }},
      {"finger.width", false, [](const G &d) { return d.finger.section.width; },
       [](G &d, double v) { d.finger.section.width = v; }},
      {"finger.thickness", false, [](const G &d) { return d.finger.section.thickness; },
       [](G &d, double v) { d.finger.section.thickness = v; }},
      {"finger.youngs_modulus", false,
       [](const G &d) { return detail::material_get(d, &LinearElastic::youngs_modulus); },
       [](G &d, double v) {
         detail::material_as<LinearElastic>(d, "finger.youngs_modulus").youngs_modulus = v;
       }},
      {"finger.yeoh_c10", false, [](const G &d) { return detail::material_get(d, &Yeoh::c10); },
       [](G &d, double v) { detail::material_as<Yeoh>(d, "finger.yeoh_c10").c10 = v; }},
      {"finger.yeoh_c20", false, [](const G &d) { return detail::material_get(d, &Yeoh::c20); },
       [](G &d, double v) { detail::material_as<Yeoh>(d, "finger.yeoh_c20").c20 = v; }},
      {"finger.yeoh_c30", false, [](const G &d) { return detail::material_get(d, &Yeoh::c30); },
       [](G &d, double v) { detail::material_as<Yeoh>(d, "finger.yeoh_c30").c30 = v; }},
      {"finger.n_segments", true,
       [](const G &d) { return static_cast<double>(d.finger.n_segments); },
       [](G &d, double v) { d.finger.n_segments = static_cast<std::size_t>(v); }},
      {"finger.linear_density", false, [](const G &d) { return d.finger.linear_density; },
       [](G &d, double v) { d.finger.linear_density = v; }},
      {"ring.attach_fraction", false, [](const G &d) { return d.ring.attach_fraction; },
       [](G &d, double v) { d.ring.attach_fraction = v; }},
      {"ring.well_center", false, [](const G &d) { return d.ring.well_center; },
       [](G &d, double v) { d.ring.well_center = v; }},
      {"ring.well_halfwidth", false, [](const G &d) { return d.ring.well_halfwidth; },
       [](G &d, double v) { d.ring.well_halfwidth = v; }},
      {"ring.stiffness", false, [](const G &d) { return d.ring.stiffness; },
       [](G &d, double v) { d.ring.stiffness = v; }},
      {"ring.width_scale", false, [](const G &d) { return d.ring.width_scale; },
       [](G &d, double v) { d.ring.width_scale = v; }},
      {"ring.placement_exponent", false, [](const G &d) { return d.ring.placement_exponent; },
       [](G &d, double v) { d.ring.placement_exponent = v; }},
      {"gripper.inertia", false, [](const G &d) { return d.inertia; },
       [](G &d, double v) { d.inertia = v; }},
      {"gripper.damping", false, [](const G &d) { return d.damping; },
       [](G &d, double v) { d.damping = v; }},
      {"gripper.payload_mass", false, [](const G &d) { return d.payload_mass; },
       [](G &d, double v) { d.payload_mass = v; }},
      {"gripper.gravity", false, [](const G &d) { return d.gravity; },
       [](G &d, double v) { d.gravity = v; }},
      {"gripper.base_halfspan", false, [](const G &d) { return d.base_halfspan; },
       [](G &d, double v) { d.base_halfspan = v; }},
  };
  return fields;
}

/// Lookup by dotted key; nullptr when unknown.
inline const DesignField *find_design_field(std::string_view key) {
  for (const auto &f : design_fields())
    if (f.key == key)
      return &f;
  return nullptr;
}

} // namespace bgrip

#endif // BGRIP_CORE_FIELDS_HPP
