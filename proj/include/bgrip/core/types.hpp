#ifndef BGRIP_CORE_TYPES_HPP
#define BGRIP_CORE_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace bgrip {

struct LinearElastic {
  double youngs_modulus = 6.0e5; // Pa
};

/// Incompressible Yeoh solid, W = c10 (I1-3) + c20 (I1-3)^2 + c30 (I1-3)^3.
struct Yeoh {
  double c10 = 1.0e5; // Pa
  double c20 = 0.0;
  double c30 = 0.0;
};

using MaterialModel = std::variant<LinearElastic, Yeoh>;

struct CrossSection {
  double width = 0.015;     // m
  double thickness = 0.006; // m

  [[nodiscard]] double area() const { return width * thickness; }
  [[nodiscard]] double second_moment() const {
    return width * thickness * thickness * thickness / 12.0;
  }
};

struct FingerDesign {
  double length = 0.08;             // m
  double natural_curvature = 20.0;  // 1/m
  CrossSection section{};
  MaterialModel material = LinearElastic{};
  std::size_t n_segments = 8;
  double linear_density = 0.0972;   // kg/m

  /// Stress-free tip bend angle.
  [[nodiscard]] double rest_angle() const { return natural_curvature * length; }
  [[nodiscard]] double mass() const { return linear_density * length; }
};

struct RingDesign {
  double attach_fraction = 0.5;   // s_r / L
  double well_center = 0.35;      // rad
  double well_halfwidth = 1.25;   // rad
  double stiffness = 2.5;         // N m / rad, referred to a tip-mounted ring
  double width_scale = 1.0;       // trimming factor
  double placement_exponent = 4.0;

  /// Torsional stiffness of each well on the tip-angle scale. The ring's
  /// leverage grows with its station along the finger.
  [[nodiscard]] double effective_stiffness() const {
    return stiffness * width_scale * std::pow(attach_fraction, placement_exponent);
  }
  [[nodiscard]] double open_well() const { return well_center - well_halfwidth; }
  [[nodiscard]] double closed_well() const { return well_center + well_halfwidth; }
};

struct GripperDesign {
  FingerDesign finger{};
  RingDesign ring{};
  double inertia = 2.0e-5;        // kg m^2
  double damping = 1.0e-4;        // N m s / rad
  double payload_mass = 0.0;      // kg, lumped at the tip
  double gravity = 0.0;           // m/s^2 along the closing coordinate
  double base_halfspan = 0.06;    // m, finger root distance from the gripper axis
};

/// Joint angles of the discretised finger, one per segment.
struct ChainConfiguration {
  std::vector<double> joint_angles;
};

} // namespace bgrip

#endif // BGRIP_CORE_TYPES_HPP
