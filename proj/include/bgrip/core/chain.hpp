#ifndef BGRIP_CORE_CHAIN_HPP
#define BGRIP_CORE_CHAIN_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bgrip/core/arc.hpp"
#include "bgrip/core/constitutive.hpp"
#include "bgrip/core/energy_1dof.hpp"
#include "bgrip/core/types.hpp"
#include "bgrip/errors.hpp"

// Discretised finger: n segments, each a constant-curvature arc of length
// L/n bending by its joint angle. Bending energy per segment is exact for
// that shape, the ring reads the cumulative angle interpolated at its station,
// and gravity integrates each arc in closed form. With n = 1 this is the
// reduced model exactly.

namespace bgrip {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline void check_chain_size(const ChainConfiguration &config, const FingerDesign &finger) {
  if (config.joint_angles.size() != finger.n_segments)
    throw ContractViolation("chain configuration has " +
                            std::to_string(config.joint_angles.size()) +
                            " joint angles, finger has " + std::to_string(finger.n_segments) +
                            " segments");
}

inline ChainConfiguration uniform_configuration(std::size_t n, double tip_angle) {
  return {std::vector<double>(n, tip_angle / static_cast<double>(n))};
}

inline double tip_angle(const ChainConfiguration &config) {
  return std::accumulate(config.joint_angles.begin(), config.joint_angles.end(), 0.0);
}

/// Segment containing the ring station and the station's fraction along it.
struct RingStation {
  std::size_t segment = 0;
  double fraction = 1.0;
};

inline RingStation ring_station(const RingDesign &ring, std::size_t n) {
  const double pos = ring.attach_fraction * static_cast<double>(n);
  auto seg = static_cast<std::size_t>(std::floor(pos));
  seg = std::min(seg, n - 1);
  return {seg, pos - static_cast<double>(seg)};
}

/// Cumulative bend angle at the ring station.
inline double ring_station_angle(const ChainConfiguration &config, const RingDesign &ring) {
  const auto st = ring_station(ring, config.joint_angles.size());
  double psi = 0.0;
  for (std::size_t j = 0; j < st.segment; ++j)
    psi += config.joint_angles[j];
  return psi + st.fraction * config.joint_angles[st.segment];
}

/// Station angle rescaled to the tip-angle convention the ring wells use;
/// the chain counterpart of the reduced model's bend angle.
inline double ring_scaled_angle(const ChainConfiguration &config, const RingDesign &ring) {
  return ring_station_angle(config, ring) / ring.attach_fraction;
}

namespace detail {

struct ChainTerms {
  double finger = 0.0;
  double ring = 0.0;
  double gravity = 0.0;
};

/// Lateral mass moment X (kg m) and, when grad is non-null, dX/dphi.
inline double chain_lateral_moment(const std::vector<double> &phi, const GripperDesign &design,
                                   std::vector<double> *grad) {
  const std::size_t n = phi.size();
  const double ell = design.finger.length / static_cast<double>(n);
  const double m_seg = design.finger.linear_density * ell;
  double total = 0.0;
  double psi = 0.0;
  std::vector<double> dpsi(n, 0.0);
  if (grad)
    grad->assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    // Mass loaded by segment j's end displacement: all later segments and the payload.
    const double carried = m_seg * static_cast<double>(n - 1 - j) + design.payload_mass;
    const double c = std::cos(psi), s = std::sin(psi);
    const auto A = arc::mean_lateral(phi[j]);
    const auto B = arc::mean_axial(phi[j]);
    const auto C = arc::end_lateral(phi[j]);
    const auto S = arc::end_axial(phi[j]);
    total += ell * (carried * (c * C.f + s * S.f) + m_seg * (c * A.f + s * B.f));
    if (grad) {
      (*grad)[j] = ell * (carried * (c * C.df + s * S.df) + m_seg * (c * A.df + s * B.df));
      dpsi[j] = ell * (carried * (-s * C.f + c * S.f) + m_seg * (-s * A.f + c * B.f));
    }
    psi += phi[j];
  }
  if (grad) {
    // Segment k rotates every later segment.
    double suffix = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      (*grad)[k] += suffix;
      suffix += dpsi[k];
    }
  }
  return total;
}

inline ChainTerms chain_terms(const ChainConfiguration &config, const GripperDesign &design) {
  check_chain_size(config, design.finger);
  const auto &f = design.finger;
  const double ell = f.length / static_cast<double>(f.n_segments);
  const double rest = f.natural_curvature * ell;
  ChainTerms t;
  for (double phi : config.joint_angles)
    t.finger += ell * bending_energy_density((phi - rest) / ell, f.section, f.material);
  t.ring = ring_energy_1dof(ring_scaled_angle(config, design.ring),
                            design.ring);
  if (design.gravity != 0.0)
    t.gravity = -design.gravity * chain_lateral_moment(config.joint_angles, design, nullptr);
  return t;
}

} // namespace detail

inline double chain_energy(const ChainConfiguration &config, const GripperDesign &design) {
  const auto t = detail::chain_terms(config, design);
  return t.finger + t.ring + t.gravity;
}

inline Eigen::VectorXd chain_gradient(const ChainConfiguration &config,
                                      const GripperDesign &design) {
  check_chain_size(config, design.finger);
  const auto &f = design.finger;
  const std::size_t n = f.n_segments;
  const double ell = f.length / static_cast<double>(n);
  const double rest = f.natural_curvature * ell;
  Eigen::VectorXd g(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    g[static_cast<Eigen::Index>(i)] =
        moment_curvature((config.joint_angles[i] - rest) / ell, f.section, f.material);

  const auto &ring = design.ring;
  const auto st = ring_station(ring, n);
  const double ring_moment =
      ring_moment_1dof(ring_station_angle(config, ring) / ring.attach_fraction, ring) /
      ring.attach_fraction;
  for (std::size_t j = 0; j < st.segment; ++j)
    g[static_cast<Eigen::Index>(j)] += ring_moment;
  g[static_cast<Eigen::Index>(st.segment)] += st.fraction * ring_moment;

  if (design.gravity != 0.0) {
    std::vector<double> dx;
    detail::chain_lateral_moment(config.joint_angles, design, &dx);
    for (std::size_t i = 0; i < n; ++i)
      g[static_cast<Eigen::Index>(i)] -= design.gravity * dx[i];
  }
  return g;
}

/// Hessian by central differences of the analytic gradient, symmetrised.
inline Eigen::MatrixXd chain_hessian(const ChainConfiguration &config,
                                     const GripperDesign &design, double h = 1e-6) {
  const std::size_t n = config.joint_angles.size();
  Eigen::MatrixXd H(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  ChainConfiguration probe = config;
  for (std::size_t j = 0; j < n; ++j) {
    const double orig = probe.joint_angles[j];
    probe.joint_angles[j] = orig + h;
    const Eigen::VectorXd gp = chain_gradient(probe, design);
    probe.joint_angles[j] = orig - h;
    const Eigen::VectorXd gm = chain_gradient(probe, design);
    probe.joint_angles[j] = orig;
    H.col(static_cast<Eigen::Index>(j)) = (gp - gm) / (2.0 * h);
  }
  return 0.5 * (H + H.transpose());
}

/// Node positions of the rigid-link chain: root at the origin, initial
/// tangent along +y, link i oriented by the cumulative angle through joint i.
inline std::vector<Point2> forward_kinematics(const ChainConfiguration &config,
                                              const FingerDesign &finger) {
  check_chain_size(config, finger);
  const double ell = finger.length / static_cast<double>(finger.n_segments);
  std::vector<Point2> nodes;
  nodes.reserve(finger.n_segments + 1);
  nodes.push_back({0.0, 0.0});
  double psi = 0.0;
  for (double phi : config.joint_angles) {
    psi += phi;
    const auto &p = nodes.back();
    nodes.push_back({p.x + ell * std::sin(psi), p.y + ell * std::cos(psi)});
  }
  return nodes;
}

inline Eigen::VectorXd to_vector(const ChainConfiguration &c) {
  return Eigen::Map<const Eigen::VectorXd>(c.joint_angles.data(),
                                           static_cast<Eigen::Index>(c.joint_angles.size()));
}

inline ChainConfiguration from_vector(const Eigen::VectorXd &v) {
  return {std::vector<double>(v.data(), v.data() + v.size())};
}

} // namespace bgrip

#endif // BGRIP_CORE_CHAIN_HPP
