#ifndef BGRIP_STATICS_CHAIN_STATICS_HPP
#define BGRIP_STATICS_CHAIN_STATICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bgrip/core/chain.hpp"
#include "bgrip/core/settings.hpp"
#include "bgrip/errors.hpp"
#include "bgrip/statics/equilibria.hpp"

namespace bgrip {

struct ChainEquilibrium {
  ChainConfiguration config;
  double energy = 0.0;
  Stability stability = Stability::stable;
  double min_eigenvalue = 0.0;
  int negative_eigenvalues = 0;

  [[nodiscard]] double tip() const { return tip_angle(config); }
};

struct SeedFailure {
  std::size_t seed_index = 0;
  std::string reason;
};

struct ChainEquilibriumSet {
  std::vector<ChainEquilibrium> equilibria; // ascending tip angle
  std::vector<SeedFailure> failures;
};

inline ChainEquilibrium classify_chain_point(const ChainConfiguration &config,
                                             const GripperDesign &design) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(chain_hessian(config, design),
                                                           Eigen::EigenvaluesOnly);
  const auto &ev = eig.eigenvalues();
  ChainEquilibrium eq;
  eq.config = config;
  eq.energy = chain_energy(config, design);
  eq.min_eigenvalue = ev.minCoeff();
  eq.negative_eigenvalues = static_cast<int>((ev.array() < 0.0).count());
  eq.stability = eq.negative_eigenvalues == 0 ? Stability::stable : Stability::unstable;
  return eq;
}

namespace detail {

/// A few undamped Newton steps past the convergence test, kept only while the
/// gradient keeps shrinking. Positions then carry the full double precision
/// the gradient tolerance alone would not guarantee on soft wells.
inline ChainConfiguration newton_polish(Eigen::VectorXd x, const GripperDesign &design) {
  double gnorm = chain_gradient(from_vector(x), design).norm();
  for (int k = 0; k < 3; ++k) {
    const auto cfg = from_vector(x);
    const Eigen::VectorXd step =
        chain_hessian(cfg, design).ldlt().solve(-chain_gradient(cfg, design));
    if (!step.allFinite())
      break;
    const Eigen::VectorXd trial = x + step;
    const double gt = chain_gradient(from_vector(trial), design).norm();
    if (!(gt < gnorm))
      break;
    x = trial;
    gnorm = gt;
  }
  return from_vector(x);
}

} // namespace detail

/// Damped Newton descent with backtracking from one seed. The Hessian is
/// replaced by its absolute-eigenvalue form so every step descends.
inline ChainConfiguration minimize_chain(const ChainConfiguration &seed,
                                         const GripperDesign &design,
                                         const SolverSettings &s = {}) {
  Eigen::VectorXd x = to_vector(seed);
  const double max_step = 0.5;
  for (int it = 0; it < s.newton_max_iter * 5; ++it) {
    const auto cfg = from_vector(x);
    const Eigen::VectorXd g = chain_gradient(cfg, design);
    if (g.cwiseAbs().maxCoeff() < s.chain_gradient_tol)
      return detail::newton_polish(x, design);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(chain_hessian(cfg, design));
    const Eigen::VectorXd lam =
        eig.eigenvalues().cwiseAbs().cwiseMax(1e-8 * eig.eigenvalues().cwiseAbs().maxCoeff() +
                                              1e-14);
    const Eigen::MatrixXd &V = eig.eigenvectors();
    Eigen::VectorXd step = -V * ((V.transpose() * g).array() / lam.array()).matrix();
    const double norm = step.cwiseAbs().maxCoeff();
    if (norm > max_step)
      step *= max_step / norm;

    const double e0 = chain_energy(cfg, design);
    const double slope = g.dot(step);
    const double g0 = g.norm();
    bool accepted = false;
    for (int k = 0; k <= s.max_halvings; ++k) {
      const Eigen::VectorXd trial = x + step;
      const auto tcfg = from_vector(trial);
      const double e1 = chain_energy(tcfg, design);
      if (e1 <= e0 + 1e-4 * slope || chain_gradient(tcfg, design).norm() < 0.5 * g0) {
        x = trial;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted)
      throw NonConvergence("line search failed after " + std::to_string(s.max_halvings) +
                           " step halvings");
  }
  throw NonConvergence("chain minimisation exceeded its iteration budget");
}

/// Relaxes every seed, merges duplicates (keeping the lowest energy
/// representative) and classifies each result by its Hessian spectrum.
inline ChainEquilibriumSet find_equilibria_chain(const GripperDesign &design,
                                                 const std::vector<ChainConfiguration> &seeds,
                                                 const SolverSettings &s = {}) {
  ChainEquilibriumSet out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    try {
      check_chain_size(seeds[i], design.finger);
      auto eq = classify_chain_point(minimize_chain(seeds[i], design, s), design);
      auto dup = std::find_if(out.equilibria.begin(), out.equilibria.end(), [&](const auto &o) {
        return (to_vector(o.config) - to_vector(eq.config)).norm() < s.merge_tol;
      });
      if (dup == out.equilibria.end())
        out.equilibria.push_back(std::move(eq));
      else if (eq.energy < dup->energy)
        *dup = std::move(eq);
    } catch (const DomainError &e) {
      out.failures.push_back({i, e.what()});
    }
  }
  std::sort(out.equilibria.begin(), out.equilibria.end(),
            [](const auto &a, const auto &b) { return a.tip() < b.tip(); });
  return out;
}

/// Uniform-curvature seeds at the open and closed ring wells and the finger rest angle.
inline std::vector<ChainConfiguration> default_chain_seeds(const GripperDesign &design) {
  const std::size_t n = design.finger.n_segments;
  return {uniform_configuration(n, design.ring.open_well()),
          uniform_configuration(n, design.finger.rest_angle()),
          uniform_configuration(n, design.ring.closed_well())};
}

struct SaddleResult {
  ChainEquilibrium saddle;
  int iterations = 0;
  std::vector<ChainConfiguration> string; // final images, endpoints included
};

namespace detail {

/// Redistributes images [first, last] evenly in arc length along the polyline
/// they form, keeping both ends fixed.
inline void redistribute(std::vector<Eigen::VectorXd> &images, std::size_t first,
                         std::size_t last) {
  if (last <= first + 1)
    return;
  std::vector<double> arc(last - first + 1, 0.0);
  for (std::size_t i = first + 1; i <= last; ++i)
    arc[i - first] = arc[i - first - 1] + (images[i] - images[i - 1]).norm();
  const double total = arc.back();
  if (total <= 0.0)
    return;
  std::vector<Eigen::VectorXd> src(images.begin() + static_cast<std::ptrdiff_t>(first),
                                   images.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  std::size_t seg = 0;
  for (std::size_t i = first + 1; i < last; ++i) {
    const double target = total * static_cast<double>(i - first) / static_cast<double>(last - first);
    while (seg + 1 < arc.size() - 1 && arc[seg + 1] < target)
      ++seg;
    const double len = arc[seg + 1] - arc[seg];
    const double t = len > 0.0 ? (target - arc[seg]) / len : 0.0;
    images[i] = src[seg] + t * (src[seg + 1] - src[seg]);
  }
}

/// Newton iteration on grad = 0 from a point already near an index-1 saddle.
inline bool polish_saddle(Eigen::VectorXd &x, const GripperDesign &design, double tol) {
  for (int it = 0; it < 50; ++it) {
    const auto cfg = from_vector(x);
    const Eigen::VectorXd g = chain_gradient(cfg, design);
    if (g.norm() < tol)
      return true;
    const Eigen::VectorXd step = chain_hessian(cfg, design).ldlt().solve(-g);
    if (!step.allFinite() || step.norm() > 0.1)
      return false;
    x += step;
  }
  return chain_gradient(from_vector(x), design).norm() < tol;
}

} // namespace detail

/// Climbing-image string method between two stable chain equilibria. Images
/// descend the full gradient and are re-spaced by arc length each iteration;
/// the highest image climbs along the string tangent. Once its gradient is
/// small a Newton polish finishes the saddle.
inline SaddleResult saddle_search_chain(const GripperDesign &design, const ChainEquilibrium &a,
                                        const ChainEquilibrium &b, std::size_t n_images,
                                        const SolverSettings &s = {}) {
  if (n_images < 8)
    throw ContractViolation("saddle search needs at least 8 images");
  if (a.stability != Stability::stable || b.stability != Stability::stable)
    throw ContractViolation("saddle search endpoints must be stable equilibria");

  const Eigen::VectorXd xa = to_vector(a.config);
  const Eigen::VectorXd xb = to_vector(b.config);
  std::vector<Eigen::VectorXd> img(n_images);
  for (std::size_t i = 0; i < n_images; ++i)
    img[i] = xa + (xb - xa) * (static_cast<double>(i) / static_cast<double>(n_images - 1));

  // Explicit descent is stable for dt < 2 / lambda_max; bound lambda_max from the endpoints.
  double lam_max = 0.0;
  for (const auto *x : {&xa, &xb}) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(chain_hessian(from_vector(*x), design),
                                                             Eigen::EigenvaluesOnly);
    lam_max = std::max(lam_max, eig.eigenvalues().cwiseAbs().maxCoeff());
  }
  const double dt = 0.5 / lam_max;
  const double polish_below = std::max(1e3 * s.saddle_gradient_tol, 1e-4);

  std::vector<Eigen::VectorXd> grads(n_images);
  for (int it = 1; it <= s.string_max_iter; ++it) {
    std::size_t climb = 1;
    double e_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < n_images; ++i) {
      const auto cfg = from_vector(img[i]);
      grads[i] = chain_gradient(cfg, design);
      const double e = chain_energy(cfg, design);
      if (e > e_max) {
        e_max = e;
        climb = i;
      }
    }
    Eigen::VectorXd tangent = img[climb + 1] - img[climb - 1];
    tangent.normalize();
    const Eigen::VectorXd &gc = grads[climb];
    const Eigen::VectorXd climb_force = gc - 2.0 * gc.dot(tangent) * tangent;

    if (gc.norm() < polish_below) {
      Eigen::VectorXd x = img[climb];
      if (detail::polish_saddle(x, design, s.saddle_gradient_tol)) {
        x = to_vector(detail::newton_polish(x, design));
        auto eq = classify_chain_point(from_vector(x), design);
        if (eq.negative_eigenvalues != 1)
          throw SaddleOrderError("converged point has " +
                                 std::to_string(eq.negative_eigenvalues) +
                                 " negative Hessian eigenvalues, expected 1");
        img[climb] = x;
        SaddleResult res{std::move(eq), it, {}};
        for (const auto &v : img)
          res.string.push_back(from_vector(v));
        return res;
      }
    }

    for (std::size_t i = 1; i + 1 < n_images; ++i)
      img[i] -= dt * (i == climb ? climb_force : grads[i]);
    detail::redistribute(img, 0, climb);
    detail::redistribute(img, climb, n_images - 1);
  }
  throw NonConvergence("string method did not converge within " +
                       std::to_string(s.string_max_iter) + " iterations");
}

/// Snap-through energy of the chain: saddle energy minus the open (lower tip
/// angle) minimum found from the default seeds.
struct ChainBarrier {
  ChainEquilibrium open;
  ChainEquilibrium closed;
  ChainEquilibrium saddle;
  double snap_through_energy = 0.0;
};

inline ChainBarrier chain_snap_through(const GripperDesign &design, const SolverSettings &s = {}) {
  const auto set = find_equilibria_chain(design, default_chain_seeds(design), s);
  std::vector<ChainEquilibrium> minima;
  for (const auto &eq : set.equilibria)
    if (eq.stability == Stability::stable)
      minima.push_back(eq);
  if (minima.size() < 2)
    throw NotBistable();
  const auto &open = minima.front();
  const auto &closed = minima.back();
  auto res = saddle_search_chain(design, open, closed, s.string_images, s);
  return {open, closed, res.saddle, res.saddle.energy - open.energy};
}

} // namespace bgrip

#endif // BGRIP_STATICS_CHAIN_STATICS_HPP
