#ifndef BGRIP_CORE_SETTINGS_HPP
#define BGRIP_CORE_SETTINGS_HPP

#include <cstddef>
#include <numbers>

namespace bgrip {

struct SolverSettings {
  double theta_min = -std::numbers::pi;
  double theta_max = std::numbers::pi;
  std::size_t grid_n = 4096;
  double root_tol = 1e-12;          // rad, bisection width
  double gradient_tol = 1e-10;      // N m, 1-DOF equilibrium residual
  int max_halvings = 40;
  int newton_max_iter = 200;
  double chain_gradient_tol = 1e-9; // N m, max component
  double merge_tol = 1e-6;          // rad
  std::size_t string_images = 11;
  double saddle_gradient_tol = 1e-7; // N m
  int string_max_iter = 50000;
  std::size_t continuation_steps = 200;
};

struct DynamicsSettings {
  double dt_fraction = 0.02;         // dt * omega_max
  double t_max = 1.0;                // s
  double closure_band = 0.05;        // rad
  double closure_dwell = 0.005;      // s
  double trigger_impulse_factor = 1.5;
  double impulse_rel_tol = 1e-6;
  double target_closing_time = 0.021; // s, used by calibration
  double damping_ratio = 1.0;         // of critical, at the closed state
};

struct ExplorerSettings {
  double object_halfwidth = 0.03;   // m
  std::size_t budget = 1000000;
  std::size_t threads = 1;
  double ring_shift = 0.15;
  double thin_factor = 0.5;
  double high_curvature = 25.0;     // 1/m
  double barrier_match_tol = 0.05;  // relative
  double gravity_barrier_tol = 1e-9; // J
  double tune_tol = 1e-9;           // J
  int tune_max_iter = 60;
};

struct Settings {
  SolverSettings solver{};
  DynamicsSettings dynamics{};
  ExplorerSettings explorer{};
};

} // namespace bgrip

#endif // BGRIP_CORE_SETTINGS_HPP
