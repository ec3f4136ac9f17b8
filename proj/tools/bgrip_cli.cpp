// bgrip: batch front end. Every subcommand loads one config, writes its CSV
// (plus an SVG with --plot) and a run manifest into --out, and prints a short
// summary. Exit codes: 0 success, 1 usage error, 2 domain error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgrip/dynamics/closing.hpp"
#include "bgrip/dynamics/frequency.hpp"
#include "bgrip/dynamics/gravity.hpp"
#include "bgrip/dynamics/simulate.hpp"
#include "bgrip/explorer/fea_cases.hpp"
#include "bgrip/explorer/grip.hpp"
#include "bgrip/explorer/sweep.hpp"
#include "bgrip/explorer/tuning.hpp"
#include "bgrip/io/config.hpp"
#include "bgrip/io/csv.hpp"
#include "bgrip/io/manifest.hpp"
#include "bgrip/io/svg.hpp"
#include "bgrip/statics/chain_statics.hpp"
#include "bgrip/statics/continuation.hpp"
#include "bgrip/statics/equilibria.hpp"

namespace fs = std::filesystem;
using namespace bgrip;

namespace {

struct Run {
  ConfigDocument doc;
  std::string out_dir;
  bool plot = false;
  std::string command;
  RunManifest manifest;

  void emit(const std::string &name, const std::string &text) {
    write_text_file((fs::path(out_dir) / name).string(), text);
    manifest.outputs.push_back(name);
  }
  void emit_plot(const std::string &name, const std::string &svg) {
    if (plot)
      emit(name, svg);
  }
  void finish(const std::string &sub) {
    manifest.config_hash = config_hash(doc);
    manifest.command = command;
    manifest.timestamp = utc_timestamp();
    write_text_file((fs::path(out_dir) / (sub + ".manifest")).string(),
                    serialize_manifest(manifest));
  }
  const GripperDesign &design() const { return doc.design; }
  const Settings &settings() const { return doc.settings; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string flag(bool b) { return b ? "1" : "0"; }

EquilibriumReport bistable_report(const Run &r) {
  auto rep = find_equilibria_1dof(r.design(), r.settings().solver);
  if (!rep.bistable())
    throw NotBistable();
  return rep;
}

// Sweep axis: key=lo:hi:n, key=v1,v2,... or key=v.
SweepParameter parse_axis(const std::string &text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw CLI::ValidationError("--param", "expected key=lo:hi:n or key=v1,v2,...");
  SweepParameter p;
  p.path = text.substr(0, eq);
  const std::string rest = text.substr(eq + 1);
  const auto number = [&](const std::string &s) {
    double v = 0.0;
    if (!detail::parse_real(detail::trim(s), v))
      throw CLI::ValidationError("--param", "'" + s + "' is not a number");
    return v;
  };
  if (rest.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(rest);
    for (std::string item; std::getline(ss, item, ':');)
      parts.push_back(item);
    if (parts.size() != 3)
      throw CLI::ValidationError("--param", "range needs lo:hi:n");
    const double n = number(parts[2]);
    if (n < 1 || n != std::floor(n))
      throw CLI::ValidationError("--param", "range count must be a positive integer");
    p.values = linspace(number(parts[0]), number(parts[1]), static_cast<std::size_t>(n));
  } else {
    std::stringstream ss(rest);
    for (std::string item; std::getline(ss, item, ',');)
      p.values.push_back(number(item));
  }
  return p;
}

void cmd_landscape(Run &r, std::optional<double> lo, std::optional<double> hi, std::size_t n) {
  const auto &so = r.settings().solver;
  const auto land = sample_landscape(r.design(), lo.value_or(so.theta_min),
                                     hi.value_or(so.theta_max), n);
  CsvWriter csv({"theta", "U", "finger", "ring", "gravity"});
  for (std::size_t i = 0; i < land.size(); ++i)
    csv.row(std::vector<double>{land.theta_grid[i], land.total[i], land.finger[i], land.ring[i],
                                land.gravity[i]});
  r.emit("landscape.csv", csv.str());
  r.emit_plot("landscape.svg", emit_svg(landscape_chart(land)));
  std::cout << land.size() << " samples\n";
}

void cmd_equilibria(Run &r, bool chain) {
  if (!chain) {
    const auto rep = find_equilibria_1dof(r.design(), r.settings().solver);
    CsvWriter csv({"theta", "energy", "stability", "curvature"});
    for (const auto &e : rep.equilibria) {
      csv.row({fmt(e.theta), fmt(e.energy), to_string(e.stability), fmt(e.curvature)});
      std::cout << to_string(e.stability) << " theta = " << fmt(e.theta) << " rad, U = "
                << fmt(e.energy) << " J\n";
    }
    r.emit("equilibria.csv", csv.str());
    if (r.plot) {
      const auto &so = r.settings().solver;
      auto chart = landscape_chart(sample_landscape(r.design(), so.theta_min, so.theta_max, 2001),
                                   false);
      chart.markers.clear();
      for (const auto &e : rep.equilibria)
        chart.markers.push_back({e.theta, e.energy, to_string(e.stability)});
      r.emit("equilibria.svg", emit_svg(chart));
    }
    return;
  }
  const auto set = find_equilibria_chain(r.design(), default_chain_seeds(r.design()),
                                         r.settings().solver);
  CsvWriter csv({"tip_angle", "ring_scaled_angle", "energy", "stability", "min_eigenvalue",
                 "negative_eigenvalues"});
  for (const auto &e : set.equilibria) {
    csv.row({fmt(e.tip()), fmt(ring_scaled_angle(e.config, r.design().ring)), fmt(e.energy),
             to_string(e.stability), fmt(e.min_eigenvalue), std::to_string(e.negative_eigenvalues)});
    std::cout << to_string(e.stability) << " tip = " << fmt(e.tip()) << " rad, U = "
              << fmt(e.energy) << " J\n";
  }
  for (const auto &f : set.failures)
    std::cerr << "seed " << f.seed_index << " failed: " << f.reason << "\n";
  r.emit("equilibria_chain.csv", csv.str());
}

void cmd_snapthrough(Run &r, bool chain) {
  if (!chain) {
    const auto rep = bistable_report(r);
    CsvWriter csv({"open_theta", "saddle_theta", "closed_theta", "snap_through_energy"});
    csv.row(std::vector<double>{rep.open_state().theta, rep.saddle_state().theta,
                                rep.closed_state().theta, *rep.snap_through_energy});
    r.emit("snapthrough.csv", csv.str());
    std::cout << fmt(*rep.snap_through_energy) << "\n";
    return;
  }
  const auto b = chain_snap_through(r.design(), r.settings().solver);
  const auto &ring = r.design().ring;
  CsvWriter csv({"open_ring_scaled_angle", "saddle_ring_scaled_angle", "closed_ring_scaled_angle",
                 "snap_through_energy"});
  csv.row(std::vector<double>{ring_scaled_angle(b.open.config, ring),
                              ring_scaled_angle(b.saddle.config, ring),
                              ring_scaled_angle(b.closed.config, ring), b.snap_through_energy});
  r.emit("snapthrough_chain.csv", csv.str());
  std::cout << fmt(b.snap_through_energy) << "\n";
}

void cmd_trigger(Run &r) {
  const auto rep = bistable_report(r);
  const double m = trigger_moment(r.design(), rep);
  CsvWriter csv({"open_theta", "saddle_theta", "trigger_moment"});
  csv.row(std::vector<double>{rep.open_state().theta, rep.saddle_state().theta, m});
  r.emit("trigger.csv", csv.str());
  std::cout << fmt(m) << "\n";
}

void cmd_continuation(Run &r, std::optional<double> tau_max, std::optional<std::size_t> steps) {
  double tmax = 0.0;
  if (tau_max) {
    tmax = *tau_max;
  } else {
    tmax = 1.5 * trigger_moment(r.design(), bistable_report(r));
  }
  const auto path = continuation_ramped_load(
      r.design(), tmax, steps.value_or(r.settings().solver.continuation_steps),
      r.settings().solver);
  CsvWriter csv({"moment", "theta", "energy"});
  for (const auto &p : path.points)
    csv.row(std::vector<double>{p.moment, p.theta, p.energy});
  CsvWriter folds({"moment", "theta_before", "theta_after"});
  for (const auto &f : path.folds) {
    folds.row(std::vector<double>{f.moment, f.theta_before, f.theta_after});
    std::cout << "fold at moment " << fmt(f.moment) << " N m: " << fmt(f.theta_before) << " -> "
              << fmt(f.theta_after) << " rad\n";
  }
  r.emit("continuation.csv", csv.str());
  r.emit("continuation_folds.csv", folds.str());
  if (r.plot) {
    LineChart c;
    c.title = "Ramped closing moment";
    c.x_label = "applied moment (N m)";
    c.y_label = "bend angle (rad)";
    LineSeries s{"theta", {}, {}};
    for (const auto &p : path.points) {
      s.x.push_back(p.moment);
      s.y.push_back(p.theta);
    }
    c.series.push_back(s);
    r.emit("continuation.svg", emit_svg(c));
  }
  if (path.folds.empty())
    std::cout << "no fold up to " << fmt(tmax) << " N m\n";
}

void cmd_simulate(Run &r, std::optional<double> theta0, std::optional<double> omega0,
                  std::optional<double> t_end, std::optional<double> dt) {
  const auto &d = r.design();
  const auto &ds = r.settings().dynamics;
  const auto rep = find_equilibria_1dof(d, r.settings().solver);
  double th = 0.0, om = 0.0;
  if (rep.bistable()) {
    th = rep.open_state().theta;
    om = standard_trigger_impulse(d, rep, ds) / d.inertia;
  } else {
    for (const auto &e : rep.equilibria)
      if (e.stability == Stability::stable) {
        th = e.theta;
        break;
      }
  }
  th = theta0.value_or(th);
  om = omega0.value_or(om);
  const double step = dt ? *dt : passive_time_step(d, rep, ds);
  const auto tr = simulate_1dof(d, th, om, nullptr, step, t_end.value_or(ds.t_max),
                                r.settings().solver);
  CsvWriter csv({"t", "theta", "omega", "U", "kinetic", "dissipated"});
  for (std::size_t i = 0; i < tr.size(); ++i)
    csv.row(std::vector<double>{tr.times[i], tr.thetas[i], tr.velocities[i], tr.potential[i],
                                tr.kinetic[i], tr.dissipated[i]});
  r.emit("simulate.csv", csv.str());
  if (r.plot) {
    LineChart c;
    c.title = "Passive trajectory";
    c.x_label = "time (s)";
    c.y_label = "bend angle (rad)";
    c.series.push_back({"theta", tr.times, tr.thetas});
    r.emit("simulate.svg", emit_svg(c));
  }
  std::cout << tr.size() << " samples, final theta = " << fmt(tr.thetas.back()) << " rad\n";
}

void cmd_closingtime(Run &r, std::optional<double> impulse) {
  const auto rep = bistable_report(r);
  const auto &ds = r.settings().dynamics;
  const double p = impulse ? *impulse : standard_trigger_impulse(r.design(), rep, ds);
  const auto ev = closing_time(r.design(), p, rep, ds);
  CsvWriter csv({"impulse", "triggered", "closing_time", "peak_velocity"});
  csv.row({fmt(p), flag(ev.triggered), ev.triggered ? fmt(ev.closing_time) : "",
           fmt(ev.peak_velocity)});
  r.emit("closingtime.csv", csv.str());
  if (ev.triggered)
    std::cout << fmt(ev.closing_time) << "\n";
  else
    std::cout << "not triggered\n";
}

void cmd_gravitycheck(Run &r, int sign) {
  const auto g = gravity_trigger_check(r.design(), sign, r.settings());
  CsvWriter csv({"sign", "gravity", "triggered", "margin"});
  csv.row({std::to_string(sign), fmt(r.design().gravity), flag(g.triggered), fmt(g.margin)});
  r.emit("gravitycheck.csv", csv.str());
  std::cout << (g.triggered ? "triggered" : "holds") << ", margin = " << fmt(g.margin) << " J\n";
}

void cmd_sweep(Run &r, const std::vector<std::string> &axes, bool grip, bool closing) {
  SweepSpec spec;
  for (const auto &a : axes)
    spec.parameters.push_back(parse_axis(a));
  spec.with_grip_force = grip;
  spec.with_closing_time = closing;
  const auto table = run_sweep(r.design(), spec, r.settings());
  std::vector<std::string> header = table.parameters;
  for (const char *h : {"bistable", "open_energy", "saddle_energy", "closed_energy", "snap_through",
                        "trigger_moment", "grip_force", "closing_time", "error"})
    header.emplace_back(h);
  CsvWriter csv(header);
  std::size_t failures = 0;
  for (const auto &row : table.rows) {
    std::vector<std::string> cells;
    for (double v : row.values)
      cells.push_back(fmt(v));
    const auto &m = row.metrics;
    cells.push_back(flag(m.bistable));
    for (double v : {m.open_energy, m.saddle_energy, m.closed_energy, m.snap_through,
                     m.trigger_moment, m.grip_force, m.closing_time})
      cells.push_back(csv_number(v));
    cells.push_back(row.error);
    failures += !row.error.empty();
    csv.row(cells);
  }
  r.emit("sweep.csv", csv.str());
  if (r.plot && table.parameters.size() == 1) {
    LineChart c;
    c.title = "Snap-through energy";
    c.x_label = table.parameters[0];
    c.y_label = "snap-through energy (J)";
    LineSeries s{"barrier", {}, {}};
    for (const auto &row : table.rows) {
      s.x.push_back(row.values[0]);
      s.y.push_back(row.metrics.snap_through);
    }
    c.series.push_back(s);
    r.emit("sweep.svg", emit_svg(c));
  }
  std::cout << table.rows.size() << " points, " << failures << " failed\n";
}

void cmd_feacases(Run &r) {
  const auto rep = reproduce_fea_cases(r.design(), r.settings());
  CsvWriter cases({"case", "bistable", "open_energy", "saddle_energy", "closed_energy",
                   "snap_through", "trigger_moment", "grip_force", "closing_time"});
  std::string text;
  for (const auto &c : rep.cases) {
    const auto &m = c.metrics;
    std::vector<std::string> cells{c.name, flag(m.bistable)};
    for (double v : {m.open_energy, m.saddle_energy, m.closed_energy, m.snap_through,
                     m.trigger_moment, m.grip_force, m.closing_time})
      cells.push_back(csv_number(v));
    cases.row(cells);
    text += "case." + c.name + ".open_energy = " + csv_number(m.open_energy) + "\n";
    text += "case." + c.name + ".snap_through = " + csv_number(m.snap_through) + "\n";
    text += "case." + c.name + ".closing_time = " + csv_number(m.closing_time) + "\n";
    text += "case." + c.name + ".grip_force = " + csv_number(m.grip_force) + "\n";
  }
  CsvWriter asserts({"assertion", "status", "statement", "detail"});
  for (const auto &a : rep.assertions) {
    asserts.row({a.name, to_string(a.status), a.statement, a.detail});
    text += "assertion." + a.name + " = " + to_string(a.status) + "\n";
    std::cout << to_string(a.status) << "  " << a.name << ": " << a.detail << "\n";
  }
  text += "matched.natural_curvature = " + fmt(rep.matched_kappa) + "\n";
  text += "matched.attach_fraction = " + fmt(rep.matched_attach) + "\n";
  text += "matched.grip_force = " + fmt(rep.matched_grip_force) + "\n";
  text += "matched.snap_through = " + fmt(rep.matched_barrier) + "\n";
  text += std::string("all_passed = ") + (rep.all_passed() ? "true" : "false") + "\n";
  r.emit("feacases.csv", cases.str());
  r.emit("feacases_assertions.csv", asserts.str());
  r.emit("feacases_report.txt", text);
  r.emit_plot("feacases.svg", emit_svg(fea_bar_chart(rep)));
}

void cmd_tunering(Run &r, std::optional<double> target, bool gravity_marginal) {
  if (target.has_value() == gravity_marginal)
    throw CLI::ValidationError("tunering", "give exactly one of --target or --gravity-marginal");
  const auto res = gravity_marginal ? gravity_marginal_width(r.design(), r.settings())
                                    : tune_ring_width(r.design(), *target, r.settings());
  CsvWriter csv({"width_scale", "lo", "hi", "barrier", "iterations"});
  csv.row({fmt(res.width_scale), fmt(res.lo), fmt(res.hi), fmt(res.barrier),
           std::to_string(res.iterations)});
  r.emit("tunering.csv", csv.str());
  ConfigDocument tuned = r.doc;
  tuned.design.ring.width_scale = res.width_scale;
  r.emit("tuned.cfg", serialize_config(tuned));
  std::cout << fmt(res.width_scale) << "\n";
}

void cmd_gripforce(Run &r, std::optional<double> halfwidth) {
  const double h = halfwidth.value_or(r.settings().explorer.object_halfwidth);
  const auto g = grip_force_estimate(r.design(), h, r.settings().solver);
  CsvWriter csv({"halfwidth", "force", "contact_angle", "moment_arm"});
  csv.row(std::vector<double>{h, g.force, g.contact_angle, g.moment_arm});
  r.emit("gripforce.csv", csv.str());
  std::cout << fmt(g.force) << "\n";
}

void cmd_calibrate(Run &r) {
  const auto c = calibrate_dynamics(r.design(), r.settings());
  CsvWriter csv({"inertia", "damping", "impulse", "closing_time"});
  csv.row(std::vector<double>{c.inertia, c.damping, c.impulse, c.closing_time});
  r.emit("calibrate.csv", csv.str());
  ConfigDocument cal = r.doc;
  cal.design.inertia = c.inertia;
  cal.design.damping = c.damping;
  r.emit("calibrated.cfg", serialize_config(cal));
  std::cout << "gripper.inertia = " << fmt(c.inertia) << "\ngripper.damping = " << fmt(c.damping)
            << "\n";
}

void cmd_frequency(Run &r, double lo, double hi, std::size_t n) {
  const auto rows = closing_time_vs_frequency_study(r.design(), geometric_ladder(lo, hi, n),
                                                    r.settings());
  CsvWriter csv({"scale", "ring_stiffness", "natural_frequency", "closing_time", "impulse",
                 "bistable", "triggered"});
  for (const auto &row : rows)
    csv.row({fmt(row.scale), fmt(row.ring_stiffness), fmt(row.natural_frequency),
             row.triggered ? fmt(row.closing_time) : "", fmt(row.impulse), flag(row.bistable),
             flag(row.triggered)});
  r.emit("frequency.csv", csv.str());
  std::cout << "spearman(1/omega, t_close) = " << fmt(frequency_study_correlation(rows)) << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Bistable soft-gripper energy model: statics, dynamics and design sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", BGRIP_VERSION);

  std::string config_path;
  Run run;
  run.out_dir = ".";

  const auto common = [&](CLI::App *sub) {
    sub->add_option("--config", config_path, "configuration file")->required();
    sub->add_option("--out", run.out_dir, "output directory (created if missing)");
    sub->add_flag("--plot", run.plot, "also write an SVG chart");
  };

  std::optional<double> lo, hi, tau_max, theta0, omega0, t_end, dt, impulse, target, halfwidth;
  std::optional<std::size_t> steps;
  std::size_t samples = 1001;
  bool chain = false, gravity_marginal = false, no_grip = false, with_closing = false;
  int sign = 1;
  std::vector<std::string> axes;
  double f_lo = 0.35, f_hi = 4.0;
  std::size_t f_n = 8;

  auto *landscape = app.add_subcommand("landscape", "sample U(theta) and its terms");
  common(landscape);
  landscape->add_option("--lo", lo, "lower angle (rad)");
  landscape->add_option("--hi", hi, "upper angle (rad)");
  landscape->add_option("--samples", samples, "number of samples")->check(CLI::Range(2, 10000000));

  auto *equilibria = app.add_subcommand("equilibria", "list equilibria");
  common(equilibria);
  equilibria->add_flag("--chain", chain, "use the discretised chain model");

  auto *snap = app.add_subcommand("snapthrough", "snap-through energy (J)");
  common(snap);
  snap->add_flag("--chain", chain, "use the discretised chain model");

  auto *trig = app.add_subcommand("trigger", "minimum quasi-static closing moment (N m)");
  common(trig);

  auto *cont = app.add_subcommand("continuation", "ramp a closing moment and record folds");
  common(cont);
  cont->add_option("--tau-max", tau_max, "largest moment (N m), default 1.5x trigger moment");
  cont->add_option("--steps", steps, "load steps");

  auto *sim = app.add_subcommand("simulate", "integrate the passive dynamics");
  common(sim);
  sim->add_option("--theta0", theta0, "initial angle (rad), default open state");
  sim->add_option("--omega0", omega0, "initial rate (rad/s), default standard trigger");
  sim->add_option("--t-end", t_end, "duration (s)");
  sim->add_option("--dt", dt, "time step (s)");

  auto *closing = app.add_subcommand("closingtime", "time to closure after a trigger impulse");
  common(closing);
  closing->add_option("--impulse", impulse, "angular impulse (N m s), default standard trigger");

  auto *grav = app.add_subcommand("gravitycheck", "does gravity alone close the gripper");
  common(grav);
  grav->add_option("--sign", sign, "+1 gravity along closing, -1 against")
      ->check(CLI::IsMember({-1, 1}));

  auto *sweep = app.add_subcommand("sweep", "Cartesian design sweep");
  common(sweep);
  sweep->add_option("--param", axes, "axis as key=lo:hi:n or key=v1,v2,...")->required();
  sweep->add_flag("--no-grip-force", no_grip, "skip the grip force column");
  sweep->add_flag("--closing-time", with_closing, "add the closing time column");

  auto *fea = app.add_subcommand("feacases", "morphology cases and their ordering assertions");
  common(fea);

  auto *tune = app.add_subcommand("tunering", "solve for the ring width scale");
  common(tune);
  tune->add_option("--target", target, "target snap-through energy (J)");
  tune->add_flag("--gravity-marginal", gravity_marginal, "narrowest width gravity can hold");

  auto *grip = app.add_subcommand("gripforce", "quasi-static grip force on an object");
  common(grip);
  grip->add_option("--halfwidth", halfwidth, "object half-width (m)");

  auto *cal = app.add_subcommand("calibrate", "fit inertia and damping to the target closing time");
  common(cal);

  auto *freq = app.add_subcommand("frequency", "closing time against natural frequency");
  common(freq);
  freq->add_option("--lo", f_lo, "smallest stiffness scale");
  freq->add_option("--hi", f_hi, "largest stiffness scale");
  freq->add_option("--n", f_n, "ladder points")->check(CLI::Range(2, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  CLI::App *sub = app.get_subcommands().front();
  run.command = "bgrip";
  for (int i = 1; i < argc; ++i)
    run.command += std::string(" ") + argv[i];

  try {
    run.doc = load_config(config_path);
    fs::create_directories(run.out_dir);
    const std::string name = sub->get_name();
    if (sub == landscape)
      cmd_landscape(run, lo, hi, samples);
    else if (sub == equilibria)
      cmd_equilibria(run, chain);
    else if (sub == snap)
      cmd_snapthrough(run, chain);
    else if (sub == trig)
      cmd_trigger(run);
    else if (sub == cont)
      cmd_continuation(run, tau_max, steps);
    else if (sub == sim)
      cmd_simulate(run, theta0, omega0, t_end, dt);
    else if (sub == closing)
      cmd_closingtime(run, impulse);
    else if (sub == grav)
      cmd_gravitycheck(run, sign);
    else if (sub == sweep)
      cmd_sweep(run, axes, !no_grip, with_closing);
    else if (sub == fea)
      cmd_feacases(run);
    else if (sub == tune)
      cmd_tunering(run, target, gravity_marginal);
    else if (sub == grip)
      cmd_gripforce(run, halfwidth);
    else if (sub == cal)
      cmd_calibrate(run);
    else if (sub == freq)
      cmd_frequency(run, f_lo, f_hi, f_n);
    run.finish(name);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
