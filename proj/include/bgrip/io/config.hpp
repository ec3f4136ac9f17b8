#ifndef BGRIP_IO_CONFIG_HPP
#define BGRIP_IO_CONFIG_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "bgrip/core/fields.hpp"
#include "bgrip/core/settings.hpp"
#include "bgrip/core/types.hpp"
#include "bgrip/core/validation.hpp"
#include "bgrip/errors.hpp"

namespace bgrip {

/// A complete run description: the design plus every solver setting.
struct ConfigDocument {
  GripperDesign design{};
  Settings settings{};
};

struct SettingField {
  std::string key;
  bool integral = false;
  std::function<double(const Settings &)> get;
  std::function<void(Settings &, double)> set;
};

#define BGRIP_SETTING(group, member, integral)                                                   \
  SettingField {                                                                                 \
    #group "." #member, integral,                                                                \
        [](const Settings &s) { return static_cast<double>(s.group.member); },                   \
        [](Settings &s, double v) { s.group.member = static_cast<decltype(s.group.member)>(v); } \
  }

inline const std::vector<SettingField> &setting_fields() {
  static const std::vector<SettingField> fields = {
      BGRIP_SETTING(solver, theta_min, false),
      BGRIP_SETTING(solver, theta_max, false),
      BGRIP_SETTING(solver, grid_n, true),
      BGRIP_SETTING(solver, root_tol, false),
      BGRIP_SETTING(solver, gradient_tol, false),
      BGRIP_SETTING(solver, max_halvings, true),
      BGRIP_SETTING(solver, newton_max_iter, true),
      BGRIP_SETTING(solver, chain_gradient_tol, false),
      BGRIP_SETTING(solver, merge_tol, false),
      BGRIP_SETTING(solver, string_images, true),
      BGRIP_SETTING(solver, saddle_gradient_tol, false),
      BGRIP_SETTING(solver, string_max_iter, true),
      BGRIP_SETTING(solver, continuation_steps, true),
      BGRIP_SETTING(dynamics, dt_fraction, false),
      BGRIP_SETTING(dynamics, t_max, false),
      BGRIP_SETTING(dynamics, closure_band, false),
      BGRIP_SETTING(dynamics, closure_dwell, false),
      BGRIP_SETTING(dynamics, trigger_impulse_factor, false),
      BGRIP_SETTING(dynamics, impulse_rel_tol, false),
      BGRIP_SETTING(dynamics, target_closing_time, false),
      BGRIP_SETTING(dynamics, damping_ratio, false),
      BGRIP_SETTING(explorer, object_halfwidth, false),
      BGRIP_SETTING(explorer, budget, true),
      BGRIP_SETTING(explorer, threads, true),
      BGRIP_SETTING(explorer, ring_shift, false),
      BGRIP_SETTING(explorer, thin_factor, false),
      BGRIP_SETTING(explorer, high_curvature, false),
      BGRIP_SETTING(explorer, barrier_match_tol, false),
      BGRIP_SETTING(explorer, gravity_barrier_tol, false),
      BGRIP_SETTING(explorer, tune_tol, false),
      BGRIP_SETTING(explorer, tune_max_iter, true),
  };
  return fields;
}

#undef BGRIP_SETTING

inline std::vector<std::string> settings_errors(const Settings &s) {
  std::vector<std::string> errs;
  const auto require = [&errs](bool ok, const char *msg) {
    if (!ok)
      errs.emplace_back(msg);
  };
  const auto &so = s.solver;
  require(so.theta_min < so.theta_max, "solver.theta_min must be < solver.theta_max");
  require(so.grid_n >= 100, "solver.grid_n must be >= 100");
  require(so.root_tol > 0.0, "solver.root_tol must be > 0");
  require(so.gradient_tol > 0.0, "solver.gradient_tol must be > 0");
  require(so.max_halvings >= 1, "solver.max_halvings must be >= 1");
  require(so.newton_max_iter >= 1, "solver.newton_max_iter must be >= 1");
  require(so.chain_gradient_tol > 0.0, "solver.chain_gradient_tol must be > 0");
  require(so.merge_tol > 0.0, "solver.merge_tol must be > 0");
  require(so.string_images >= 8, "solver.string_images must be >= 8");
  require(so.saddle_gradient_tol > 0.0, "solver.saddle_gradient_tol must be > 0");
  require(so.string_max_iter >= 1, "solver.string_max_iter must be >= 1");
  require(so.continuation_steps >= 10, "solver.continuation_steps must be >= 10");
  const auto &dy = s.dynamics;
  require(dy.dt_fraction > 0.0 && dy.dt_fraction <= 0.05,
          "dynamics.dt_fraction must lie in (0, 0.05]");
  require(dy.t_max > 0.0, "dynamics.t_max must be > 0");
  require(dy.closure_band > 0.0, "dynamics.closure_band must be > 0");
  require(dy.closure_dwell >= 0.0, "dynamics.closure_dwell must be >= 0");
  require(dy.trigger_impulse_factor >= 1.0, "dynamics.trigger_impulse_factor must be >= 1");
  require(dy.impulse_rel_tol > 0.0, "dynamics.impulse_rel_tol must be > 0");
  require(dy.target_closing_time > 0.0, "dynamics.target_closing_time must be > 0");
  require(dy.damping_ratio >= 0.0, "dynamics.damping_ratio must be >= 0");
  const auto &ex = s.explorer;
  require(ex.object_halfwidth > 0.0, "explorer.object_halfwidth must be > 0");
  require(ex.budget >= 1, "explorer.budget must be >= 1");
  require(ex.threads >= 1, "explorer.threads must be >= 1");
  require(ex.ring_shift >= 0.0, "explorer.ring_shift must be >= 0");
  require(ex.thin_factor > 0.0 && ex.thin_factor <= 1.0, "explorer.thin_factor must lie in (0, 1]");
  require(ex.high_curvature > 0.0, "explorer.high_curvature must be > 0");
  require(ex.barrier_match_tol > 0.0, "explorer.barrier_match_tol must be > 0");
  require(ex.gravity_barrier_tol > 0.0, "explorer.gravity_barrier_tol must be > 0");
  require(ex.tune_tol >= 0.0, "explorer.tune_tol must be >= 0");
  require(ex.tune_max_iter >= 1, "explorer.tune_max_iter must be >= 1");
  return errs;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline bool parse_real(std::string_view text, double &out) {
  const char *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace detail

/// Parses the dotted-key format: one `key = value` per line, '#' starts a
/// comment, keys absent from the text keep their baseline defaults. Every
/// problem is collected and reported together, with its line number.
inline ConfigDocument parse_config(std::string_view text) {
  struct Entry {
    std::string value;
    int line;
  };
  std::vector<std::string> errors;
  std::map<std::string, Entry> entries;
  std::vector<std::string> order;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) {
      errors.push_back(where + "expected 'key = value'");
      continue;
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      errors.push_back(where + "expected 'key = value'");
      continue;
    }
    if (const auto it = entries.find(key); it != entries.end()) {
      errors.push_back(where + "duplicate key '" + key + "' (first set on line " +
                       std::to_string(it->second.line) + ")");
      continue;
    }
    entries.emplace(key, Entry{value, line_no});
    order.push_back(key);
  }

  ConfigDocument doc;
  const auto at = [&](const std::string &key) {
    return "line " + std::to_string(entries.at(key).line) + ": ";
  };

  // The material choice decides which coefficient keys apply, so it goes first.
  if (const auto it = entries.find("finger.material"); it != entries.end()) {
    if (it->second.value == "yeoh")
      doc.design.finger.material = Yeoh{};
    else if (it->second.value != "linear_elastic")
      errors.push_back(at(it->first) + "finger.material must be 'linear_elastic' or 'yeoh', got '" +
                       it->second.value + "'");
  }

  for (const auto &key : order) {
    if (key == "finger.material")
      continue;
    const std::string &raw = entries.at(key).value;
    const DesignField *df = find_design_field(key);
    const SettingField *sf = nullptr;
    for (const auto &f : setting_fields())
      if (f.key == key)
        sf = &f;
    if (!df && !sf) {
      errors.push_back(at(key) + "unknown key '" + key + "'");
      continue;
    }
    double v = 0.0;
    if (!detail::parse_real(raw, v)) {
      errors.push_back(at(key) + key + " expects a finite number, got '" + raw + "'");
      continue;
    }
    const bool integral = df ? df->integral : sf->integral;
    if (integral && (v != std::floor(v) || v < 0.0 || v > 9007199254740992.0)) {
      errors.push_back(at(key) + key + " expects a non-negative integer, got '" + raw + "'");
      continue;
    }
    try {
      if (df)
        df->set(doc.design, v);
      else
        sf->set(doc.settings, v);
    } catch (const ContractViolation &e) {
      errors.push_back(at(key) + e.what());
    }
  }

  // Invariant checks on the assembled document, attributed to the line that set the key.
  auto invariant_errors = validation_errors(doc.design);
  for (auto &e : settings_errors(doc.settings))
    invariant_errors.push_back(std::move(e));
  for (const auto &e : invariant_errors) {
    const std::string key = e.substr(0, e.find(' '));
    if (entries.count(key))
      errors.push_back(at(key) + e);
    else if (key == "Yeoh" && entries.count("finger.yeoh_c20"))
      errors.push_back(at("finger.yeoh_c20") + e);
    else
      errors.push_back(e + " (default value)");
  }
  if (!errors.empty()) {
    const auto line_of = [](const std::string &e) {
      return e.rfind("line ", 0) == 0 ? std::stoi(e.substr(5)) : std::numeric_limits<int>::max();
    };
    std::stable_sort(errors.begin(), errors.end(), [&](const auto &a, const auto &b) {
      return line_of(a) < line_of(b);
    });
    throw ConfigError(std::move(errors));
  }
  return doc;
}

inline ConfigDocument load_config(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError({"cannot open config file '" + path + "'"});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

/// Canonical text form: every key, fixed order, 17 significant digits.
/// Parsing it reproduces the document exactly.
inline std::string serialize_config(const ConfigDocument &doc) {
  std::string out;
  const bool yeoh = std::holds_alternative<Yeoh>(doc.design.finger.material);
  out += std::string("finger.material = ") + (yeoh ? "yeoh" : "linear_elastic") + "\n";
  for (const auto &f : design_fields()) {
    const double v = f.get(doc.design);
    if (std::isnan(v))
      continue; // coefficient of the material not in use
    out += f.key + " = " + detail::format_real(v) + "\n";
  }
  for (const auto &f : setting_fields())
    out += f.key + " = " + detail::format_real(f.get(doc.settings)) + "\n";
  return out;
}

/// 64-bit FNV-1a of the canonical serialisation, as 16 hex digits.
inline std::string config_hash(const ConfigDocument &doc) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : serialize_config(doc)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace bgrip

#endif // BGRIP_IO_CONFIG_HPP
