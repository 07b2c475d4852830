#include "uavdeploy/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace uavdeploy {

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  if (trim(s).empty()) return parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double to_double(const std::string &key, const std::string &text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception &) {
    throw ScenarioError(key, "not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw ScenarioError(key, "not a finite number: '" + text + "'");
  return v;
}

std::uint64_t to_u64(const std::string &key, const std::string &text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ScenarioError(key, "not a non-negative integer: '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception &) {
    throw ScenarioError(key, "integer out of range: '" + text + "'");
  }
}

int to_int(const std::string &key, const std::string &text) {
  const std::uint64_t v = to_u64(key, text);
  if (v > 1000000000ull) throw ScenarioError(key, "integer out of range: '" + text + "'");
  return static_cast<int>(v);
}

std::vector<double> to_doubles(const std::string &key, const std::string &text) {
  std::vector<double> out;
  for (const auto &part : split(text, ',')) out.push_back(to_double(key, part));
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T, class F>
std::string join(const std::vector<T> &items, const std::string &sep, F f) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += f(items[i]);
  }
  return out;
}

const std::map<std::string, ExperimentKind> &experiment_names() {
  static const std::map<std::string, ExperimentKind> names{
      {"lloyd-a", ExperimentKind::lloyd_a}, {"lloyd-b", ExperimentKind::lloyd_b},
      {"kss", ExperimentKind::kss},         {"msbd", ExperimentKind::msbd},
      {"analytic", ExperimentKind::analytic}, {"brute-force", ExperimentKind::brute_force},
      {"sweep", ExperimentKind::sweep}};
  return names;
}

bool needs_region(ExperimentKind k) {
  return k != ExperimentKind::analytic && k != ExperimentKind::brute_force;
}

using Setter = std::function<void(Scenario &, const std::string &key, const std::string &value)>;

const std::map<std::string, Setter> &setters() {
  static const std::map<std::string, Setter> table{
      {"experiment",
       [](Scenario &s, const std::string &k, const std::string &v) {
         const auto it = experiment_names().find(v);
         if (it == experiment_names().end()) throw ScenarioError(k, "unknown experiment '" + v + "'");
         s.experiment = it->second;
       }},
      {"region_m",
       [](Scenario &s, const std::string &k, const std::string &v) {
         std::vector<Vec2> pts;
         for (const auto &pair : split(v, ';')) {
           const auto xy = to_doubles(k, pair);
           if (xy.size() != 2) throw ScenarioError(k, "vertex must be 'x,y', got '" + pair + "'");
           pts.push_back({xy[0], xy[1]});
         }
         if (pts.empty()) {
           s.region = Polygon();
           return;
         }
         try {
           s.region = Polygon(pts);
         } catch (const std::exception &e) {
           throw ScenarioError(k, e.what());
         }
       }},
      {"density",
       [](Scenario &s, const std::string &k, const std::string &v) {
         if (v == "uniform") {
           s.density = DensityField::Kind::uniform;
         } else if (v == "gaussian-mixture") {
           s.density = DensityField::Kind::gaussian_mixture;
         } else {
           throw ScenarioError(k, "expected 'uniform' or 'gaussian-mixture', got '" + v + "'");
         }
       }},
      {"mixture",
       [](Scenario &s, const std::string &k, const std::string &v) {
         s.mixture.clear();
         for (const auto &item : split(v, ';')) {
           const auto f = to_doubles(k, item);
           if (f.size() != 4) throw ScenarioError(k, "component must be 'weight,x,y,sigma', got '" + item + "'");
           s.mixture.push_back({f[0], {f[1], f[2]}, f[3]});
         }
       }},
      {"sigma_scale", [](Scenario &s, const std::string &k, const std::string &v) { s.sigma_scale = to_double(k, v); }},
      {"alpha", [](Scenario &s, const std::string &k, const std::string &v) { s.alpha = to_double(k, v); }},
      {"kappa", [](Scenario &s, const std::string &k, const std::string &v) { s.kappa = to_double(k, v); }},
      {"h_min_m", [](Scenario &s, const std::string &k, const std::string &v) { s.h_min_m = to_double(k, v); }},
      {"beta0", [](Scenario &s, const std::string &k, const std::string &v) { s.beta0 = to_double(k, v); }},
      {"power_mode",
       [](Scenario &s, const std::string &k, const std::string &v) {
         if (v != "normalized" && v != "physical") {
           throw ScenarioError(k, "expected 'normalized' or 'physical', got '" + v + "'");
         }
         s.normalized = v == "normalized";
       }},
      {"n_uavs",
       [](Scenario &s, const std::string &k, const std::string &v) {
         s.n_uavs.clear();
         for (const auto &part : split(v, ',')) s.n_uavs.push_back(static_cast<std::size_t>(to_u64(k, part)));
       }},
      {"restarts",
       [](Scenario &s, const std::string &k, const std::string &v) {
         s.restarts = static_cast<std::size_t>(to_u64(k, v));
       }},
      {"seed", [](Scenario &s, const std::string &k, const std::string &v) { s.seed = to_u64(k, v); }},
      {"grid", [](Scenario &s, const std::string &k, const std::string &v) { s.grid = to_int(k, v); }},
      {"output_dir", [](Scenario &s, const std::string &, const std::string &v) { s.output_dir = v; }},
      {"init_height_m",
       [](Scenario &s, const std::string &k, const std::string &v) { s.init_height_m = to_double(k, v); }},
      {"initial_step_m",
       [](Scenario &s, const std::string &k, const std::string &v) { s.initial_step_m = to_double(k, v); }},
      {"stop_threshold",
       [](Scenario &s, const std::string &k, const std::string &v) { s.stop_threshold = to_double(k, v); }},
      {"max_outer_iterations",
       [](Scenario &s, const std::string &k, const std::string &v) { s.max_outer_iterations = to_int(k, v); }},
      {"max_halvings",
       [](Scenario &s, const std::string &k, const std::string &v) { s.max_halvings = to_int(k, v); }},
      {"sweep_variant",
       [](Scenario &s, const std::string &k, const std::string &v) {
         if (v == "A") {
           s.sweep_variant = LloydVariant::A;
         } else if (v == "B") {
           s.sweep_variant = LloydVariant::B;
         } else {
           throw ScenarioError(k, "expected 'A' or 'B', got '" + v + "'");
         }
       }},
      {"theta_hpbw_deg",
       [](Scenario &s, const std::string &k, const std::string &v) { s.theta_hpbw_deg = to_double(k, v); }},
      {"packing_file", [](Scenario &s, const std::string &, const std::string &v) { s.packing_file = v; }},
      {"gamma_list", [](Scenario &s, const std::string &k, const std::string &v) { s.gamma_list = to_doubles(k, v); }},
      {"kappa_list", [](Scenario &s, const std::string &k, const std::string &v) { s.kappa_list = to_doubles(k, v); }},
      {"alpha_list", [](Scenario &s, const std::string &k, const std::string &v) { s.alpha_list = to_doubles(k, v); }},
      {"hex_area_list_m2",
       [](Scenario &s, const std::string &k, const std::string &v) { s.hex_area_list_m2 = to_doubles(k, v); }},
      {"samples", [](Scenario &s, const std::string &k, const std::string &v) { s.samples = to_int(k, v); }},
  };
  return table;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto &[name, k] : experiment_names()) {
    if (k == kind) return name;
  }
  return "?";
}

PowerParams Scenario::power_params() const {
  PowerParams p;
  p.alpha = alpha;
  p.kappa = kappa;
  p.beta0 = beta0;
  p.h_min = h_min_m;
  p.normalized = normalized;
  return p;
}

DensityField Scenario::density_field() const {
  if (density == DensityField::Kind::uniform) return DensityField::uniform();
  return DensityField::gaussian_mixture(mixture, sigma_scale);
}

LloydConfig Scenario::lloyd_config(LloydVariant variant) const {
  LloydConfig c = LloydConfig::default_config(region, variant);
  if (initial_step_m > 0.0) c.initial_step = initial_step_m;
  c.stop_threshold = stop_threshold;
  c.max_outer_iterations = max_outer_iterations;
  c.max_halvings = max_halvings;
  c.rng_seed = seed;
  return c;
}

Scenario parse_scenario_text(const std::string &text) {
  Scenario s;
  std::istringstream in(text);
  std::string raw;
  std::map<std::string, int> seen;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ScenarioError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ScenarioError(key, "unknown key");
    if (seen[key]++) throw ScenarioError(key, "given more than once");
    it->second(s, key, value);
  }
  if (!seen.count("experiment")) throw ScenarioError("experiment", "missing");
  validate(s);
  return s;
}

Scenario parse_scenario(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("scenario", "cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario_text(buf.str());
  // relative packing paths resolve against the scenario's directory
  if (!s.packing_file.empty() && std::filesystem::path(s.packing_file).is_relative()) {
    const auto base = std::filesystem::path(path).parent_path();
    s.packing_file = (base / s.packing_file).lexically_normal().string();
    if (!std::filesystem::exists(s.packing_file)) {
      throw ScenarioError("packing_file", "file not found: " + s.packing_file);
    }
  }
  return s;
}

std::string write_scenario(const Scenario &s) {
  std::ostringstream out;
  auto d = [](double v) { return fmt(v); };
  out << "experiment = " << to_string(s.experiment) << '\n';
  out << "region_m = " << join(s.region.vertices(), "; ", [](Vec2 p) { return fmt(p.x) + "," + fmt(p.y); }) << '\n';
  out << "density = " << (s.density == DensityField::Kind::uniform ? "uniform" : "gaussian-mixture") << '\n';
  out << "mixture = " << join(s.mixture, "; ", [](const GaussianComponent &c) {
    return fmt(c.weight) + "," + fmt(c.mean.x) + "," + fmt(c.mean.y) + "," + fmt(c.sigma);
  }) << '\n';
  out << "sigma_scale = " << fmt(s.sigma_scale) << '\n';
  out << "alpha = " << fmt(s.alpha) << '\n';
  out << "kappa = " << fmt(s.kappa) << '\n';
  out << "h_min_m = " << fmt(s.h_min_m) << '\n';
  out << "beta0 = " << fmt(s.beta0) << '\n';
  out << "power_mode = " << (s.normalized ? "normalized" : "physical") << '\n';
  out << "n_uavs = " << join(s.n_uavs, ",", [](std::size_t n) { return std::to_string(n); }) << '\n';
  out << "restarts = " << s.restarts << '\n';
  out << "seed = " << s.seed << '\n';
  out << "grid = " << s.grid << '\n';
  out << "output_dir = " << s.output_dir << '\n';
  out << "init_height_m = " << fmt(s.init_height_m) << '\n';
  out << "initial_step_m = " << fmt(s.initial_step_m) << '\n';
  out << "stop_threshold = " << fmt(s.stop_threshold) << '\n';
  out << "max_outer_iterations = " << s.max_outer_iterations << '\n';
  out << "max_halvings = " << s.max_halvings << '\n';
  out << "sweep_variant = " << (s.sweep_variant == LloydVariant::A ? "A" : "B") << '\n';
  out << "theta_hpbw_deg = " << fmt(s.theta_hpbw_deg) << '\n';
  out << "packing_file = " << s.packing_file << '\n';
  out << "gamma_list = " << join(s.gamma_list, ",", d) << '\n';
  out << "kappa_list = " << join(s.kappa_list, ",", d) << '\n';
  out << "alpha_list = " << join(s.alpha_list, ",", d) << '\n';
  out << "hex_area_list_m2 = " << join(s.hex_area_list_m2, ",", d) << '\n';
  out << "samples = " << s.samples << '\n';
  return out.str();
}

void validate(const Scenario &s) {
  const ExperimentKind k = s.experiment;
  if (!(s.alpha >= 1.0)) throw ScenarioError("alpha", "must be >= 1");
  if (!(s.kappa >= 0.0)) throw ScenarioError("kappa", "must be >= 0");
  const bool directional = k == ExperimentKind::lloyd_a || k == ExperimentKind::lloyd_b ||
                           k == ExperimentKind::sweep || k == ExperimentKind::msbd || k == ExperimentKind::kss;
  if (directional && !(s.kappa >= 1.0)) {
    throw ScenarioError("kappa", "directional optimizers require kappa >= 1");
  }
  if (!(s.h_min_m > 0.0)) throw ScenarioError("h_min_m", "must be > 0");
  if (!(s.beta0 > 0.0)) throw ScenarioError("beta0", "must be > 0");
  if (!(s.sigma_scale > 0.0)) throw ScenarioError("sigma_scale", "must be > 0");
  if (s.density == DensityField::Kind::gaussian_mixture) {
    if (s.mixture.empty()) throw ScenarioError("mixture", "gaussian-mixture density needs at least one component");
    for (const auto &c : s.mixture) {
      if (!(c.weight > 0.0)) throw ScenarioError("mixture", "component weights must be > 0");
      if (!(c.sigma > 0.0)) throw ScenarioError("mixture", "component sigma must be > 0");
    }
  }

  if (needs_region(k)) {
    if (s.region.empty()) throw ScenarioError("region_m", "missing");
    if (s.n_uavs.empty()) throw ScenarioError("n_uavs", "missing");
    for (std::size_t n : s.n_uavs) {
      if (n == 0) throw ScenarioError("n_uavs", "must be >= 1");
    }
    if (k != ExperimentKind::sweep && s.n_uavs.size() != 1) {
      throw ScenarioError("n_uavs", "a list of N is only allowed for sweep experiments");
    }
    if (s.restarts == 0) throw ScenarioError("restarts", "must be >= 1");
    if (s.grid < 8 || s.grid > 8192) throw ScenarioError("grid", "must lie in [8, 8192]");
    if (!(s.init_height_m > 0.0)) throw ScenarioError("init_height_m", "must be > 0");
    if (!(s.initial_step_m >= 0.0)) throw ScenarioError("initial_step_m", "must be >= 0 (0 selects the default)");
    if (!(s.stop_threshold > 0.0)) throw ScenarioError("stop_threshold", "must be > 0");
    if (s.max_outer_iterations < 1) throw ScenarioError("max_outer_iterations", "must be >= 1");
    if (s.max_halvings < 1) throw ScenarioError("max_halvings", "must be >= 1");
  }
  if (k == ExperimentKind::msbd && !(s.theta_hpbw_deg > 0.0 && s.theta_hpbw_deg < 180.0)) {
    throw ScenarioError("theta_hpbw_deg", "must lie in (0, 180)");
  }
  if (k == ExperimentKind::analytic || k == ExperimentKind::brute_force) {
    if (s.hex_area_list_m2.empty()) throw ScenarioError("hex_area_list_m2", "missing");
    for (double H : s.hex_area_list_m2) {
      if (!(H > 0.0)) throw ScenarioError("hex_area_list_m2", "areas must be > 0");
    }
    for (double kap : s.kappa_list) {
      if (!(kap >= 1.0)) throw ScenarioError("kappa_list", "entries must be >= 1");
    }
  }
  if (k == ExperimentKind::analytic) {
    if (s.gamma_list.empty()) throw ScenarioError("gamma_list", "missing");
    for (double g : s.gamma_list) {
      if (g != 1.0 && g != 2.0 && g != 3.0) throw ScenarioError("gamma_list", "closed forms exist for 1, 2, 3 only");
    }
  }
  if (k == ExperimentKind::brute_force) {
    if (s.alpha_list.empty()) throw ScenarioError("alpha_list", "missing");
    for (double a : s.alpha_list) {
      if (!(a >= 1.0)) throw ScenarioError("alpha_list", "entries must be >= 1");
    }
    if (s.samples < 2) throw ScenarioError("samples", "must be >= 2");
  }
}

}  // namespace uavdeploy
