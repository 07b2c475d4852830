#include "uavdeploy/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "uavdeploy/analytic_heights.hpp"
#include "uavdeploy/baselines.hpp"
#include "uavdeploy/output.hpp"

namespace uavdeploy {

namespace {

class Writer {
 public:
  explicit Writer(const std::string &dir) : dir_(dir) {}

  void put(const std::string &name, const std::string &content) {
    write_file_atomic((std::filesystem::path(dir_) / name).string(), content);
    result.files.push_back(name);
  }

  ExperimentResult result;

 private:
  std::string dir_;
};

void note(const ExperimentOptions &o, const std::string &line) {
  if (o.log) *o.log << line << '\n';
}

PowerParams physical(PowerParams p) {
  p.normalized = false;
  return p;
}

std::string power_trace_csv(const RunReport &r) {
  CsvTable t({"iteration", "power", "min_height_m"});
  for (std::size_t i = 0; i < r.power_trace.size(); ++i) t.row().add(i).add(r.power_trace[i]).add(r.min_height_trace[i]);
  return t.str();
}

std::string restarts_csv(const MultiStartReport &m, std::uint64_t seed) {
  CsvTable t({"restart", "seed", "final_power"});
  for (std::size_t i = 0; i < m.final_powers.size(); ++i) {
    t.row().add(i).add(std::to_string(restart_seed(seed, i))).add(m.final_powers[i]);
  }
  return t.str();
}

void write_deployment_artifacts(Writer &w, const Deployment &d, const Scene &scene, const PowerParams &params) {
  const AssignmentGrid grid = assign_cells(d, scene.raster, params);
  w.put("deployment.csv", deployment_csv(d));
  w.put("cells.csv", cells_csv(grid));
  w.put("cells.ppm", render_cells_ppm(grid, d));
}

void run_lloyd(const Scenario &s, const ExperimentOptions &o, Writer &w) {
  const PowerParams params = s.power_params();
  const LloydVariant variant = s.experiment == ExperimentKind::lloyd_a ? LloydVariant::A : LloydVariant::B;
  const Scene scene = Scene::build(s.region, s.density_field(), s.grid);
  const std::size_t n = s.n_uavs.front();
  note(o, "optimizing N=" + std::to_string(n) + " with " + std::to_string(s.restarts) + " restart(s)");
  const MultiStartReport m =
      multi_start(n, s.restarts, s.seed, s.lloyd_config(variant), scene, params, s.init_height_m, o.threads);
  const RunReport &best = m.best;

  w.put("power_trace.csv", power_trace_csv(best));
  w.put("restarts.csv", restarts_csv(m, s.seed));
  write_deployment_artifacts(w, best.final, scene, params);

  CsvTable t({"experiment", "n_uavs", "restarts", "best_index", "best_power", "mean_power", "std_power",
              "best_power_physical", "iterations", "converged", "height_std_m"});
  t.row()
      .add(to_string(s.experiment))
      .add(n)
      .add(s.restarts)
      .add(m.best_index)
      .add(best.power_trace.back())
      .add(m.mean_power)
      .add(m.std_power)
      .add(cross_evaluate(best.final, scene, physical(params)).total)
      .add(best.iterations)
      .add(best.converged ? 1 : 0)
      .add(best.height_std);
  w.put("summary.csv", t.str());
}

void run_kss(const Scenario &s, const ExperimentOptions &o, Writer &w) {
  const PowerParams eval = s.power_params();
  PowerParams omni = eval;
  omni.kappa = 0.0;
  const Scene scene = Scene::build(s.region, s.density_field(), s.grid);
  const std::size_t n = s.n_uavs.front();
  note(o, "KSS baseline N=" + std::to_string(n));
  // multi_start runs the same Lloyd-B machinery kss_optimize uses; the
  // h_min clamp is applied to the winner afterwards
  const MultiStartReport m =
      multi_start(n, s.restarts, s.seed, s.lloyd_config(LloydVariant::B), scene, omni, s.init_height_m, o.threads);
  Deployment d = m.best.final;
  for (double &h : d.heights) h = std::max(h, omni.h_min);

  w.put("power_trace.csv", power_trace_csv(m.best));
  w.put("restarts.csv", restarts_csv(m, s.seed));
  write_deployment_artifacts(w, d, scene, eval);

  CsvTable t({"experiment", "n_uavs", "restarts", "best_power_omni", "power_omni_physical", "power_eval",
              "power_eval_physical", "kappa_eval", "height_std_m"});
  t.row()
      .add(std::string("kss"))
      .add(n)
      .add(s.restarts)
      .add(m.best.power_trace.back())
      .add(cross_evaluate(d, scene, physical(omni)).total)
      .add(cross_evaluate(d, scene, eval).total)
      .add(cross_evaluate(d, scene, physical(eval)).total)
      .add(eval.kappa)
      .add(height_std(d));
  w.put("summary.csv", t.str());
}

void run_msbd(const Scenario &s, const ExperimentOptions &o, Writer &w) {
  const PowerParams params = s.power_params();
  const Scene scene = Scene::build(s.region, s.density_field(), s.grid);
  const std::size_t n = s.n_uavs.front();
  const Packing packing = s.packing_file.empty() ? hex_lattice_packing(s.region.bounds(), n) : read_packing(s.packing_file);
  if (packing.centers.empty()) throw std::runtime_error("packing has no disks");
  note(o, "MSBD baseline with " + std::to_string(packing.centers.size()) + " disks from " + packing.source);
  Deployment d = msbd_deploy(packing, s.theta_hpbw_deg);
  for (double &h : d.heights) h = std::max(h, params.h_min);

  write_deployment_artifacts(w, d, scene, params);
  w.put("packing.csv", format_packing(packing));
  CsvTable t({"experiment", "n_uavs", "packing_source", "radius_m", "height_m", "theta_hpbw_deg",
              "coverage_fraction", "power", "power_physical"});
  t.row()
      .add(std::string("msbd"))
      .add(packing.centers.size())
      .add(packing.source)
      .add(packing.radius)
      .add(d.heights.front())
      .add(s.theta_hpbw_deg)
      .add(disk_coverage_fraction(packing, scene.raster))
      .add(cross_evaluate(d, scene, params).total)
      .add(cross_evaluate(d, scene, physical(params)).total);
  w.put("summary.csv", t.str());
}

std::vector<double> kappas_for_gamma(const Scenario &s, int gamma) {
  std::vector<double> out;
  if (s.kappa_list.empty()) {
    for (int k = 1; k <= 2 * gamma - 1; ++k) out.push_back(k);
  } else {
    for (double k : s.kappa_list) {
      if (k >= 1.0 && k <= 2.0 * gamma - 1.0) out.push_back(k);
    }
  }
  return out;
}

void run_analytic(const Scenario &s, const ExperimentOptions &o, Writer &w) {
  CsvTable t({"gamma", "kappa", "alpha", "H_m2", "c_closed", "h_star_m", "z_m2", "c_numeric", "rel_diff_c",
              "p_bar_normalized", "p_bar_physical", "p_bar_quadrature", "p_bar_alternate", "alternate_over_derived"});
  for (double gd : s.gamma_list) {
    const int gamma = static_cast<int>(gd);
    for (double kappa : kappas_for_gamma(s, gamma)) {
      for (double H : s.hex_area_list_m2) {
        note(o, "analytic gamma=" + format_double(gd) + " kappa=" + format_double(kappa) + " H=" + format_double(H));
        const CommonHeightSolution closed = solve_common_height_closed(gamma, kappa, H);
        const CommonHeightSolution numeric = solve_common_height_numeric(gd, kappa, H);
        const double p_phys = optimal_average_power(gamma, kappa, H, false);
        const double alternate = alternate_power_expression(gamma, kappa, H);
        t.row()
            .add(gd)
            .add(kappa)
            .add(2.0 * gd - kappa)
            .add(H)
            .add(closed.c_factor)
            .add(closed.h_star)
            .add(closed.z)
            .add(numeric.c_factor)
            .add(std::fabs(closed.c_factor - numeric.c_factor) / numeric.c_factor)
            .add(closed.p_bar_star)
            .add(p_phys)
            .add(hexagon_average_power(gd, kappa, H, closed.h_star))
            .add(alternate)
            .add(alternate / p_phys);
      }
    }
  }
  w.put("analytic.csv", t.str());
}

void run_brute_force(const Scenario &s, const ExperimentOptions &o, Writer &w) {
  const std::vector<double> kappas = s.kappa_list.empty() ? std::vector<double>{s.kappa} : s.kappa_list;
  CsvTable t({"alpha", "kappa", "gamma", "H_m2", "samples", "h_brute_m", "h_numeric_m", "h_closed_m",
              "rel_gap_brute_numeric"});
  for (double alpha : s.alpha_list) {
    for (double kappa : kappas) {
      for (double H : s.hex_area_list_m2) {
        const double gamma = 0.5 * (alpha + kappa);
        note(o, "brute force alpha=" + format_double(alpha) + " kappa=" + format_double(kappa) + " H=" + format_double(H));
        const double hb = brute_force_height(H, kappa, alpha, s.samples);
        const double hn = solve_common_height_numeric(gamma, kappa, H).h_star;
        std::string closed;
        const int gi = static_cast<int>(gamma);
        if (gi == gamma && gi >= 1 && gi <= 3 && kappa <= 2.0 * gi - 1.0) {
          closed = format_double(solve_common_height_closed(gi, kappa, H).h_star);
        }
        t.row().add(alpha).add(kappa).add(gamma).add(H).add(s.samples).add(hb).add(hn).add(closed).add(
            std::fabs(hb - hn) / hn);
      }
    }
  }
  w.put("brute_force.csv", t.str());
}

void run_sweep(const Scenario &s, const ExperimentOptions &o, Writer &w) {
  const PowerParams params = s.power_params();
  const Scene scene = Scene::build(s.region, s.density_field(), s.grid);
  const LloydConfig config = s.lloyd_config(s.sweep_variant);
  CsvTable t({"n_uavs", "variant", "restarts", "best_power", "mean_power", "std_power", "best_power_physical",
              "height_std_m", "iterations", "converged"});
  for (std::size_t n : s.n_uavs) {
    note(o, "sweep N=" + std::to_string(n));
    const MultiStartReport m = multi_start(n, s.restarts, s.seed, config, scene, params, s.init_height_m, o.threads);
    t.row()
        .add(n)
        .add(std::string(s.sweep_variant == LloydVariant::A ? "A" : "B"))
        .add(s.restarts)
        .add(m.best.power_trace.back())
        .add(m.mean_power)
        .add(m.std_power)
        .add(cross_evaluate(m.best.final, scene, physical(params)).total)
        .add(m.best.height_std)
        .add(m.best.iterations)
        .add(m.best.converged ? 1 : 0);
    w.put("deployment_N" + std::to_string(n) + ".csv", deployment_csv(m.best.final));
  }
  w.put("sweep.csv", t.str());
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::uint64_t parameter_hash(const Scenario &scenario) {
  Scenario s = scenario;
  s.output_dir.clear();
  return fnv1a64(write_scenario(s));
}

ExperimentResult run_experiment(const Scenario &scenario, const ExperimentOptions &options) {
  validate(scenario);
  Writer w(scenario.output_dir);
  switch (scenario.experiment) {
    case ExperimentKind::lloyd_a:
    case ExperimentKind::lloyd_b: run_lloyd(scenario, options, w); break;
    case ExperimentKind::kss: run_kss(scenario, options, w); break;
    case ExperimentKind::msbd: run_msbd(scenario, options, w); break;
    case ExperimentKind::analytic: run_analytic(scenario, options, w); break;
    case ExperimentKind::brute_force: run_brute_force(scenario, options, w); break;
    case ExperimentKind::sweep: run_sweep(scenario, options, w); break;
  }
  // the scenario text alone re-creates every table above
  std::string manifest = "# uavdeploy run manifest\n";
  manifest += "# tool_version = " + std::string(kToolVersion) + "\n";
  manifest += "# seed = " + std::to_string(scenario.seed) + "\n";
  manifest += "# parameter_hash = " + hex64(parameter_hash(scenario)) + "\n";
  for (const auto &f : w.result.files) manifest += "# file = " + f + "\n";
  manifest += write_scenario(scenario);
  w.put("manifest.txt", manifest);
  return w.result;
}

}  // namespace uavdeploy
