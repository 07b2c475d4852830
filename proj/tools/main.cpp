#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <stdexcept>

#include "uavdeploy/experiment.hpp"
#include "uavdeploy/scenario.hpp"

using namespace uavdeploy;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

struct Flags {
  std::string scenario;
  std::string out;
  std::uint64_t seed = 0;
  int grid = 0;
  unsigned threads = 0;
  bool quiet = false;
};

std::set<ExperimentKind> allowed_for(const std::string &command) {
  if (command == "optimize") return {ExperimentKind::lloyd_a, ExperimentKind::lloyd_b};
  if (command == "baseline") return {ExperimentKind::kss, ExperimentKind::msbd};
  if (command == "analytic") return {ExperimentKind::analytic};
  if (command == "brute-force") return {ExperimentKind::brute_force};
  return {ExperimentKind::sweep};
}

int run(const std::string &command, const Flags &flags, const CLI::App &sub) {
  Scenario s;
  try {
    s = parse_scenario(flags.scenario);
    if (sub.count("--out")) s.output_dir = flags.out;
    if (sub.count("--seed")) s.seed = flags.seed;
    if (sub.count("--grid")) s.grid = flags.grid;
    validate(s);
    if (!allowed_for(command).count(s.experiment)) {
      throw ScenarioError("experiment", "'" + to_string(s.experiment) + "' cannot run under '" + command + "'");
    }
  } catch (const ScenarioError &e) {
    std::cerr << "uavdeploy: invalid scenario: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    ExperimentOptions options;
    options.threads = flags.threads;
    if (!flags.quiet) options.log = &std::cerr;
    const ExperimentResult result = run_experiment(s, options);
    for (const auto &f : result.files) std::cout << s.output_dir << '/' << f << '\n';
  } catch (const ScenarioError &e) {
    std::cerr << "uavdeploy: invalid scenario: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument &e) {
    std::cerr << "uavdeploy: invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception &e) {
    std::cerr << "uavdeploy: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Power-aware 3-D deployment of UAV base stations with directional antennas"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Flags flags;
  const char *commands[][2] = {
      {"optimize", "Lloyd-A / Lloyd-B optimization with seeded restarts"},
      {"analytic", "Common-height closed forms over hexagonal cells"},
      {"brute-force", "Single-UAV height search over one hexagonal cell"},
      {"baseline", "KSS (omni Lloyd) or MSBD (disk packing) baselines"},
      {"sweep", "Lloyd over a list of fleet sizes"},
  };
  for (const auto &c : commands) {
    CLI::App *sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("--scenario", flags.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out, "Output directory (overrides output_dir)");
    sub->add_option("--seed", flags.seed, "Master seed (overrides seed)");
    sub->add_option("--grid", flags.grid, "Grid resolution per axis (overrides grid)");
    sub->add_option("--threads", flags.threads, "Restart workers, 0 = all cores");
    sub->add_flag("--quiet", flags.quiet, "No progress output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  for (CLI::App *sub : app.get_subcommands()) return run(sub->get_name(), flags, *sub);
  return kExitValidation;
}
