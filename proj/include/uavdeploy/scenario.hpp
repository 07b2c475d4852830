#ifndef UAVDEPLOY_SCENARIO_HPP
#define UAVDEPLOY_SCENARIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavdeploy/density.hpp"
#include "uavdeploy/geometry.hpp"
#include "uavdeploy/lloyd.hpp"

namespace uavdeploy {

enum class ExperimentKind { lloyd_a, lloyd_b, kss, msbd, analytic, brute_force, sweep };

std::string to_string(ExperimentKind kind);

/// Validation failure tied to one scenario key.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string &message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string &field() const { return field_; }

 private:
  std::string field_;
};

/// One experiment, read from a flat `key = value` file. Lengths carry an
/// `_m` suffix in their key; lists are comma separated; `#` starts a comment.
struct Scenario {
  ExperimentKind experiment = ExperimentKind::lloyd_b;

  Polygon region;  // empty for analytic / brute-force
  DensityField::Kind density = DensityField::Kind::uniform;
  std::vector<GaussianComponent> mixture;
  double sigma_scale = 1.0;

  double alpha = 2.0;
  double kappa = 1.0;
  double h_min_m = 1.0;
  double beta0 = 1.0;
  bool normalized = true;

  std::vector<std::size_t> n_uavs;
  std::size_t restarts = 1;
  std::uint64_t seed = 1;
  int grid = 512;
  std::string output_dir = "out";

  double init_height_m = 100.0;
  double initial_step_m = 0.0;  // 0: 0.1 · region diameter
  double stop_threshold = 1e-5;
  int max_outer_iterations = 500;
  int max_halvings = 40;
  LloydVariant sweep_variant = LloydVariant::B;

  double theta_hpbw_deg = 120.0;
  std::string packing_file;  // empty: hexagonal lattice fallback

  std::vector<double> gamma_list{1.0, 2.0, 3.0};
  std::vector<double> kappa_list;  // empty: every integer κ in [1, 2γ−1]
  std::vector<double> alpha_list{1.0, 2.0, 3.0};
  std::vector<double> hex_area_list_m2{1.0};
  int samples = 5000;

  PowerParams power_params() const;
  DensityField density_field() const;
  LloydConfig lloyd_config(LloydVariant variant) const;

  friend bool operator==(const Scenario &, const Scenario &) = default;
};

Scenario parse_scenario_text(const std::string &text);
Scenario parse_scenario(const std::string &path);

/// Canonical text; parse_scenario_text(write_scenario(s)) == s.
std::string write_scenario(const Scenario &scenario);

/// Throws ScenarioError naming the first offending key.
void validate(const Scenario &scenario);

}  // namespace uavdeploy

#endif
