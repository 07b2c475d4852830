#ifndef UAVDEPLOY_LLOYD_HPP
#define UAVDEPLOY_LLOYD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uavdeploy/density.hpp"
#include "uavdeploy/power_model.hpp"
#include "uavdeploy/tessellation.hpp"

namespace uavdeploy {

enum class LloydVariant { A, B };

struct LloydConfig {
  LloydVariant variant = LloydVariant::B;
  double initial_step = 100.0;     ///< δ; see default_config()
  double stop_threshold = 1e-5;    ///< ε on the relative improvement
  int max_outer_iterations = 500;
  int max_halvings = 40;
  std::uint64_t rng_seed = 0;

  /// Defaults with δ = 0.1·diameter of the region's bounding box.
  static LloydConfig default_config(const Polygon &region, LloydVariant variant);
  void validate() const;
};

/// Everything a run needs besides the deployment: the discretized region
/// and user density.
struct Scene {
  RegionRaster raster;
  DensityGrid density;

  static Scene build(const Polygon &region, const DensityField &field, int resolution);
};

struct RunReport {
  std::vector<double> power_trace;       ///< P̄ before the first and after every iteration
  std::vector<double> min_height_trace;  ///< smallest height at the same instants
  Deployment final;
  int iterations = 0;
  bool converged = false;
  double height_std = 0.0;
};

struct StepResult {
  Deployment deployment;
  double power = 0.0;
  bool accepted = false;  ///< false: zero gradient or halvings exhausted
  int halvings = 0;
};

/// P̄ of `deployment` with freshly assigned cells.
double evaluate_power(const Deployment &deployment, const Scene &scene, const PowerParams &params);

/// One outer iteration: gradients on the current cells, then backtracking
/// from t = δ until P̄ strictly decreases.
StepResult lloyd_step(const Deployment &deployment, const LloydConfig &config, const Scene &scene,
                      const PowerParams &params);

/// Variant A starts from equal heights; unequal input heights are replaced
/// by their mean.
RunReport optimize(const Deployment &initial, const LloydConfig &config, const Scene &scene,
                   const PowerParams &params);

double height_std(const Deployment &deployment);

struct MultiStartReport {
  RunReport best;
  std::size_t best_index = 0;
  std::vector<double> final_powers;
  double mean_power = 0.0;
  double std_power = 0.0;
};

/// Uniform random deployment on bounding-box(region) × [0, init_box_height],
/// rejection-sampled to the region, heights clamped to h_min.
Deployment random_deployment(std::size_t n_uavs, const Polygon &region, double init_box_height, double h_min,
                             std::uint64_t seed);

/// Seed of restart `index` derived from the master seed.
std::uint64_t restart_seed(std::uint64_t seed, std::size_t index);

/// Runs `optimize` from `num_restarts` seeded random initializations and
/// keeps the lowest final power (first index on ties). Restarts are spread
/// over `threads` workers (0 = hardware concurrency); the result does not
/// depend on the thread count.
MultiStartReport multi_start(std::size_t n_uavs, std::size_t num_restarts, std::uint64_t seed,
                             const LloydConfig &config, const Scene &scene, const PowerParams &params,
                             double init_box_height, unsigned threads = 0);

}  // namespace uavdeploy

#endif
