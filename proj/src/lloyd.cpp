#include "uavdeploy/lloyd.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace uavdeploy {

namespace {

struct Evaluated {
  AssignmentGrid grid;
  double power = 0.0;
};

Evaluated evaluate(const Deployment &deployment, const Scene &scene, const PowerParams &params) {
  Evaluated e{assign_cells(deployment, scene.raster, params), 0.0};
  e.power = average_power(deployment, e.grid, scene.density, params).total;
  return e;
}

bool inside_region(const Deployment &deployment, const Polygon &region) {
  return std::all_of(deployment.ground.begin(), deployment.ground.end(),
                     [&](Vec2 p) { return region.contains(p); });
}

struct InternalStep {
  StepResult result;
  Evaluated evaluated;
};

InternalStep step_from(const Deployment &deployment, const Evaluated &current, const LloydConfig &config,
                       const Scene &scene, const PowerParams &params) {
  InternalStep out{{deployment, current.power, false, 0}, {}};
  const Gradients grad = gradients(deployment, current.grid, scene.density, params);

  const bool all_zero =
      std::all_of(grad.position.begin(), grad.position.end(), [](Vec2 g) { return g.x == 0.0 && g.y == 0.0; }) &&
      std::all_of(grad.height.begin(), grad.height.end(), [](double g) { return g == 0.0; });
  if (all_zero) return out;

  const double height_sum = std::accumulate(grad.height.begin(), grad.height.end(), 0.0);
  const std::size_t n_uav = deployment.size();
  double t = config.initial_step;
  Deployment proposal = deployment;
  for (int halving = 0; halving <= config.max_halvings; ++halving, t *= 0.5) {
    for (std::size_t n = 0; n < n_uav; ++n) {
      proposal.ground[n] = deployment.ground[n] - grad.position[n] * t;
      const double g = config.variant == LloydVariant::A ? height_sum : grad.height[n];
      proposal.heights[n] = std::max(params.h_min, deployment.heights[n] - t * g);
    }
    if (!inside_region(proposal, scene.raster.region)) continue;
    Evaluated candidate;
    if (average_power_below(proposal, scene.raster, scene.density, params, current.power, candidate.grid,
                            candidate.power)) {
      out.result = StepResult{proposal, candidate.power, true, halving};
      out.evaluated = std::move(candidate);
      return out;
    }
  }
  out.result.halvings = config.max_halvings;
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

LloydConfig LloydConfig::default_config(const Polygon &region, LloydVariant variant) {
  LloydConfig c;
  c.variant = variant;
  c.initial_step = 0.1 * region.bounds().diameter();
  return c;
}

void LloydConfig::validate() const {
  if (!(initial_step > 0.0)) throw std::invalid_argument("initial step must be > 0");
  if (!(stop_threshold > 0.0)) throw std::invalid_argument("stop threshold must be > 0");
  if (max_outer_iterations < 1) throw std::invalid_argument("max_outer_iterations must be >= 1");
  if (max_halvings < 1) throw std::invalid_argument("max_halvings must be >= 1");
}

Scene Scene::build(const Polygon &region, const DensityField &field, int resolution) {
  Scene scene;
  scene.raster = RegionRaster::build(region, resolution);
  scene.density = discretize(field, scene.raster);
  return scene;
}

double evaluate_power(const Deployment &deployment, const Scene &scene, const PowerParams &params) {
  return evaluate(deployment, scene, params).power;
}

StepResult lloyd_step(const Deployment &deployment, const LloydConfig &config, const Scene &scene,
                      const PowerParams &params) {
  config.validate();
  const Evaluated current = evaluate(deployment, scene, params);
  return step_from(deployment, current, config, scene, params).result;
}

double height_std(const Deployment &deployment) {
  const auto n = static_cast<double>(deployment.heights.size());
  if (n == 0.0) return 0.0;
  const double mean = std::accumulate(deployment.heights.begin(), deployment.heights.end(), 0.0) / n;
  double var = 0.0;
  for (double h : deployment.heights) var += (h - mean) * (h - mean);
  return std::sqrt(var / n);
}

RunReport optimize(const Deployment &initial, const LloydConfig &config, const Scene &scene,
                   const PowerParams &params) {
  config.validate();
  params.validate();
  Deployment current = initial;
  if (config.variant == LloydVariant::A && !current.heights.empty()) {
    const double mean =
        std::accumulate(current.heights.begin(), current.heights.end(), 0.0) / current.heights.size();
    std::fill(current.heights.begin(), current.heights.end(), std::max(mean, params.h_min));
  }
  current.validate(params.h_min);

  RunReport report;
  Evaluated state = evaluate(current, scene, params);
  report.power_trace.push_back(state.power);
  report.min_height_trace.push_back(*std::min_element(current.heights.begin(), current.heights.end()));

  while (report.iterations < config.max_outer_iterations) {
    ++report.iterations;
    InternalStep step = step_from(current, state, config, scene, params);
    if (!step.result.accepted) {
      report.converged = true;
      break;
    }
    const double old_power = state.power;
    current = std::move(step.result.deployment);
    state = std::move(step.evaluated);
    report.power_trace.push_back(state.power);
    report.min_height_trace.push_back(*std::min_element(current.heights.begin(), current.heights.end()));
    if ((old_power - state.power) / old_power <= config.stop_threshold) {
      report.converged = true;
      break;
    }
  }
  report.height_std = height_std(current);
  report.final = std::move(current);
  return report;
}

std::uint64_t restart_seed(std::uint64_t seed, std::size_t index) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
}

Deployment random_deployment(std::size_t n_uavs, const Polygon &region, double init_box_height, double h_min,
                             std::uint64_t seed) {
  if (n_uavs == 0) throw std::invalid_argument("random_deployment: need at least one UAV");
  std::mt19937_64 rng(seed);
  const BoundingBox box = region.bounds();
  std::uniform_real_distribution<double> ux(box.lo.x, box.hi.x);
  std::uniform_real_distribution<double> uy(box.lo.y, box.hi.y);
  std::uniform_real_distribution<double> uh(0.0, init_box_height);
  Deployment d;
  d.ground.reserve(n_uavs);
  d.heights.reserve(n_uavs);
  while (d.ground.size() < n_uavs) {
    const Vec2 p{ux(rng), uy(rng)};
    const double h = uh(rng);
    if (!region.contains(p)) continue;
    d.ground.push_back(p);
    d.heights.push_back(std::max(h, h_min));
  }
  return d;
}

MultiStartReport multi_start(std::size_t n_uavs, std::size_t num_restarts, std::uint64_t seed,
                             const LloydConfig &config, const Scene &scene, const PowerParams &params,
                             double init_box_height, unsigned threads) {
  if (num_restarts == 0) throw std::invalid_argument("multi_start: need at least one restart");
  std::vector<RunReport> runs(num_restarts);
  std::vector<std::exception_ptr> errors(num_restarts);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < num_restarts; i = next++) {
      try {
        LloydConfig c = config;
        c.rng_seed = restart_seed(seed, i);
        const Deployment init = random_deployment(n_uavs, scene.raster.region, init_box_height, params.h_min,
                                                  c.rng_seed);
        runs[i] = optimize(init, c, scene, params);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, num_restarts));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }

  MultiStartReport report;
  for (std::size_t i = 0; i < num_restarts; ++i) {
    const double p = runs[i].power_trace.back();
    report.final_powers.push_back(p);
    if (p < report.final_powers[report.best_index]) report.best_index = i;
  }
  const double n = static_cast<double>(num_restarts);
  report.mean_power = std::accumulate(report.final_powers.begin(), report.final_powers.end(), 0.0) / n;
  double var = 0.0;
  for (double p : report.final_powers) var += (p - report.mean_power) * (p - report.mean_power);
  report.std_power = std::sqrt(var / n);
  report.best = std::move(runs[report.best_index]);
  return report;
}

}  // namespace uavdeploy
