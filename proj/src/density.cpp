#include "uavdeploy/density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavdeploy {

namespace {

constexpr double kMassTolerance = 1e-6;

void check_inputs(const Deployment &deployment, const AssignmentGrid &grid, const DensityGrid &density) {
  if (grid.owner.size() != density.weight.size()) {
    throw std::invalid_argument("assignment grid and density grid differ in size");
  }
  if (grid.n_uavs != deployment.size()) {
    throw std::invalid_argument("assignment grid was built for a different number of UAVs");
  }
  const double mass = density.total_mass();
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw std::invalid_argument("density grid is not normalized (mass " + std::to_string(mass) + ")");
  }
}

// Single pass over the grid accumulating power, position and height sums per
// UAV. Rows are summed separately and then added in row order, which keeps
// the result independent of how rows might be scheduled.
struct CellSums {
  std::vector<double> power;
  std::vector<Vec2> position;
  std::vector<double> height;
};

class RowAccumulator {
 public:
  RowAccumulator(const Deployment &deployment, const DensityGrid &density, const PowerParams &params,
                 bool with_gradients)
      : deployment_(deployment),
        density_(density),
        params_(params),
        with_gradients_(with_gradients),
        gamma_(params.gamma()),
        pow_gm1_(gamma_ - 1.0),
        n_uav_(deployment.size()),
        sums_{std::vector<double>(n_uav_, 0.0), std::vector<Vec2>(n_uav_), std::vector<double>(n_uav_, 0.0)},
        row_power_(n_uav_),
        row_height_(n_uav_),
        row_position_(n_uav_),
        factor_(n_uav_) {
    const double scale = params.scale();
    for (std::size_t n = 0; n < n_uav_; ++n) factor_[n] = scale / std::pow(deployment.heights[n], params.kappa);
  }

  void add_row(int j, const AssignmentGrid &grid) {
    std::fill(row_power_.begin(), row_power_.end(), 0.0);
    if (with_gradients_) {
      std::fill(row_height_.begin(), row_height_.end(), 0.0);
      std::fill(row_position_.begin(), row_position_.end(), Vec2{});
    }
    const GridGeometry &g = grid.geometry;
    const double kappa = params_.kappa;
    const double y = g.origin.y + (j + 0.5) * g.dy;
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * g.nx + i;
      const int owner = grid.owner[k];
      if (owner == kNoOwner) continue;
      const double w = density_.weight[k];
      if (w == 0.0) continue;
      const auto n = static_cast<std::size_t>(owner);
      const double x = g.origin.x + (i + 0.5) * g.dx;
      const Vec2 diff{deployment_.ground[n].x - x, deployment_.ground[n].y - y};
      const double h = deployment_.heights[n];
      const double s = norm2(diff) + h * h;
      const double s_gm1 = pow_gm1_(s);
      const double s_g = s * s_gm1;
      row_power_[n] += w * s_g;
      if (with_gradients_) {
        row_position_[n] += diff * (w * s_gm1);
        row_height_[n] += w * (2.0 * gamma_ * h * h * s_gm1 - kappa * s_g);
      }
    }
    for (std::size_t n = 0; n < n_uav_; ++n) {
      sums_.power[n] += row_power_[n];
      if (with_gradients_) {
        sums_.position[n] += row_position_[n];
        sums_.height[n] += row_height_[n];
      }
    }
  }

  /// Lower bound on the final total: every later row adds a non-negative
  /// amount and the scaling below is the same.
  double partial_total() const {
    double t = 0.0;
    for (std::size_t n = 0; n < n_uav_; ++n) t += sums_.power[n] * factor_[n];
    return t;
  }

  CellSums finish() {
    for (std::size_t n = 0; n < n_uav_; ++n) {
      const double h = deployment_.heights[n];
      sums_.power[n] *= factor_[n];
      sums_.position[n] *= factor_[n] * 2.0 * gamma_;
      sums_.height[n] *= factor_[n] / h;
    }
    return std::move(sums_);
  }

 private:
  const Deployment &deployment_;
  const DensityGrid &density_;
  const PowerParams &params_;
  bool with_gradients_;
  double gamma_;
  ExponentPow pow_gm1_;
  std::size_t n_uav_;
  CellSums sums_;
  std::vector<double> row_power_, row_height_;
  std::vector<Vec2> row_position_;
  std::vector<double> factor_;
};

CellSums accumulate(const Deployment &deployment, const AssignmentGrid &grid, const DensityGrid &density,
                    const PowerParams &params, bool with_gradients) {
  RowAccumulator acc(deployment, density, params, with_gradients);
  for (int j = 0; j < grid.geometry.ny; ++j) acc.add_row(j, grid);
  return acc.finish();
}

double total_of(const std::vector<double> &per_uav) {
  double t = 0.0;
  for (double p : per_uav) t += p;
  return t;
}

}  // namespace

DensityField DensityField::uniform() { return DensityField{}; }

DensityField DensityField::gaussian_mixture(std::vector<GaussianComponent> components, double sigma_scale) {
  if (components.empty()) throw std::invalid_argument("gaussian mixture needs at least one component");
  if (!(sigma_scale > 0.0)) throw std::invalid_argument("sigma scale must be positive");
  for (const auto &c : components) {
    if (!(c.weight >= 0.0)) throw std::invalid_argument("mixture weights must be nonnegative");
    if (!(c.sigma > 0.0)) throw std::invalid_argument("mixture sigma must be positive");
  }
  DensityField field;
  field.kind_ = Kind::gaussian_mixture;
  field.components_ = std::move(components);
  field.sigma_scale_ = sigma_scale;
  return field;
}

double DensityField::evaluate(Vec2 w) const {
  if (kind_ == Kind::uniform) return 1.0;
  double value = 0.0;
  for (const auto &c : components_) {
    const double s = c.sigma * sigma_scale_;
    value += c.weight * std::exp(-norm2(w - c.mean) / (2.0 * s * s)) / (2.0 * std::numbers::pi * s * s);
  }
  return value;
}

double DensityGrid::total_mass() const {
  double mass = 0.0;
  for (double w : weight) mass += w;
  return mass;
}

DensityGrid discretize(const DensityField &field, const RegionRaster &raster) {
  DensityGrid grid;
  grid.geometry = raster.geometry;
  grid.weight.assign(raster.geometry.size(), 0.0);
  double mass = 0.0;
  for (std::size_t k = 0; k < grid.weight.size(); ++k) {
    if (!raster.inside[k]) continue;
    const double v = field.evaluate(raster.geometry.point(k)) * raster.geometry.cell_area();
    grid.weight[k] = v;
    mass += v;
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("density has no mass inside the region at this grid resolution");
  }
  for (double &w : grid.weight) w /= mass;
  return grid;
}

PowerReport average_power(const Deployment &deployment, const AssignmentGrid &grid, const DensityGrid &density,
                          const PowerParams &params) {
  check_inputs(deployment, grid, density);
  CellSums sums = accumulate(deployment, grid, density, params, false);
  PowerReport report;
  report.per_cell = std::move(sums.power);
  report.total = total_of(report.per_cell);
  report.coverage_fraction = 1.0;
  return report;
}

bool average_power_below(const Deployment &deployment, const RegionRaster &raster, const DensityGrid &density,
                         const PowerParams &params, double bound, AssignmentGrid &grid, double &power) {
  const CellAssigner assigner(deployment, raster, params);
  grid = assigner.empty_grid();
  check_inputs(deployment, grid, density);
  RowAccumulator acc(deployment, density, params, false);
  constexpr int kCheckEvery = 4;
  for (int j = 0; j < grid.geometry.ny; ++j) {
    assigner.assign_row(j, grid);
    acc.add_row(j, grid);
    if (j % kCheckEvery == kCheckEvery - 1 && acc.partial_total() >= bound) return false;
  }
  power = total_of(acc.finish().power);
  return power < bound;
}

Gradients gradients(const Deployment &deployment, const AssignmentGrid &grid, const DensityGrid &density,
                    const PowerParams &params) {
  check_inputs(deployment, grid, density);
  CellSums sums = accumulate(deployment, grid, density, params, true);
  return Gradients{std::move(sums.position), std::move(sums.height)};
}

Vec2 position_gradient(std::size_t n, const Deployment &deployment, const AssignmentGrid &grid,
                       const DensityGrid &density, const PowerParams &params) {
  return gradients(deployment, grid, density, params).position.at(n);
}

double height_gradient(std::size_t n, const Deployment &deployment, const AssignmentGrid &grid,
                       const DensityGrid &density, const PowerParams &params) {
  return gradients(deployment, grid, density, params).height.at(n);
}

}  // namespace uavdeploy
