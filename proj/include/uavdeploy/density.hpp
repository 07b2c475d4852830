#ifndef UAVDEPLOY_DENSITY_HPP
#define UAVDEPLOY_DENSITY_HPP

#include <cstddef>
#include <vector>

#include "uavdeploy/geometry.hpp"
#include "uavdeploy/power_model.hpp"
#include "uavdeploy/tessellation.hpp"

namespace uavdeploy {

struct GaussianComponent {
  double weight = 1.0;
  Vec2 mean;
  double sigma = 1.0;  // [m] before the field's sigma_scale is applied

  friend bool operator==(const GaussianComponent &, const GaussianComponent &) = default;
};

/// User density over the target region (unnormalized; see DensityGrid).
class DensityField {
 public:
  enum class Kind { uniform, gaussian_mixture };

  static DensityField uniform();
  /// Each component contributes weight·exp(−‖ω − c‖²/(2 s²)) / (2π s²) with
  /// s = sigma·sigma_scale.
  static DensityField gaussian_mixture(std::vector<GaussianComponent> components, double sigma_scale = 1.0);

  Kind kind() const { return kind_; }
  const std::vector<GaussianComponent> &components() const { return components_; }
  double sigma_scale() const { return sigma_scale_; }

  double evaluate(Vec2 w) const;

 private:
  Kind kind_ = Kind::uniform;
  std::vector<GaussianComponent> components_;
  double sigma_scale_ = 1.0;
};

/// Midpoint-rule quadrature weights λ(ω_k)·ΔA on a region raster, rescaled
/// so that they sum to one.
struct DensityGrid {
  GridGeometry geometry;
  std::vector<double> weight;  // zero outside the region

  double total_mass() const;
  /// Density value λ at grid point k [1/m²].
  double density_at(std::size_t k) const { return weight[k] / geometry.cell_area(); }
};

DensityGrid discretize(const DensityField &field, const RegionRaster &raster);

struct PowerReport {
  double total = 0.0;
  std::vector<double> per_cell;
  double coverage_fraction = 1.0;
};

/// d P̄ / d(parameter) for every UAV, evaluated on a frozen owner raster.
struct Gradients {
  std::vector<Vec2> position;
  std::vector<double> height;
};

/// Average power ∫ min_n P(ω, p_n, h_n) λ(ω) dω using the owners in `grid`.
PowerReport average_power(const Deployment &deployment, const AssignmentGrid &grid,
                          const DensityGrid &density, const PowerParams &params);

/// Fused assign_cells + average_power that stops early once the partial sum
/// reaches `bound`. Returns true (with `grid` and `power` filled, bit-identical
/// to the two-step computation) iff the average power is below `bound`.
bool average_power_below(const Deployment &deployment, const RegionRaster &raster, const DensityGrid &density,
                         const PowerParams &params, double bound, AssignmentGrid &grid, double &power);

Gradients gradients(const Deployment &deployment, const AssignmentGrid &grid, const DensityGrid &density,
                    const PowerParams &params);

Vec2 position_gradient(std::size_t n, const Deployment &deployment, const AssignmentGrid &grid,
                       const DensityGrid &density, const PowerParams &params);

double height_gradient(std::size_t n, const Deployment &deployment, const AssignmentGrid &grid,
                       const DensityGrid &density, const PowerParams &params);

}  // namespace uavdeploy

#endif
