#ifndef UAVDEPLOY_BASELINES_HPP
#define UAVDEPLOY_BASELINES_HPP

#include <istream>
#include <string>
#include <vector>

#include "uavdeploy/density.hpp"
#include "uavdeploy/lloyd.hpp"
#include "uavdeploy/tessellation.hpp"

namespace uavdeploy {

/// Equal-radius disk packing used for the circle-packing baseline.
struct Packing {
  std::vector<Vec2> centers;
  double radius = 0.0;
  std::string source;

  /// Disks pairwise non-overlapping and inside `region` (within `tol`).
  bool valid_in(const Polygon &region, double tol = 1e-9) const;
};

/// Packing file: first line `radius,<r>`, then one `x,y` row per center.
/// Blank lines and `#` comments are ignored. Throws std::runtime_error with
/// the offending line number.
Packing parse_packing(std::istream &in, const std::string &source = "<stream>");
Packing read_packing(const std::string &path);
std::string format_packing(const Packing &packing);

/// Fallback when no packing file is given: the densest hexagonal lattice
/// of at least `n` disks fitting the region's bounding box, trimmed to `n`.
Packing hex_lattice_packing(const BoundingBox &box, std::size_t n);

/// Omni-antenna Lloyd (Lloyd-B machinery with κ = 0 in the objective);
/// final heights clamped to h_min.
RunReport kss_optimize(const Deployment &initial, const LloydConfig &config, const Scene &scene,
                       const PowerParams &params_kappa_zero);

/// Ground positions at the packing centers, common height r / tan(θ/2).
Deployment msbd_deploy(const Packing &packing, double theta_hpbw_deg);

/// Share of in-region grid points inside at least one disk.
double disk_coverage_fraction(const Packing &packing, const RegionRaster &raster);

/// Average power of `deployment` under the evaluation parameters, with
/// freshly assigned cells. In physical mode this divides by β0·D0(κ_eval).
PowerReport cross_evaluate(const Deployment &deployment, const Scene &scene, const PowerParams &params_eval);

}  // namespace uavdeploy

#endif
