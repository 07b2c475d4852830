#ifndef UAVDEPLOY_TESSELLATION_HPP
#define UAVDEPLOY_TESSELLATION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uavdeploy/geometry.hpp"
#include "uavdeploy/power_model.hpp"

namespace uavdeploy {

/// Ground positions and flight heights of N UAVs.
struct Deployment {
  std::vector<Vec2> ground;
  std::vector<double> heights;

  std::size_t size() const { return ground.size(); }
  /// Throws std::invalid_argument on size mismatch, N = 0 or a height below `h_min`.
  void validate(double h_min) const;

  friend bool operator==(const Deployment &, const Deployment &) = default;
};

/// Region of ground points where UAV n needs no more power than UAV m.
struct DominanceRegion {
  enum class Kind { half_plane, disk, disk_complement };

  Kind kind = Kind::half_plane;
  Vec2 center;      // disk kinds
  double radius = 0.0;
  Vec2 normal;      // half-plane: {w : dot(normal, w) <= offset}
  double offset = 0.0;

  /// Membership with an absolute slack `tol` on the boundary test.
  bool contains(Vec2 w, double tol = 0.0) const;
};

/// (h_n / h_m)^{κ/γ}
double height_ratio(double h_n, double h_m, const PowerParams &params);

/// Heights within this relative distance are treated as equal.
inline constexpr double kEqualHeightTolerance = 1e-12;

DominanceRegion dominance_region(std::size_t n, std::size_t m, const Deployment &deployment,
                                 const PowerParams &params);

/// Regular grid of cell midpoints covering a bounding box.
struct GridGeometry {
  Vec2 origin;      // lower-left corner of the first cell
  double dx = 1.0;
  double dy = 1.0;
  int nx = 0;
  int ny = 0;

  static GridGeometry covering(const BoundingBox &box, int resolution);

  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  double cell_area() const { return dx * dy; }
  Vec2 point(int i, int j) const { return {origin.x + (i + 0.5) * dx, origin.y + (j + 0.5) * dy}; }
  Vec2 point(std::size_t index) const {
    return point(static_cast<int>(index % static_cast<std::size_t>(nx)),
                 static_cast<int>(index / static_cast<std::size_t>(nx)));
  }
};

/// Grid plus in-region mask; built once per target region.
struct RegionRaster {
  Polygon region;
  GridGeometry geometry;
  std::vector<std::uint8_t> inside;
  std::size_t inside_count = 0;

  static RegionRaster build(const Polygon &region, int resolution);
};

inline constexpr int kNoOwner = -1;

/// Owner raster of the generalized (Möbius) Voronoi partition.
struct AssignmentGrid {
  GridGeometry geometry;
  std::vector<int> owner;   // kNoOwner outside the region
  std::size_t n_uavs = 0;
};

/// Row-wise form of assign_cells, for callers that fuse assignment with
/// other per-row work.
class CellAssigner {
 public:
  CellAssigner(const Deployment &deployment, const RegionRaster &raster, const PowerParams &params);
  /// Fills owner[j·nx .. j·nx + nx) of `grid` for row j.
  void assign_row(int j, AssignmentGrid &grid) const;
  AssignmentGrid empty_grid() const;

 private:
  const RegionRaster &raster_;
  std::vector<double> a_, b_, px_, py_;
};

/// Per-point argmin of the transmit power; ties go to the smallest index.
AssignmentGrid assign_cells(const Deployment &deployment, const RegionRaster &raster,
                            const PowerParams &params);

/// Share of in-region grid points owned by each UAV.
std::vector<double> cell_area_fractions(const AssignmentGrid &grid);

}  // namespace uavdeploy

#endif
