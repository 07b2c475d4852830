#include "uavdeploy/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavdeploy {

void Deployment::validate(double h_min) const {
  if (ground.empty()) throw std::invalid_argument("deployment has no UAVs");
  if (ground.size() != heights.size()) {
    throw std::invalid_argument("deployment ground/height size mismatch");
  }
  for (double h : heights) {
    if (!(h >= h_min) || !std::isfinite(h)) {
      throw std::invalid_argument("deployment height below h_min");
    }
  }
}

bool DominanceRegion::contains(Vec2 w, double tol) const {
  switch (kind) {
    case Kind::half_plane:
      return dot(normal, w) <= offset + tol;
    case Kind::disk:
      return norm(w - center) <= radius + tol;
    case Kind::disk_complement:
      return norm(w - center) >= radius - tol;
  }
  return false;
}

double height_ratio(double h_n, double h_m, const PowerParams &params) {
  if (!(h_n > 0.0) || !(h_m > 0.0)) throw std::domain_error("height_ratio: heights must be > 0");
  const double gamma = params.gamma();
  if (!(gamma > 0.0)) throw std::domain_error("height_ratio: gamma must be > 0");
  return std::pow(h_n / h_m, params.kappa / gamma);
}

DominanceRegion dominance_region(std::size_t n, std::size_t m, const Deployment &deployment,
                                 const PowerParams &params) {
  if (n == m) throw std::invalid_argument("dominance_region: n and m must differ");
  if (n >= deployment.size() || m >= deployment.size()) {
    throw std::out_of_range("dominance_region: index out of range");
  }
  if (!(params.kappa >= 1.0) || !(params.gamma() >= 0.5 * (1.0 + params.kappa))) {
    throw std::domain_error("dominance_region: requires kappa >= 1 and gamma >= (1+kappa)/2");
  }
  const Vec2 pn = deployment.ground[n];
  const Vec2 pm = deployment.ground[m];
  const double hn = deployment.heights[n];
  const double hm = deployment.heights[m];

  DominanceRegion region;
  if (std::abs(hn - hm) <= kEqualHeightTolerance * std::max(hn, hm)) {
    region.kind = DominanceRegion::Kind::half_plane;
    region.normal = pm - pn;
    region.offset = 0.5 * (norm2(pm) - norm2(pn));
    return region;
  }

  const double ratio = height_ratio(hn, hm, params);
  const double one_minus = 1.0 - ratio;
  const double exponent = 1.0 - 2.0 * params.gamma() / params.kappa;
  region.center = (pn - ratio * pm) * (1.0 / one_minus);
  const double r2 = ratio * norm2(pn - pm) / (one_minus * one_minus) +
                    hn * hn * (std::pow(ratio, exponent) - 1.0) / one_minus;
  region.radius = std::sqrt(r2);
  region.kind = hn < hm ? DominanceRegion::Kind::disk : DominanceRegion::Kind::disk_complement;
  return region;
}

GridGeometry GridGeometry::covering(const BoundingBox &box, int resolution) {
  if (resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  if (!(box.width() > 0.0) || !(box.height() > 0.0)) {
    throw std::invalid_argument("grid bounding box is empty");
  }
  GridGeometry g;
  g.origin = box.lo;
  g.nx = resolution;
  g.ny = resolution;
  g.dx = box.width() / resolution;
  g.dy = box.height() / resolution;
  return g;
}

RegionRaster RegionRaster::build(const Polygon &region, int resolution) {
  RegionRaster raster;
  raster.region = region;
  raster.geometry = GridGeometry::covering(region.bounds(), resolution);
  raster.inside.resize(raster.geometry.size());
  for (std::size_t k = 0; k < raster.inside.size(); ++k) {
    const bool in = region.contains(raster.geometry.point(k));
    raster.inside[k] = in ? 1 : 0;
    raster.inside_count += in ? 1 : 0;
  }
  if (raster.inside_count == 0) throw std::invalid_argument("region contains no grid points");
  return raster;
}

CellAssigner::CellAssigner(const Deployment &deployment, const RegionRaster &raster, const PowerParams &params)
    : raster_(raster) {
  deployment.validate(params.h_min);
  if (raster.geometry.size() == 0) throw std::invalid_argument("assign_cells: empty grid");

  // min_n (r² + h_n²)^γ / h_n^κ  ==  min_n a_n·r² + b_n  with a_n = h_n^{-κ/γ}, b_n = h_n^{2-κ/γ},
  // since s ↦ s^{1/γ} is increasing.
  const std::size_t n_uav = deployment.size();
  const double e = params.kappa / params.gamma();
  a_.resize(n_uav);
  b_.resize(n_uav);
  px_.resize(n_uav);
  py_.resize(n_uav);
  for (std::size_t n = 0; n < n_uav; ++n) {
    const double h = deployment.heights[n];
    a_[n] = std::pow(h, -e);
    b_[n] = h * h * a_[n];
    px_[n] = deployment.ground[n].x;
    py_[n] = deployment.ground[n].y;
  }
}

AssignmentGrid CellAssigner::empty_grid() const {
  AssignmentGrid grid;
  grid.geometry = raster_.geometry;
  grid.n_uavs = a_.size();
  grid.owner.assign(raster_.geometry.size(), kNoOwner);
  return grid;
}

void CellAssigner::assign_row(int j, AssignmentGrid &grid) const {
  const GridGeometry &g = raster_.geometry;
  const std::size_t n_uav = a_.size();
  const double y = g.origin.y + (j + 0.5) * g.dy;

  // a_n·(y − py_n)² + b_n bounds UAV n from below on this row; scanning in
  // increasing bound order lets the search stop early.
  struct Candidate {
    double bound;
    int n;
  };
  std::vector<Candidate> order(n_uav);
  for (std::size_t n = 0; n < n_uav; ++n) {
    const double ddy = y - py_[n];
    order[n] = {a_[n] * (ddy * ddy) + b_[n], static_cast<int>(n)};
  }
  std::sort(order.begin(), order.end(), [](const Candidate &l, const Candidate &r) {
    return l.bound < r.bound || (l.bound == r.bound && l.n < r.n);
  });

  // Runs of kRun pixels share a short candidate list: UAV n is dropped when
  // its smallest value over the run exceeds the smallest per-UAV maximum.
  // Every bound uses the same expression as the per-pixel value, so rounding
  // is monotone and the result equals the full argmin.
  constexpr int kRun = 16;
  auto center_x = [&](int i) { return g.origin.x + (i + 0.5) * g.dx; };
  std::vector<int> keep;
  keep.reserve(n_uav);
  for (int i0 = 0; i0 < g.nx; i0 += kRun) {
    const int i1 = std::min(i0 + kRun, g.nx) - 1;
    const std::size_t row = static_cast<std::size_t>(j) * g.nx;
    bool any = false;
    for (int i = i0; i <= i1 && !any; ++i) any = raster_.inside[row + i];
    if (!any) continue;

    const double x0 = center_x(i0), x1 = center_x(i1);
    auto span = [&](std::size_t n, double &lo, double &hi) {
      const double ddy = y - py_[n];
      const double d0 = std::abs(x0 - px_[n]), d1 = std::abs(x1 - px_[n]);
      const double near = px_[n] >= x0 && px_[n] <= x1 ? 0.0 : std::min(d0, d1);
      const double far = std::max(d0, d1);
      lo = a_[n] * (near * near + ddy * ddy) + b_[n];
      hi = a_[n] * (far * far + ddy * ddy) + b_[n];
    };
    double cap = std::numeric_limits<double>::infinity();
    std::size_t visited = 0;
    for (; visited < order.size() && order[visited].bound <= cap; ++visited) {
      double lo, hi;
      span(static_cast<std::size_t>(order[visited].n), lo, hi);
      cap = std::min(cap, hi);
    }
    keep.clear();
    for (std::size_t v = 0; v < visited; ++v) {
      double lo, hi;
      span(static_cast<std::size_t>(order[v].n), lo, hi);
      if (lo <= cap) keep.push_back(order[v].n);
    }
    std::sort(keep.begin(), keep.end());

    for (int i = i0; i <= i1; ++i) {
      const std::size_t k = row + i;
      if (!raster_.inside[k]) continue;
      const double x = center_x(i);
      double best = std::numeric_limits<double>::infinity();
      int best_n = 0;
      for (int n : keep) {
        const double ddx = x - px_[n];
        const double ddy = y - py_[n];
        const double v = a_[n] * (ddx * ddx + ddy * ddy) + b_[n];
        if (v < best) {
          best = v;
          best_n = n;
        }
      }
      grid.owner[k] = best_n;
    }
  }
}

AssignmentGrid assign_cells(const Deployment &deployment, const RegionRaster &raster,
                            const PowerParams &params) {
  const CellAssigner assigner(deployment, raster, params);
  AssignmentGrid grid = assigner.empty_grid();
  for (int j = 0; j < raster.geometry.ny; ++j) assigner.assign_row(j, grid);
  return grid;
}

std::vector<double> cell_area_fractions(const AssignmentGrid &grid) {
  std::vector<double> counts(grid.n_uavs, 0.0);
  std::size_t total = 0;
  for (int o : grid.owner) {
    if (o == kNoOwner) continue;
    counts[static_cast<std::size_t>(o)] += 1.0;
    ++total;
  }
  if (total > 0) {
    for (double &c : counts) c /= static_cast<double>(total);
  }
  return counts;
}

}  // namespace uavdeploy
