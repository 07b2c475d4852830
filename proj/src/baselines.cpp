#include "uavdeploy/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace uavdeploy {

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string &text, const std::string &source, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || trim(text.substr(used)).size() != 0 || !std::isfinite(v)) {
    throw std::runtime_error(source + ":" + std::to_string(line) + ": invalid number '" + text + "'");
  }
  return v;
}

std::size_t lattice_count(double w, double h, double r) {
  if (2.0 * r > w || 2.0 * r > h) return 0;
  const double row_step = std::sqrt(3.0) * r;
  const auto rows = static_cast<std::size_t>(std::floor((h - 2.0 * r) / row_step)) + 1;
  const auto even = static_cast<std::size_t>(std::floor((w - 2.0 * r) / (2.0 * r))) + 1;
  const std::size_t odd = w >= 3.0 * r ? static_cast<std::size_t>(std::floor((w - 3.0 * r) / (2.0 * r))) + 1 : 0;
  return (rows + 1) / 2 * even + rows / 2 * odd;
}

}  // namespace

bool Packing::valid_in(const Polygon &region, double tol) const {
  if (!(radius > 0.0)) return false;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      if (norm(centers[i] - centers[j]) < 2.0 * radius - tol) return false;
    }
    if (!region.contains(centers[i])) return false;
    // disk inside the polygon: center far enough from every edge
    const auto &v = region.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Vec2 a = v[k];
      const Vec2 b = v[(k + 1) % v.size()];
      const Vec2 ab = b - a;
      const double t = std::clamp(dot(centers[i] - a, ab) / norm2(ab), 0.0, 1.0);
      if (norm(centers[i] - (a + ab * t)) < radius - tol) return false;
    }
  }
  return true;
}

Packing parse_packing(std::istream &in, const std::string &source) {
  Packing packing;
  packing.source = source;
  bool have_radius = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error(source + ":" + std::to_string(line_no) + ": expected two comma-separated fields");
    }
    const std::string first = trim(line.substr(0, comma));
    const std::string second = trim(line.substr(comma + 1));
    if (!have_radius) {
      if (first != "radius") {
        throw std::runtime_error(source + ":" + std::to_string(line_no) + ": first line must be 'radius,<r>'");
      }
      packing.radius = parse_number(second, source, line_no);
      if (!(packing.radius > 0.0)) {
        throw std::runtime_error(source + ":" + std::to_string(line_no) + ": radius must be positive");
      }
      have_radius = true;
      continue;
    }
    packing.centers.push_back({parse_number(first, source, line_no), parse_number(second, source, line_no)});
  }
  if (!have_radius) throw std::runtime_error(source + ": missing 'radius,<r>' header");
  return packing;
}

Packing read_packing(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open packing file " + path);
  return parse_packing(in, path);
}

std::string format_packing(const Packing &packing) {
  std::ostringstream out;
  out.precision(17);
  out << "radius," << packing.radius << '\n';
  for (const Vec2 &c : packing.centers) out << c.x << ',' << c.y << '\n';
  return out.str();
}

Packing hex_lattice_packing(const BoundingBox &box, std::size_t n) {
  if (n == 0) throw std::invalid_argument("hex_lattice_packing: need at least one disk");
  const double w = box.width();
  const double h = box.height();
  double lo = 0.0;
  double hi = 0.5 * std::min(w, h);
  if (lattice_count(w, h, hi) >= n) {
    lo = hi;
  } else {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (lattice_count(w, h, mid) >= n ? lo : hi) = mid;
    }
  }
  const double r = lo;
  Packing packing;
  packing.radius = r;
  packing.source = "hex-lattice";
  const double row_step = std::sqrt(3.0) * r;
  for (int row = 0; packing.centers.size() < n; ++row) {
    const double y = box.lo.y + r + row * row_step;
    if (y > box.hi.y - r + 1e-12 * h) break;
    for (double x = box.lo.x + r + (row % 2 ? r : 0.0); x <= box.hi.x - r + 1e-12 * w && packing.centers.size() < n;
         x += 2.0 * r) {
      packing.centers.push_back({x, y});
    }
  }
  return packing;
}

RunReport kss_optimize(const Deployment &initial, const LloydConfig &config, const Scene &scene,
                       const PowerParams &params_kappa_zero) {
  PowerParams omni = params_kappa_zero;
  omni.kappa = 0.0;
  LloydConfig c = config;
  c.variant = LloydVariant::B;
  RunReport report = optimize(initial, c, scene, omni);
  for (double &h : report.final.heights) h = std::max(h, omni.h_min);
  report.height_std = height_std(report.final);
  return report;
}

Deployment msbd_deploy(const Packing &packing, double theta_hpbw_deg) {
  if (!(theta_hpbw_deg > 0.0) || !(theta_hpbw_deg < 180.0)) {
    throw std::domain_error("msbd_deploy: beamwidth must lie in (0, 180) degrees");
  }
  if (!(packing.radius > 0.0)) throw std::invalid_argument("msbd_deploy: packing radius must be positive");
  const double half = 0.5 * theta_hpbw_deg * std::numbers::pi / 180.0;
  const double h = packing.radius / std::tan(half);
  Deployment d;
  d.ground = packing.centers;
  d.heights.assign(packing.centers.size(), h);
  return d;
}

double disk_coverage_fraction(const Packing &packing, const RegionRaster &raster) {
  const double r2 = packing.radius * packing.radius;
  std::size_t covered = 0;
  for (std::size_t k = 0; k < raster.inside.size(); ++k) {
    if (!raster.inside[k]) continue;
    const Vec2 p = raster.geometry.point(k);
    for (const Vec2 &c : packing.centers) {
      if (norm2(p - c) <= r2) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered) / static_cast<double>(raster.inside_count);
}

PowerReport cross_evaluate(const Deployment &deployment, const Scene &scene, const PowerParams &params_eval) {
  const AssignmentGrid grid = assign_cells(deployment, scene.raster, params_eval);
  return average_power(deployment, grid, scene.density, params_eval);
}

}  // namespace uavdeploy
