#include "uavdeploy/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace uavdeploy {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable &CsvTable::row() {
  rows_.emplace_back();
  return *this;
}

CsvTable &CsvTable::add(double v) { return add(format_double(v)); }

CsvTable &CsvTable::add(std::int64_t v) { return add(std::to_string(v)); }

CsvTable &CsvTable::add(const std::string &v) {
  if (rows_.empty()) throw std::logic_error("CsvTable::add before row()");
  rows_.back().push_back(v);
  return *this;
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header_);
  for (const auto &r : rows_) {
    if (r.size() != header_.size()) throw std::logic_error("CsvTable: row width differs from header");
    line(r);
  }
  return out;
}

void write_file_atomic(const std::string &path, const std::string &content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, target);
}

std::uint64_t fnv1a64(const std::string &text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

// golden-angle hue walk, fixed saturation/value
std::array<unsigned char, 3> palette(int index) {
  const double hue = std::fmod(index * 137.50776405, 360.0) / 60.0;
  const double s = 0.55;
  const double v = 0.95;
  const double c = v * s;
  const double x = c * (1.0 - std::fabs(std::fmod(hue, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hue)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = v - c;
  auto q = [&](double t) { return static_cast<unsigned char>(std::lround(255.0 * (t + m))); };
  return {q(r), q(g), q(b)};
}

}  // namespace

std::string render_cells_ppm(const AssignmentGrid &grid, const Deployment &deployment) {
  const GridGeometry &g = grid.geometry;
  const std::string header = "P6\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
  std::string pixels(g.size() * 3, '\0');
  auto put = [&](int i, int j, std::array<unsigned char, 3> rgb) {
    // image row 0 is the top (largest y)
    const std::size_t k = (static_cast<std::size_t>(g.ny - 1 - j) * g.nx + i) * 3;
    pixels[k] = static_cast<char>(rgb[0]);
    pixels[k + 1] = static_cast<char>(rgb[1]);
    pixels[k + 2] = static_cast<char>(rgb[2]);
  };
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const int o = grid.owner[static_cast<std::size_t>(j) * g.nx + i];
      put(i, j, o == kNoOwner ? std::array<unsigned char, 3>{96, 96, 96} : palette(o));
    }
  }
  const int half = std::max(1, std::min(g.nx, g.ny) / 128);
  for (const Vec2 &p : deployment.ground) {
    const int ci = static_cast<int>(std::floor((p.x - g.origin.x) / g.dx));
    const int cj = static_cast<int>(std::floor((p.y - g.origin.y) / g.dy));
    for (int dj = -half; dj <= half; ++dj) {
      for (int di = -half; di <= half; ++di) {
        const int i = ci + di;
        const int j = cj + dj;
        if (i >= 0 && i < g.nx && j >= 0 && j < g.ny) put(i, j, {0, 0, 0});
      }
    }
  }
  return header + pixels;
}

std::string deployment_csv(const Deployment &deployment) {
  CsvTable t({"n", "x_m", "y_m", "h_m"});
  for (std::size_t n = 0; n < deployment.size(); ++n) {
    t.row().add(n).add(deployment.ground[n].x).add(deployment.ground[n].y).add(deployment.heights[n]);
  }
  return t.str();
}

std::string cells_csv(const AssignmentGrid &grid) {
  CsvTable t({"x_m", "y_m", "owner"});
  for (std::size_t k = 0; k < grid.owner.size(); ++k) {
    if (grid.owner[k] == kNoOwner) continue;
    const Vec2 p = grid.geometry.point(k);
    t.row().add(p.x).add(p.y).add(grid.owner[k]);
  }
  return t.str();
}

}  // namespace uavdeploy
