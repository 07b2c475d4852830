#include "uavdeploy/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace uavdeploy {

Polygon::Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw std::invalid_argument("polygon needs at least 3 vertices");
  }
  if (area() <= 0.0) {
    throw std::invalid_argument("polygon has zero area");
  }
}

Polygon Polygon::rectangle(Vec2 lo, Vec2 hi) {
  return Polygon({lo, {hi.x, lo.y}, hi, {lo.x, hi.y}});
}

Polygon Polygon::regular_hexagon(double area, Vec2 center) {
  if (!(area > 0.0)) {
    throw std::invalid_argument("hexagon area must be positive");
  }
  // area = 3√3/2 · R²
  const double circumradius = std::sqrt(2.0 * area / (3.0 * std::sqrt(3.0)));
  std::vector<Vec2> v;
  v.reserve(6);
  for (int k = 0; k < 6; ++k) {
    const double a = std::numbers::pi / 6.0 + k * std::numbers::pi / 3.0;
    v.push_back(center + Vec2{circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  return Polygon(std::move(v));
}

double Polygon::area() const {
  double twice = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices_[i];
    const Vec2 b = vertices_[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::abs(twice) / 2.0;
}

Vec2 Polygon::centroid() const {
  double twice = 0.0;
  Vec2 acc;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices_[i];
    const Vec2 b = vertices_[(i + 1) % n];
    const double cross = a.x * b.y - b.x * a.y;
    twice += cross;
    acc += (a + b) * cross;
  }
  return acc * (1.0 / (3.0 * twice));
}

BoundingBox Polygon::bounds() const {
  BoundingBox box{vertices_.front(), vertices_.front()};
  for (const Vec2 &v : vertices_) {
    box.lo.x = std::min(box.lo.x, v.x);
    box.lo.y = std::min(box.lo.y, v.y);
    box.hi.x = std::max(box.hi.x, v.x);
    box.hi.y = std::max(box.hi.y, v.y);
  }
  return box;
}

bool Polygon::contains(Vec2 p) const {
  const std::size_t n = vertices_.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = vertices_[i];
    const Vec2 b = vertices_[j];
    // on-edge test
    const Vec2 ab = b - a;
    const Vec2 ap = p - a;
    const double cross = ab.x * ap.y - ab.y * ap.x;
    const double scale = std::max(1.0, norm2(ab));
    if (std::abs(cross) <= 1e-12 * scale && dot(ap, ab) >= 0.0 && dot(ap, ab) <= norm2(ab)) {
      return true;
    }
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

}  // namespace uavdeploy
