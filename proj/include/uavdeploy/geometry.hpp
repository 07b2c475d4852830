#ifndef UAVDEPLOY_GEOMETRY_HPP
#define UAVDEPLOY_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace uavdeploy {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 &operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2 &operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2 &operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return a -= b; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

struct BoundingBox {
  Vec2 lo;
  Vec2 hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double diameter() const { return std::hypot(width(), height()); }
  bool contains(Vec2 p) const { return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y; }
};

/// Simple polygon given by its vertices in order (either orientation).
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Vec2> vertices);

  static Polygon rectangle(Vec2 lo, Vec2 hi);
  /// Regular hexagon of the given area centred at `center`, with an inradius
  /// direction along +x (vertices at angles 30° + k·60°).
  static Polygon regular_hexagon(double area, Vec2 center = {});

  const std::vector<Vec2> &vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }

  double area() const;
  Vec2 centroid() const;
  BoundingBox bounds() const;
  /// Even-odd rule; points exactly on an edge count as inside.
  bool contains(Vec2 p) const;

  friend bool operator==(const Polygon &, const Polygon &) = default;

 private:
  std::vector<Vec2> vertices_;
};

}  // namespace uavdeploy

#endif
