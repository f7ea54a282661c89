// Euclidean realization of faces: a polygon whose interior angles match the
// corner angles. Angles are exact; coordinates and side lengths are floats
// and only ever select crossing points, never straightness decisions.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "a2c/complex.hpp"

namespace a2c {

struct Vec2 {
  double x = 0, y = 0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::sqrt(x * x + y * y); }
  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }
  Vec2 rotated(double angle) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * x - s * y, s * x + c * y};
  }
};

class RealizationError : public Error {
 public:
  using Error::Error;
};

/// Side lengths closing a polygon with the given side directions, found as
/// the minimum-norm deviation from all-equal lengths; a projection search
/// is the fallback when that solution is not positive. nullopt when no
/// positive closure exists (directions confined to a half-plane).
inline std::optional<std::vector<double>> solve_positive_closure(
    const std::vector<double>& dirs) {
  const int n = static_cast<int>(dirs.size());
  std::vector<Vec2> u(n);
  for (int i = 0; i < n; ++i) u[i] = {std::cos(dirs[i]), std::sin(dirs[i])};

  const auto project = [&](std::vector<double>& len) -> bool {
    // Project onto { L : sum L_i u_i = 0 } by removing the row-space part.
    double a = 0, b = 0, c = 0;  // U U^T = [a b; b c]
    Vec2 r{0, 0};
    for (int i = 0; i < n; ++i) {
      a += u[i].x * u[i].x;
      b += u[i].x * u[i].y;
      c += u[i].y * u[i].y;
      r = r + u[i] * len[i];
    }
    const double det = a * c - b * b;
    if (std::abs(det) < 1e-12) return false;
    const double yx = (c * r.x - b * r.y) / det;
    const double yy = (a * r.y - b * r.x) / det;
    for (int i = 0; i < n; ++i) len[i] -= u[i].x * yx + u[i].y * yy;
    return true;
  };

  std::vector<double> len(n, 1.0);
  if (!project(len)) return std::nullopt;
  double lo = 1e30;
  for (double l : len) lo = std::min(lo, l);
  if (lo > 1e-7) return len;

  // Alternate clamping to positive values with re-projection.
  for (int iter = 0; iter < 2000; ++iter) {
    for (double& l : len) l = std::max(l, 0.05);
    if (!project(len)) return std::nullopt;
    lo = 1e30;
    for (double l : len) lo = std::min(lo, l);
    if (lo > 1e-7) {
      Vec2 res{0, 0};
      for (int i = 0; i < n; ++i) res = res + u[i] * len[i];
      if (res.norm() < 1e-9 * n) return len;
    }
  }
  return std::nullopt;
}

/// A face drawn in the plane. Side i runs vertices[i] -> vertices[i+1] and
/// is the image of boundary[i]; the corner with index c sits at
/// vertices[(c+1) mod n].
struct PolygonRealization {
  FaceId face;
  std::vector<Vec2> vertices;
  std::vector<double> side_lengths;
  std::vector<double> side_dirs;

  int n() const { return static_cast<int>(vertices.size()); }
  Vec2 side_start(int i) const { return vertices[i]; }
  Vec2 side_end(int i) const { return vertices[(i + 1) % n()]; }
  Vec2 side_unit(int i) const {
    return {std::cos(side_dirs[i]), std::sin(side_dirs[i])};
  }
  int corner_vertex_index(int corner) const { return (corner + 1) % n(); }
  Vec2 corner_vertex(int corner) const {
    return vertices[corner_vertex_index(corner)];
  }
  double scale() const {
    double s = 0;
    for (double l : side_lengths) s += l;
    return s;
  }

  bool contains(const Vec2& p, double tol = 1e-9) const {
    // Winding-number test, tolerant on the boundary.
    const double eps = tol * scale();
    double winding = 0;
    for (int i = 0; i < n(); ++i) {
      const Vec2 a = side_start(i);
      const Vec2 b = side_end(i);
      const Vec2 ab = b - a;
      const double len2 = ab.dot(ab);
      const double t = len2 > 0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
      if ((p - (a + ab * t)).norm() <= eps) return true;  // on side
      winding += std::atan2((a - p).cross(b - p), (a - p).dot(b - p));
    }
    return std::abs(winding) > 3.14;  // ~2*pi inside, ~0 outside
  }
};

/// Realizes face f: side directions are forced by the corner angles (the
/// polygon is traversed counterclockwise), and side lengths solve the
/// closure system. Deterministic. Throws RealizationError when no positive
/// closure exists or the polygon self-intersects.
inline PolygonRealization realize_face(const Complex2& x, const FaceId& fid) {
  const Face& f = x.face(fid);
  const int n = f.side_count();
  if (n < 3)
    throw RealizationError("face '" + fid + "' has fewer than 3 sides");

  PolygonRealization r;
  r.face = fid;
  r.side_dirs.resize(n);
  r.side_dirs[0] = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    // Exterior turn at the corner between side i and side i+1.
    const double alpha = f.corner_angles[i].radians();
    r.side_dirs[i + 1] = r.side_dirs[i] + (3.14159265358979323846 - alpha);
  }

  auto lengths = solve_positive_closure(r.side_dirs);
  if (!lengths) {
    std::string dirs;
    for (double d : r.side_dirs) dirs += (dirs.empty() ? "" : ", ") + std::to_string(d);
    throw RealizationError("face '" + fid +
                           "' admits no positive closure; side directions [" +
                           dirs + "]");
  }
  r.side_lengths = *lengths;
  r.vertices.resize(n);
  r.vertices[0] = {0, 0};
  for (int i = 0; i + 1 < n; ++i)
    r.vertices[i + 1] = r.vertices[i] + r.side_unit(i) * r.side_lengths[i];

  const Vec2 closure =
      r.vertices[n - 1] + r.side_unit(n - 1) * r.side_lengths[n - 1];
  if (closure.norm() > 1e-9 * r.scale())
    throw RealizationError("face '" + fid + "' closure residual " +
                           std::to_string(closure.norm()));

  // Proper self-intersection between non-adjacent sides.
  const auto segments_cross = [](Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    const Vec2 d1 = p2 - p1, d2 = q2 - q1;
    const double den = d1.cross(d2);
    if (std::abs(den) < 1e-14) return false;
    const double t = (q1 - p1).cross(d2) / den;
    const double s = (q1 - p1).cross(d1) / den;
    const double eps = 1e-9;
    return t > eps && t < 1 - eps && s > eps && s < 1 - eps;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_cross(r.side_start(i), r.side_end(i), r.side_start(j),
                         r.side_end(j)))
        throw RealizationError("face '" + fid +
                               "' realization self-intersects (sides " +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  return r;
}

}  // namespace a2c
