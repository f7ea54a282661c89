// Angle sums, vertex curvature, and the combinatorial Gauss-Bonnet check.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a2c/complex.hpp"
#include "a2c/link.hpp"
#include "a2c/rational.hpp"

namespace a2c {

/// Sum of all corner angles located at v.
inline Angle angle_sum(const Complex2& x, const VertexId& v) {
  Angle sum = Angle::zero();
  for (const auto& c : corners_at(x, v))
    sum += x.face(c.face).corner_angles[c.index];
  return sum;
}

/// kappa(v) = 2*pi - pi * chi(Lk(v)) - S(v), evaluated exactly.
inline Angle kappa(const Complex2& x, const VertexId& v) {
  const LinkGraph link = build_link(x, v);
  return Angle::two_pi() - Angle::of(link.euler_characteristic()) -
         angle_sum(x, v);
}

struct VertexCurvature {
  VertexId vertex;
  Angle angle_sum;
  int link_chi = 0;
  Angle kappa;
};

struct CurvatureReport {
  std::vector<VertexCurvature> rows;
  Angle total;
  /// Present only when the complex carries the disk-diagram flag.
  std::optional<Angle> gauss_bonnet_residual;
};

inline CurvatureReport curvature_report(const Complex2& x) {
  CurvatureReport report;
  report.total = Angle::zero();
  for (const auto& v : x.vertices()) {
    VertexCurvature row;
    row.vertex = v;
    row.angle_sum = angle_sum(x, v);
    row.link_chi = build_link(x, v).euler_characteristic();
    row.kappa = Angle::two_pi() - Angle::of(row.link_chi) - row.angle_sum;
    report.total += row.kappa;
    report.rows.push_back(std::move(row));
  }
  if (x.is_disk_diagram())
    report.gauss_bonnet_residual = report.total - Angle::two_pi();
  return report;
}

/// Sum of kappa over vertices minus 2*pi; zero certifies consistency with
/// the planar simply connected case. Planarity and simple connectivity are
/// trusted metadata: the check refuses to run without the disk-diagram flag.
inline Angle gauss_bonnet_check(const Complex2& x) {
  if (!x.is_disk_diagram())
    throw Error(
        "gauss_bonnet_check requires the disk_diagram flag; the complex is "
        "not marked as a planar simply connected diagram");
  Angle total = Angle::zero();
  for (const auto& v : x.vertices()) total += kappa(x, v);
  return total - Angle::two_pi();
}

}  // namespace a2c
