// SVG rendering of a traced path: visited polygons are unfolded into the
// plane along the path and the path is drawn over them.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "a2c/complex.hpp"
#include "a2c/realize.hpp"
#include "a2c/trace.hpp"

namespace a2c {

namespace svg_detail {

/// Planar rigid motion (optionally orientation-reversing).
struct Xform {
  // | a b | x + | tx |
  // | c d |     | ty |
  double a = 1, b = 0, c = 0, d = 1, tx = 0, ty = 0;

  Vec2 apply(const Vec2& p) const {
    return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
  }
  Vec2 apply_dir(const Vec2& p) const {
    return {a * p.x + b * p.y, c * p.x + d * p.y};
  }
  static Xform rotation(double angle, const Vec2& from, const Vec2& to) {
    Xform m;
    m.a = std::cos(angle);
    m.b = -std::sin(angle);
    m.c = std::sin(angle);
    m.d = std::cos(angle);
    const Vec2 rf = m.apply_dir(from);
    m.tx = to.x - rf.x;
    m.ty = to.y - rf.y;
    return m;
  }
  /// Maps segment (p1,p2) onto (q1,q2); `flip` selects the reflected branch.
  static Xform match(const Vec2& p1, const Vec2& p2, const Vec2& q1,
                     const Vec2& q2, bool flip) {
    const Vec2 u = (p2 - p1).normalized();
    const Vec2 v = (q2 - q1).normalized();
    Xform m;
    if (!flip) {
      // Rotation taking u to v.
      m.a = u.x * v.x + u.y * v.y;
      m.c = u.x * v.y - u.y * v.x;
      m.b = -m.c;
      m.d = m.a;
    } else {
      // Reflection taking u to v: reflect across the bisector direction.
      const double cu = std::atan2(u.y, u.x);
      const double cv = std::atan2(v.y, v.x);
      const double phi = cu + cv;  // reflection across angle phi/2
      m.a = std::cos(phi);
      m.b = std::sin(phi);
      m.c = std::sin(phi);
      m.d = -std::cos(phi);
    }
    const Vec2 rp = {m.a * p1.x + m.b * p1.y, m.c * p1.x + m.d * p1.y};
    m.tx = q1.x - rp.x;
    m.ty = q1.y - rp.y;
    return m;
  }
};

}  // namespace svg_detail

/// Renders the unfolded trace. Face segments place each visited polygon by
/// matching the shared edge; vertex and along-edge continuations are drawn
/// as straight continuations of the incoming direction.
inline std::string trace_to_svg(const Complex2& x, const SegmentalPath& path) {
  using svg_detail::Xform;
  std::map<FaceId, PolygonRealization> realizations;
  const auto realization = [&](const FaceId& f) -> const PolygonRealization& {
    auto it = realizations.find(f);
    if (it == realizations.end())
      it = realizations.emplace(f, realize_face(x, f)).first;
    return it->second;
  };

  struct Placed {
    std::vector<Vec2> polygon;
    Vec2 a, b;  // the segment, in global coordinates
  };
  std::vector<Placed> placed;

  Xform current;  // frame of the active segment -> global
  Vec2 global_dir{1, 0};
  Vec2 global_end{0, 0};

  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const auto& seg = path.segments[i];
    if (seg.face.empty()) {
      // Along-edge hop: unit straight continuation.
      Placed p;
      p.a = global_end;
      p.b = global_end + global_dir;
      placed.push_back(p);
      global_end = p.b;
      continue;
    }
    const auto& r = realization(seg.face);
    const Vec2 local_dir = (seg.b - seg.a).normalized();
    if (i == 0) {
      current = Xform{};
    } else {
      const auto& bp = path.points[i];
      const auto& prev = path.segments[i - 1];
      bool matched = false;
      if (bp.kind == BreakKind::kEdgePoint && !prev.face.empty() &&
          bp.in_pos >= 0 && bp.out_pos >= 0) {
        // Glue along the shared edge, endpoint-matched by edge orientation.
        const auto& rp = realization(prev.face);
        const Face& fp = x.face(prev.face);
        const Face& fg = x.face(seg.face);
        const bool fwd_p = fp.boundary[bp.in_pos].forward;
        const bool fwd_g = fg.boundary[bp.out_pos].forward;
        const Vec2 tail_p = fwd_p ? rp.side_start(bp.in_pos) : rp.side_end(bp.in_pos);
        const Vec2 head_p = fwd_p ? rp.side_end(bp.in_pos) : rp.side_start(bp.in_pos);
        const Vec2 tail_g = fwd_g ? r.side_start(bp.out_pos) : r.side_end(bp.out_pos);
        const Vec2 head_g = fwd_g ? r.side_end(bp.out_pos) : r.side_start(bp.out_pos);
        // The new polygon must land on the far side of the shared edge.
        for (bool flip : {fwd_p == fwd_g, fwd_p != fwd_g}) {
          Xform m = Xform::match(tail_g, head_g, tail_p, head_p, flip);
          Vec2 centroid{0, 0};
          for (const auto& vtx : r.vertices) centroid = centroid + vtx;
          centroid = m.apply(centroid * (1.0 / r.n()));
          Vec2 centroid_p{0, 0};
          for (const auto& vtx : rp.vertices) centroid_p = centroid_p + vtx;
          centroid_p = centroid_p * (1.0 / rp.n());
          const Vec2 u = (head_p - tail_p).normalized();
          const double side_new = u.cross(centroid - tail_p);
          const double side_old = u.cross(centroid_p - tail_p);
          if (side_new * side_old < 0) {
            // Compose with the previous frame's placement.
            Xform composed;
            composed.a = current.a * m.a + current.b * m.c;
            composed.b = current.a * m.b + current.b * m.d;
            composed.c = current.c * m.a + current.d * m.c;
            composed.d = current.c * m.b + current.d * m.d;
            const Vec2 t = current.apply({m.tx, m.ty});
            composed.tx = t.x;
            composed.ty = t.y;
            current = composed;
            matched = true;
            break;
          }
        }
      }
      if (!matched) {
        // Vertex or along-edge continuation: anchor at the breakpoint and
        // keep the incoming global direction.
        const double turn = std::atan2(global_dir.y, global_dir.x) -
                            std::atan2(local_dir.y, local_dir.x);
        Xform m = Xform::rotation(turn, seg.a, global_end);
        current = m;
      }
    }
    Placed p;
    for (const auto& vtx : r.vertices) p.polygon.push_back(current.apply(vtx));
    p.a = current.apply(seg.a);
    p.b = current.apply(seg.b);
    placed.push_back(p);
    global_dir = current.apply_dir(local_dir);
    global_end = p.b;
  }

  // Bounds.
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  bool first = true;
  for (const auto& p : placed) {
    for (const auto& v : p.polygon) {
      if (first || v.x < min_x) min_x = first ? v.x : std::min(min_x, v.x);
      if (first || v.y < min_y) min_y = first ? v.y : std::min(min_y, v.y);
      max_x = first ? v.x : std::max(max_x, v.x);
      max_y = first ? v.y : std::max(max_y, v.y);
      first = false;
    }
    for (const Vec2& v : {p.a, p.b}) {
      min_x = std::min(min_x, v.x);
      min_y = std::min(min_y, v.y);
      max_x = std::max(max_x, v.x);
      max_y = std::max(max_y, v.y);
    }
  }
  const double pad = 0.1 * std::max(max_x - min_x, max_y - min_y) + 0.1;
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;
  const double w = max_x - min_x, h = max_y - min_y;
  const double scale = 400.0 / std::max(w, h);

  const auto px = [&](const Vec2& v) {
    std::ostringstream out;
    out << (v.x - min_x) * scale << "," << (h - (v.y - min_y)) * scale;
    return out.str();
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale
      << "\" height=\"" << h * scale << "\">\n";
  for (const auto& p : placed) {
    if (p.polygon.empty()) continue;
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < p.polygon.size(); ++i)
      out << (i ? " " : "") << px(p.polygon[i]);
    out << "\" fill=\"#f5f5f5\" stroke=\"#808080\" stroke-width=\"1\"/>\n";
  }
  out << "  <polyline points=\"";
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (i == 0) out << px(placed[i].a);
    out << " " << px(placed[i].b);
  }
  out << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  if (!placed.empty())
    out << "  <circle cx=\"" << (placed[0].a.x - min_x) * scale << "\" cy=\""
        << (h - (placed[0].a.y - min_y)) * scale
        << "\" r=\"4\" fill=\"#2c3e50\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace a2c
