// Straight segmental-path tracing across face realizations, with exact
// straightness decisions in link metric graphs, independent post-hoc
// verification, and an SVG unfolding of the traced path.
//
// The planar geometry only selects crossing points and parameters; every
// straightness decision is made on exact rational link offsets (floating
// measurements are rationalized by continued fractions before deciding).
#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "a2c/complex.hpp"
#include "a2c/link.hpp"
#include "a2c/realize.hpp"

namespace a2c {

enum class BreakKind { kInterior, kEdgePoint, kVertex };

inline const char* break_kind_name(BreakKind k) {
  switch (k) {
    case BreakKind::kInterior:
      return "interior";
    case BreakKind::kEdgePoint:
      return "edge-point";
    default:
      return "vertex";
  }
}

/// Straightness certificate at a breakpoint: the entry and exit directions
/// as exact metric points of the local link, and their link distance
/// (nullopt when the points lie in different link components, which counts
/// as distance infinity >= pi).
struct StraightWitness {
  std::string link_id;  // "edge:<id>" or "vertex:<id>"
  MetricPoint entry;
  MetricPoint exit;
  std::optional<Angle> distance;
};

struct Breakpoint {
  BreakKind kind = BreakKind::kInterior;
  FaceId face;  // face the incoming segment lies in (empty for a bare start)
  Vec2 pos;     // canonical-realization coordinates in `face`
  EdgeId edge;  // kEdgePoint
  double edge_param = 0;  // fraction from the edge's tail
  int in_pos = -1;        // boundary position crossed in the incoming face
  int out_pos = -1;       // boundary position in the outgoing face
  VertexId vertex;        // kVertex
  std::optional<StraightWitness> witness;  // absent at path endpoints
};

/// One traced segment. Face segments live in the canonical realization of
/// `face`; along-edge segments have empty face and name the edge instead.
struct PathSegment {
  FaceId face;
  EdgeId along_edge;
  Vec2 a, b;
};

struct SegmentalPath {
  std::vector<Breakpoint> points;
  std::vector<PathSegment> segments;
};

enum class StopReason { kSelfIntersect, kEdgeRevisit, kFreeEdgeHit, kMaxSteps };

inline const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::kSelfIntersect:
      return "self-intersect";
    case StopReason::kEdgeRevisit:
      return "edge-revisit";
    case StopReason::kFreeEdgeHit:
      return "free-edge-hit";
    default:
      return "max-steps";
  }
}

struct Termination {
  StopReason reason = StopReason::kMaxSteps;
  std::string location;
};

struct TraceResult {
  SegmentalPath path;
  Termination termination;
};

/// A straight continuation across an edge interior: the adjacency entered
/// and the exit angle (from the tailward direction).
struct EdgeExit {
  EdgeAdjacency adjacency;
  Angle exit_angle;
};

/// Continuations across edge e whose link distance from the entry direction
/// is >= pi: every adjacency other than the entered one, at exit angle
/// pi - alpha, and nothing within the entry adjacency. Requires census >= 2;
/// census 1 is the free-edge stop signal.
inline std::vector<EdgeExit> straight_exits(const Complex2& x, const EdgeId& e,
                                            const EdgeAdjacency& entry,
                                            const Angle& entry_angle) {
  if (!(entry_angle > Angle::zero()) || !(entry_angle < Angle::pi()))
    throw Error("entry angle must lie strictly between 0 and pi");
  const auto adjacencies = edge_adjacencies(x, e);
  if (adjacencies.size() <= 1)
    throw Error("free edge hit: edge '" + e + "' has census " +
                std::to_string(adjacencies.size()) +
                "; a straight path cannot continue");
  std::vector<EdgeExit> out;
  for (const auto& adj : adjacencies) {
    if (adj == entry) continue;
    out.push_back({adj, Angle::pi() - entry_angle});
  }
  return out;
}

/// All metric points of Lk(v) at distance >= pi from the entry direction,
/// plus the eccentricity witness the tracer follows (ties broken toward
/// nodes, then canonical arc order).
struct VertexExits {
  Eccentricity ecc;
  StraightRegions regions;
};

inline VertexExits straight_exits_at_vertex(const Complex2& x,
                                            const VertexId& v,
                                            const MetricPoint& entry) {
  const LinkGraph link = build_link(x, v);
  require_point_in(link, entry);
  VertexExits out;
  out.ecc = eccentricity(link, entry);
  out.regions = points_at_distance_at_least(link, entry, Angle::pi());
  return out;
}

namespace trace_detail {

constexpr double kPi = 3.14159265358979323846;

inline double angle_between(const Vec2& a, const Vec2& b) {
  return std::atan2(std::abs(a.cross(b)), a.dot(b));
}

/// Tailward unit vector of the edge drawn as side `pos` of the realization.
inline Vec2 tailward_unit(const PolygonRealization& r, const Face& f, int pos) {
  const Vec2 u = r.side_unit(pos);
  return f.boundary[pos].forward ? Vec2{-u.x, -u.y} : u;
}

/// Point on side `pos` at edge fraction `param` (measured from the tail).
inline Vec2 point_on_side(const PolygonRealization& r, const Face& f, int pos,
                          double param) {
  const double s = f.boundary[pos].forward ? param : 1.0 - param;
  return r.side_start(pos) + r.side_unit(pos) * (s * r.side_lengths[pos]);
}

/// Decodes a vertex-link node name "<edge>.<tail|head>".
inline std::pair<EdgeId, EdgeEnd> decode_link_node(const std::string& name) {
  const auto dot = name.rfind('.');
  if (dot == std::string::npos) throw Error("malformed link node '" + name + "'");
  const std::string end = name.substr(dot + 1);
  return {name.substr(0, dot),
          end == "tail" ? EdgeEnd::kTail : EdgeEnd::kHead};
}

struct RayHit {
  bool vertex_hit = false;
  int side = -1;          // side crossed (or the side whose endpoint was hit)
  int vertex_index = -1;  // realization vertex index when vertex_hit
  double t = 0;           // ray parameter
  double s = 0;           // parameter along the side, 0 at side_start
  Vec2 point;
};

/// First exit of the ray p + t*d from the polygon, with vertex snapping.
inline std::optional<RayHit> first_exit(const PolygonRealization& r,
                                        const Vec2& p, const Vec2& d) {
  const double scale = r.scale();
  const double t_eps = 1e-9 * scale;
  std::optional<RayHit> best;
  for (int i = 0; i < r.n(); ++i) {
    const Vec2 a = r.side_start(i);
    const Vec2 b = r.side_end(i);
    const Vec2 ab = b - a;
    const double den = d.cross(ab);
    if (std::abs(den) < 1e-14) continue;
    const double t = (a - p).cross(ab) / den;
    const double s = (a - p).cross(d) / den;
    if (t <= t_eps) continue;
    if (s < -1e-9 || s > 1 + 1e-9) continue;
    if (!best || t < best->t) {
      RayHit hit;
      hit.side = i;
      hit.t = t;
      hit.s = std::clamp(s, 0.0, 1.0);
      hit.point = p + d * t;
      best = hit;
    }
  }
  if (!best) return std::nullopt;
  // Vertex snap.
  const double snap = 1e-7 * scale;
  const int i = best->side;
  if ((best->point - r.side_start(i)).norm() < snap) {
    best->vertex_hit = true;
    best->vertex_index = i;
    best->point = r.side_start(i);
  } else if ((best->point - r.side_end(i)).norm() < snap) {
    best->vertex_hit = true;
    best->vertex_index = (i + 1) % r.n();
    best->point = r.side_end(i);
  }
  return best;
}

/// Proper transversal crossing of segments (p1,p2) and (q1,q2).
inline std::optional<Vec2> proper_crossing(const Vec2& p1, const Vec2& p2,
                                           const Vec2& q1, const Vec2& q2) {
  const Vec2 d1 = p2 - p1, d2 = q2 - q1;
  const double den = d1.cross(d2);
  if (std::abs(den) < 1e-12) return std::nullopt;  // parallel or collinear
  const double t = (q1 - p1).cross(d2) / den;
  const double s = (q1 - p1).cross(d1) / den;
  const double eps = 1e-9;
  if (t <= eps || t >= 1 - eps || s <= eps || s >= 1 - eps) return std::nullopt;
  return p1 + d1 * t;
}

inline Angle clamp_open(Angle value, const Angle& hi) {
  const Angle step = Angle::of(1, 1000000);
  if (!(value > Angle::zero())) value = min(step, hi / 2);
  if (!(value < hi)) value = hi - min(step, hi / 2);
  return value;
}

inline std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

}  // namespace trace_detail

/// Traces a straight segmental path from a point strictly inside a face.
/// At edge interiors the path continues into the first other adjacency (in
/// canonical order) at exit angle pi - alpha; at vertices it follows the
/// eccentricity witness of the entry direction. Stops at the first proper
/// self-intersection, at the second arrival on any edge, at a free edge, or
/// after max_steps segments.
inline TraceResult trace_straight(const Complex2& x, const FaceId& start_face,
                                  const Vec2& start, const Vec2& direction,
                                  int max_steps) {
  if (direction.norm() == 0) throw Error("trace direction must be nonzero");

  std::map<FaceId, PolygonRealization> realizations;
  const auto realization = [&](const FaceId& f) -> const PolygonRealization& {
    auto it = realizations.find(f);
    if (it == realizations.end())
      it = realizations.emplace(f, realize_face(x, f)).first;
    return it->second;
  };

  {
    const auto& r0 = realization(start_face);
    if (!r0.contains(start) ||
        [&] {  // reject points on the boundary
          for (int i = 0; i < r0.n(); ++i) {
            const Vec2 a = r0.side_start(i), b = r0.side_end(i);
            const Vec2 ab = b - a;
            const double t =
                std::clamp((start - a).dot(ab) / ab.dot(ab), 0.0, 1.0);
            if ((start - (a + ab * t)).norm() < 1e-7 * r0.scale()) return true;
          }
          return false;
        }())
      throw Error("trace start must lie strictly inside face '" + start_face +
                  "'");
  }

  TraceResult result;
  auto& path = result.path;
  std::set<EdgeId> crossed;

  Breakpoint start_bp;
  start_bp.kind = BreakKind::kInterior;
  start_bp.face = start_face;
  start_bp.pos = start;
  path.points.push_back(start_bp);

  // Current state: either inside a face with a direction, or at a vertex
  // about to continue (handled inline).
  FaceId face = start_face;
  Vec2 point = start;
  Vec2 dir = direction.normalized();

  const auto self_intersects =
      [&](const PathSegment& seg) -> std::optional<Vec2> {
    if (seg.face.empty()) return std::nullopt;
    for (std::size_t i = 0; i + 1 < path.segments.size(); ++i) {
      const auto& other = path.segments[i];
      if (other.face != seg.face) continue;
      if (auto hit =
              trace_detail::proper_crossing(seg.a, seg.b, other.a, other.b))
        return hit;
    }
    return std::nullopt;
  };

  while (true) {
    if (static_cast<int>(path.segments.size()) >= max_steps) {
      result.termination = {StopReason::kMaxSteps,
                            "after " + std::to_string(max_steps) + " segments"};
      return result;
    }
    const auto& r = realization(face);
    const Face& f = x.face(face);
    const auto hit = trace_detail::first_exit(r, point, dir);
    if (!hit)
      throw Error("degenerate realization: ray found no exit from face '" +
                  face + "'");

    PathSegment seg;
    seg.face = face;
    seg.a = point;
    seg.b = hit->point;
    path.segments.push_back(seg);

    if (auto cross_pt = self_intersects(path.segments.back())) {
      path.segments.back().b = *cross_pt;
      Breakpoint bp;
      bp.kind = BreakKind::kInterior;
      bp.face = face;
      bp.pos = *cross_pt;
      path.points.push_back(bp);
      result.termination = {
          StopReason::kSelfIntersect,
          "face " + face + " at (" + trace_detail::fmt(cross_pt->x) + ", " +
              trace_detail::fmt(cross_pt->y) + ")"};
      return result;
    }

    if (hit->vertex_hit) {
      // Corner c of the face ends at realization vertex index c+1.
      const int n = r.n();
      const int corner = (hit->vertex_index - 1 + n) % n;
      const VertexId v = x.head_of(f.boundary[corner]);

      Breakpoint bp;
      bp.kind = BreakKind::kVertex;
      bp.face = face;
      bp.pos = hit->point;
      bp.vertex = v;

      const LinkGraph link = build_link(x, v);
      const Vec2 back = Vec2{-dir.x, -dir.y};
      const Vec2 ray_in = r.side_unit(corner) * -1.0;
      const int arc = link.find_arc_by_provenance(
          face + "#" + std::to_string(corner));
      const double phi_hat = trace_detail::angle_between(back, ray_in);
      const Angle corner_angle = f.corner_angles[corner];
      MetricPoint entry;
      const double snap = 1e-7;
      if (phi_hat < snap) {
        entry = MetricPoint::at_node(link.arcs[arc].node_a);
      } else if (phi_hat > corner_angle.radians() - snap) {
        entry = MetricPoint::at_node(link.arcs[arc].node_b);
      } else {
        entry = MetricPoint::on_arc(
            arc, trace_detail::clamp_open(rationalize_angle(phi_hat),
                                          corner_angle));
      }

      // Vertex continuation loop: may walk along edges through several
      // vertices before re-entering a face.
      VertexId at_vertex = v;
      MetricPoint at_entry = entry;
      path.points.push_back(bp);
      while (true) {
        if (static_cast<int>(path.segments.size()) >= max_steps) {
          result.termination = {StopReason::kMaxSteps,
                                "after " + std::to_string(max_steps) +
                                    " segments"};
          return result;
        }
        const LinkGraph lk = build_link(x, at_vertex);
        const Eccentricity ecc = eccentricity(lk, at_entry);
        if (ecc.finite && ecc.value < Angle::pi()) {
          result.termination = {StopReason::kFreeEdgeHit,
                                "no straight continuation at vertex " +
                                    at_vertex + " (eccentricity " +
                                    ecc.value.str() + "*pi)"};
          return result;
        }
        MetricPoint exit_point = ecc.witness;
        std::optional<Angle> cert;
        if (ecc.finite) {
          cert = ecc.value;
        } else {
          // Disconnected link: any point of an unreachable component is a
          // straight continuation; take the first in canonical order.
          const auto regions =
              points_at_distance_at_least(lk, at_entry, Angle::pi());
          bool picked = false;
          for (int node : regions.nodes) {
            if (!distance(lk, at_entry, MetricPoint::at_node(node))) {
              exit_point = MetricPoint::at_node(node);
              picked = true;
              break;
            }
          }
          if (!picked && !regions.spans.empty()) {
            const auto& span = regions.spans.front();
            exit_point = MetricPoint::on_arc(span.arc, (span.lo + span.hi) / 2);
          }
          cert = distance(lk, at_entry, exit_point);  // nullopt: infinite
        }
        auto& here = path.points.back();
        here.witness =
            StraightWitness{"vertex:" + at_vertex, at_entry, exit_point, cert};

        if (exit_point.is_node()) {
          // Continue along the edge to its far endpoint.
          const auto [eid, end] =
              trace_detail::decode_link_node(lk.node_names[exit_point.node]);
          const Edge& e = x.edge(eid);
          const VertexId far = end == EdgeEnd::kTail ? e.head : e.tail;
          PathSegment es;
          es.along_edge = eid;
          es.a = {0, 0};
          es.b = {1, 0};
          path.segments.push_back(es);
          if (crossed.count(eid)) {
            Breakpoint vb;
            vb.kind = BreakKind::kVertex;
            vb.vertex = far;
            path.points.push_back(vb);
            result.termination = {StopReason::kEdgeRevisit,
                                  "edge " + eid + " reached again (traversed)"};
            return result;
          }
          crossed.insert(eid);
          Breakpoint vb;
          vb.kind = BreakKind::kVertex;
          vb.vertex = far;
          path.points.push_back(vb);
          at_vertex = far;
          const LinkGraph far_link = build_link(x, far);
          const int node = far_link.find_node(link_node_name(
              eid, end == EdgeEnd::kTail ? EdgeEnd::kHead : EdgeEnd::kTail));
          at_entry = MetricPoint::at_node(node);
          continue;
        }

        // Exit into the interior of a corner arc: resume planar tracing.
        const auto& exit_arc = lk.arcs[exit_point.arc];
        const auto hash = exit_arc.provenance.rfind('#');
        const FaceId g = exit_arc.provenance.substr(0, hash);
        const int c2 = std::stoi(exit_arc.provenance.substr(hash + 1));
        const auto& rg = realization(g);
        const Vec2 ray_in2 = rg.side_unit(c2) * -1.0;
        const Vec2 new_dir = ray_in2.rotated(-exit_point.offset.radians());
        face = g;
        point = rg.corner_vertex(c2);
        dir = new_dir;
        break;
      }
      continue;
    }

    // Interior edge crossing.
    const int side = hit->side;
    const DirectedEdge& crossed_dir = f.boundary[side];
    const EdgeId eid = crossed_dir.edge;
    const double edge_param =
        crossed_dir.forward ? hit->s : 1.0 - hit->s;

    Breakpoint bp;
    bp.kind = BreakKind::kEdgePoint;
    bp.face = face;
    bp.pos = hit->point;
    bp.edge = eid;
    bp.edge_param = edge_param;
    bp.in_pos = side;

    if (crossed.count(eid)) {
      path.points.push_back(bp);
      result.termination = {StopReason::kEdgeRevisit,
                            "edge " + eid + " at param " +
                                trace_detail::fmt(edge_param)};
      return result;
    }
    const auto adjacencies = edge_adjacencies(x, eid);
    if (adjacencies.size() <= 1) {
      path.points.push_back(bp);
      result.termination = {StopReason::kFreeEdgeHit,
                            "edge " + eid + " has census " +
                                std::to_string(adjacencies.size())};
      return result;
    }
    crossed.insert(eid);

    const EdgeAdjacency entry_adj{face, side};
    const Vec2 back = Vec2{-dir.x, -dir.y};
    const Vec2 tailward = trace_detail::tailward_unit(r, f, side);
    const double alpha_hat = trace_detail::angle_between(back, tailward);
    const Angle alpha = trace_detail::clamp_open(
        rationalize_angle(alpha_hat), Angle::pi());
    const auto exits = straight_exits(x, eid, entry_adj, alpha);
    const EdgeExit& chosen = exits.front();

    const LinkGraph elink = link_of_edge_interior(x, eid);
    int entry_arc = -1, exit_arc = -1;
    for (std::size_t i = 0; i < adjacencies.size(); ++i) {
      if (adjacencies[i] == entry_adj) entry_arc = static_cast<int>(i);
      if (adjacencies[i] == chosen.adjacency) exit_arc = static_cast<int>(i);
    }
    const MetricPoint entry_pt = MetricPoint::on_arc(entry_arc, alpha);
    const MetricPoint exit_pt = MetricPoint::on_arc(exit_arc, chosen.exit_angle);
    bp.witness = StraightWitness{"edge:" + eid, entry_pt, exit_pt,
                                 distance(elink, entry_pt, exit_pt)};
    bp.out_pos = chosen.adjacency.pos;
    path.points.push_back(bp);

    // Re-enter through the chosen adjacency at the matching edge fraction.
    const Face& gf = x.face(chosen.adjacency.face);
    const auto& rg = realization(chosen.adjacency.face);
    const int m = chosen.adjacency.pos;
    const Vec2 new_point = trace_detail::point_on_side(rg, gf, m, edge_param);
    const Vec2 tailward_g = trace_detail::tailward_unit(rg, gf, m);
    const double beta = chosen.exit_angle.radians();
    Vec2 cand1 = tailward_g.rotated(beta);
    Vec2 cand2 = tailward_g.rotated(-beta);
    const Vec2 side_u = rg.side_unit(m);
    const Vec2 inward{-side_u.y, side_u.x};  // interior is left of the side
    const Vec2 new_dir = cand1.dot(inward) > cand2.dot(inward) ? cand1 : cand2;

    face = chosen.adjacency.face;
    point = new_point;
    dir = new_dir;
  }
}

/// Outcome of an independent straightness verification.
struct StraightnessCheck {
  bool ok = true;
  int breakpoint = -1;
  std::string message;
};

/// Recomputes every interior breakpoint's link distance from the stored
/// entry/exit points (independently of the tracer's cached values), checks
/// them against the geometry of the adjacent segments, and confirms each
/// distance is >= pi. Reports the first violating breakpoint.
inline StraightnessCheck verify_straight(const Complex2& x,
                                         const SegmentalPath& path) {
  const auto fail = [](int i, std::string msg) {
    return StraightnessCheck{false, i, std::move(msg)};
  };
  if (path.points.size() != path.segments.size() + 1)
    return fail(-1, "malformed path: " + std::to_string(path.points.size()) +
                        " breakpoints for " +
                        std::to_string(path.segments.size()) + " segments");

  std::map<FaceId, PolygonRealization> realizations;
  const auto realization = [&](const FaceId& f) -> const PolygonRealization& {
    auto it = realizations.find(f);
    if (it == realizations.end())
      it = realizations.emplace(f, realize_face(x, f)).first;
    return it->second;
  };
  constexpr double kAngleTol = 1e-5;

  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const auto& seg = path.segments[i];
    if (seg.face.empty()) continue;  // along-edge segments have no interior
    const auto& r = realization(seg.face);
    const Vec2 mid = (seg.a + seg.b) * 0.5;
    if (!r.contains(seg.a, 1e-6) || !r.contains(seg.b, 1e-6) ||
        !r.contains(mid, 1e-6))
      return fail(static_cast<int>(i),
                  "segment " + std::to_string(i) +
                      " leaves the realization of face " + seg.face);
  }

  for (std::size_t i = 1; i + 1 < path.points.size(); ++i) {
    const auto& bp = path.points[i];
    if (!bp.witness)
      return fail(static_cast<int>(i), "interior breakpoint lacks a witness");
    const auto& w = *bp.witness;
    const auto& seg_in = path.segments[i - 1];
    const auto& seg_out = path.segments[i];

    if (bp.kind == BreakKind::kEdgePoint) {
      const LinkGraph link = link_of_edge_interior(x, bp.edge);
      if (w.entry.arc == w.exit.arc)
        return fail(static_cast<int>(i),
                    "continuation re-enters the entry adjacency of edge " +
                        bp.edge);
      const auto dist = distance(link, w.entry, w.exit);
      if (!dist || *dist < Angle::pi())
        return fail(static_cast<int>(i),
                    "link distance " + (dist ? dist->str() : "inf") +
                        "*pi < pi at edge " + bp.edge);
      // Geometric consistency of the stored exact offsets.
      if (!seg_in.face.empty() && bp.in_pos >= 0) {
        const auto& rin = realization(seg_in.face);
        const Face& fin = x.face(seg_in.face);
        const Vec2 d = (seg_in.b - seg_in.a).normalized();
        const double alpha_hat = trace_detail::angle_between(
            Vec2{-d.x, -d.y}, trace_detail::tailward_unit(rin, fin, bp.in_pos));
        if (std::abs(alpha_hat - w.entry.offset.radians()) > kAngleTol)
          return fail(static_cast<int>(i),
                      "stored entry angle disagrees with segment geometry at "
                      "edge " + bp.edge);
      }
      if (!seg_out.face.empty() && bp.out_pos >= 0) {
        const auto& rout = realization(seg_out.face);
        const Face& fout = x.face(seg_out.face);
        const Vec2 d = (seg_out.b - seg_out.a).normalized();
        const double beta_hat = trace_detail::angle_between(
            d, trace_detail::tailward_unit(rout, fout, bp.out_pos));
        if (std::abs(beta_hat - w.exit.offset.radians()) > kAngleTol)
          return fail(static_cast<int>(i),
                      "stored exit angle disagrees with segment geometry at "
                      "edge " + bp.edge);
      }
    } else if (bp.kind == BreakKind::kVertex) {
      const LinkGraph link = build_link(x, bp.vertex);
      const auto dist = distance(link, w.entry, w.exit);
      if (dist && *dist < Angle::pi())
        return fail(static_cast<int>(i),
                    "link distance " + dist->str() + "*pi < pi at vertex " +
                        bp.vertex);
    } else {
      return fail(static_cast<int>(i),
                  "interior breakpoint of kind 'interior' is not a valid "
                  "crossing");
    }
  }
  return {};
}

}  // namespace a2c
