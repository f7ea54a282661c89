// Free-face detection, elementary collapses, and full collapse with
// terminal classification; the executable form of the collapsibility
// decision procedures.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "a2c/complex.hpp"
#include "a2c/weight_test.hpp"

namespace a2c {

enum class FreeFaceKind { kVertexInEdge, kEdgeInFace };

inline const char* free_face_kind_name(FreeFaceKind k) {
  return k == FreeFaceKind::kVertexInEdge ? "vertex-in-edge" : "edge-in-face";
}

/// A free cell and its unique coface. vertex-in-edge: the vertex lies on
/// exactly one edge, that edge is not a loop, and no face corner touches
/// the vertex. edge-in-face: the edge appears exactly once across all
/// boundary words.
struct FreeFace {
  FreeFaceKind kind = FreeFaceKind::kVertexInEdge;
  std::string cell;
  std::string coface;

  bool operator==(const FreeFace& o) const {
    return kind == o.kind && cell == o.cell && coface == o.coface;
  }
};

/// Complete list of free faces, sorted by (cell id, kind, coface id).
inline std::vector<FreeFace> free_faces(const Complex2& x) {
  std::vector<FreeFace> out;

  std::map<VertexId, int> corner_count;
  for (const auto& f : x.faces())
    for (int i = 0; i < f.side_count(); ++i)
      corner_count[x.head_of(f.boundary[i])]++;

  for (const auto& v : x.vertices()) {
    if (corner_count.count(v)) continue;
    const auto incident = incident_edges(x, v);
    if (incident.size() != 1) continue;
    const Edge& e = x.edge(incident.front());
    if (e.is_loop()) continue;
    out.push_back({FreeFaceKind::kVertexInEdge, v, e.id});
  }

  for (const auto& e : x.edges()) {
    if (adjacency_census(x, e.id) != 1) continue;
    for (const auto& f : x.faces())
      for (const auto& d : f.boundary)
        if (d.edge == e.id)
          out.push_back({FreeFaceKind::kEdgeInFace, e.id, f.id});
  }

  std::sort(out.begin(), out.end(), [](const FreeFace& a, const FreeFace& b) {
    return std::tie(a.cell, a.kind, a.coface) <
           std::tie(b.cell, b.kind, b.coface);
  });
  return out;
}

/// Removes the free cell and its coface; surviving corner angles are
/// unchanged. Throws if ff is not a free face of this complex.
inline Complex2 elementary_collapse(const Complex2& x, const FreeFace& ff) {
  const auto current = free_faces(x);
  if (std::find(current.begin(), current.end(), ff) == current.end())
    throw Error("stale free face: (" + std::string(free_face_kind_name(ff.kind)) +
                " " + ff.cell + ", " + ff.coface + ") is not free here");
  if (ff.kind == FreeFaceKind::kVertexInEdge)
    return x.without_cells({ff.cell}, {ff.coface}, {});
  return x.without_cells({}, {ff.cell}, {ff.coface});
}

enum class TerminalClass { kPoint, kCycle, kGraph, kStuck2Complex };

inline const char* terminal_class_name(TerminalClass t) {
  switch (t) {
    case TerminalClass::kPoint:
      return "point";
    case TerminalClass::kCycle:
      return "cycle";
    case TerminalClass::kGraph:
      return "graph";
    default:
      return "stuck-2-complex";
  }
}

inline TerminalClass classify_terminal(const Complex2& x) {
  if (!x.faces().empty()) return TerminalClass::kStuck2Complex;
  if (x.vertices().size() == 1 && x.edges().empty()) return TerminalClass::kPoint;
  if (x.edges().empty()) return TerminalClass::kGraph;
  std::map<VertexId, int> degree;
  for (const auto& e : x.edges()) {
    degree[e.tail]++;
    degree[e.head]++;
  }
  for (const auto& v : x.vertices())
    if (degree[v] != 2) return TerminalClass::kGraph;
  return TerminalClass::kCycle;
}

struct CollapseTrace {
  std::vector<FreeFace> steps;
  Complex2 terminal;
  TerminalClass terminal_class = TerminalClass::kPoint;
};

/// Greedily applies the first free face (in the sorted order) until none
/// remain, then classifies the terminal complex.
inline CollapseTrace collapse_all(const Complex2& x) {
  CollapseTrace trace;
  Complex2 current = x;
  for (;;) {
    const auto ffs = free_faces(current);
    if (ffs.empty()) break;
    trace.steps.push_back(ffs.front());
    current = elementary_collapse(current, ffs.front());
  }
  trace.terminal_class = classify_terminal(current);
  trace.terminal = std::move(current);
  return trace;
}

enum class Decision { kYes, kNo, kNotApplicable };

inline const char* decision_name(Decision d) {
  switch (d) {
    case Decision::kYes:
      return "yes";
    case Decision::kNo:
      return "no";
    default:
      return "not-applicable";
  }
}

/// Within the weight-test-passing class, collapsibility to a point decides
/// simple connectivity. Outside the class the procedure does not apply.
inline Decision simply_connected_decision(const Complex2& x) {
  if (classify(x).classification == CurvatureClass::kFails)
    return Decision::kNotApplicable;
  return collapse_all(x).terminal_class == TerminalClass::kPoint
             ? Decision::kYes
             : Decision::kNo;
}

/// For conformally negatively curved complexes, collapsing to a cycle
/// decides whether the fundamental group is infinite cyclic.
inline Decision pi1_is_z_decision(const Complex2& x) {
  if (classify(x).classification != CurvatureClass::kNegative)
    return Decision::kNotApplicable;
  return collapse_all(x).terminal_class == TerminalClass::kCycle
             ? Decision::kYes
             : Decision::kNo;
}

}  // namespace a2c
