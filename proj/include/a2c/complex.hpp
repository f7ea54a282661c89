// Finite combinatorial 2-complexes with per-corner angles, validation,
// Euler characteristic, and the edge/face adjacency census.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "a2c/rational.hpp"

namespace a2c {

using VertexId = std::string;
using EdgeId = std::string;
using FaceId = std::string;

enum class EdgeEnd { kTail, kHead };

inline const char* edge_end_name(EdgeEnd e) {
  return e == EdgeEnd::kTail ? "tail" : "head";
}

/// An oriented traversal of an edge inside a face boundary word.
struct DirectedEdge {
  EdgeId edge;
  bool forward = true;

  bool operator==(const DirectedEdge& o) const {
    return edge == o.edge && forward == o.forward;
  }
};

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;

  bool is_loop() const { return tail == head; }
};

/// A 2-cell, attached along a cyclic word of directed edges. Corner i sits
/// between boundary[i] and boundary[i+1] (cyclically), at their shared
/// vertex, and carries corner_angles[i].
struct Face {
  FaceId id;
  std::vector<DirectedEdge> boundary;
  std::vector<Angle> corner_angles;

  int side_count() const { return static_cast<int>(boundary.size()); }
};

/// Immutable finite combinatorial 2-complex. Construction indexes the cells
/// but enforces nothing; validate() reports every invariant violation as
/// data. Operations with a "valid complex" precondition may assume a clean
/// validation report.
class Complex2 {
 public:
  Complex2() = default;
  Complex2(std::vector<VertexId> vertices, std::vector<Edge> edges,
           std::vector<Face> faces, bool is_disk_diagram = false,
           std::string source = {})
      : vertices_(std::move(vertices)),
        edges_(std::move(edges)),
        faces_(std::move(faces)),
        is_disk_diagram_(is_disk_diagram),
        source_(std::move(source)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      vertex_index_.emplace(vertices_[i], i);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      edge_index_.emplace(edges_[i].id, i);
    for (std::size_t i = 0; i < faces_.size(); ++i)
      face_index_.emplace(faces_[i].id, i);
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  bool is_disk_diagram() const { return is_disk_diagram_; }
  const std::string& source() const { return source_; }

  bool has_vertex(const VertexId& v) const { return vertex_index_.count(v); }
  bool has_edge(const EdgeId& e) const { return edge_index_.count(e); }
  bool has_face(const FaceId& f) const { return face_index_.count(f); }

  const Edge* find_edge(const EdgeId& id) const {
    auto it = edge_index_.find(id);
    return it == edge_index_.end() ? nullptr : &edges_[it->second];
  }
  const Face* find_face(const FaceId& id) const {
    auto it = face_index_.find(id);
    return it == face_index_.end() ? nullptr : &faces_[it->second];
  }

  const Edge& edge(const EdgeId& id) const {
    const Edge* e = find_edge(id);
    if (!e) throw Error("unknown edge '" + id + "'");
    return *e;
  }
  const Face& face(const FaceId& id) const {
    const Face* f = find_face(id);
    if (!f) throw Error("unknown face '" + id + "'");
    return *f;
  }
  void require_vertex(const VertexId& v) const {
    if (!has_vertex(v)) throw Error("unknown vertex '" + v + "'");
  }

  VertexId tail_of(const DirectedEdge& d) const {
    const Edge& e = edge(d.edge);
    return d.forward ? e.tail : e.head;
  }
  VertexId head_of(const DirectedEdge& d) const {
    const Edge& e = edge(d.edge);
    return d.forward ? e.head : e.tail;
  }

  /// End of the underlying edge at the vertex a directed edge arrives at.
  static EdgeEnd arrival_end(const DirectedEdge& d) {
    return d.forward ? EdgeEnd::kHead : EdgeEnd::kTail;
  }
  /// End of the underlying edge at the vertex a directed edge departs from.
  static EdgeEnd departure_end(const DirectedEdge& d) {
    return d.forward ? EdgeEnd::kTail : EdgeEnd::kHead;
  }

  /// Complex with the given cells removed; all other data preserved.
  Complex2 without_cells(const std::vector<VertexId>& drop_vertices,
                         const std::vector<EdgeId>& drop_edges,
                         const std::vector<FaceId>& drop_faces) const {
    std::unordered_set<std::string> dv(drop_vertices.begin(),
                                       drop_vertices.end());
    std::unordered_set<std::string> de(drop_edges.begin(), drop_edges.end());
    std::unordered_set<std::string> df(drop_faces.begin(), drop_faces.end());
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    std::vector<Face> fs;
    for (const auto& v : vertices_)
      if (!dv.count(v)) vs.push_back(v);
    for (const auto& e : edges_)
      if (!de.count(e.id)) es.push_back(e);
    for (const auto& f : faces_)
      if (!df.count(f.id)) fs.push_back(f);
    return Complex2(std::move(vs), std::move(es), std::move(fs),
                    is_disk_diagram_, source_);
  }

  std::size_t cell_count() const {
    return vertices_.size() + edges_.size() + faces_.size();
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  bool is_disk_diagram_ = false;
  std::string source_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::unordered_map<std::string, std::size_t> face_index_;
};

struct Violation {
  std::string rule;
  std::string message;
  std::vector<std::string> cells;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string rule, std::string message,
           std::vector<std::string> cells = {}) {
    ok = false;
    violations.push_back({std::move(rule), std::move(message), std::move(cells)});
  }
};

/// Checks every Complex2 invariant plus connectivity; failures are data,
/// not exceptions, and all of them are enumerated.
inline ValidationReport validate(const Complex2& x) {
  ValidationReport report;

  const auto check_dup = [&](const std::vector<std::string>& ids,
                             const char* sort) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
      if (!seen.insert(id).second)
        report.add("duplicate-id",
                   std::string(sort) + " id '" + id + "' declared twice", {id});
    }
  };
  check_dup(x.vertices(), "vertex");
  {
    std::vector<std::string> ids;
    for (const auto& e : x.edges()) ids.push_back(e.id);
    check_dup(ids, "edge");
  }
  {
    std::vector<std::string> ids;
    for (const auto& f : x.faces()) ids.push_back(f.id);
    check_dup(ids, "face");
  }

  for (const auto& e : x.edges()) {
    if (!x.has_vertex(e.tail))
      report.add("unknown-vertex-ref",
                 "edge '" + e.id + "' references unknown tail '" + e.tail + "'",
                 {e.id});
    if (!x.has_vertex(e.head))
      report.add("unknown-vertex-ref",
                 "edge '" + e.id + "' references unknown head '" + e.head + "'",
                 {e.id});
  }

  for (const auto& f : x.faces()) {
    bool refs_ok = true;
    for (const auto& d : f.boundary) {
      if (!x.has_edge(d.edge)) {
        report.add("unknown-edge-ref",
                   "face '" + f.id + "' references unknown edge '" + d.edge + "'",
                   {f.id, d.edge});
        refs_ok = false;
      }
    }
    const int n = f.side_count();
    if (n == 0) {
      report.add("empty-boundary", "face '" + f.id + "' has no boundary edges",
                 {f.id});
      continue;
    }
    if (refs_ok) {
      for (int i = 0; i < n; ++i) {
        const auto& d = f.boundary[i];
        const auto& dn = f.boundary[(i + 1) % n];
        if (x.head_of(d) != x.tail_of(dn))
          report.add("boundary-not-consistent",
                     "face '" + f.id + "': head of step " + std::to_string(i) +
                         " is '" + x.head_of(d) + "' but step " +
                         std::to_string((i + 1) % n) + " starts at '" +
                         x.tail_of(dn) + "'",
                     {f.id});
      }
    }
    if (static_cast<int>(f.corner_angles.size()) != n) {
      report.add("angle-count-mismatch",
                 "face '" + f.id + "' has " +
                     std::to_string(f.corner_angles.size()) + " angles for " +
                     std::to_string(n) + " boundary edges",
                 {f.id});
      continue;
    }
    Angle sum = Angle::zero();
    bool positive = true;
    for (const auto& a : f.corner_angles) {
      if (!a.is_positive()) positive = false;
      sum += a;
    }
    if (!positive)
      report.add("non-positive-angle",
                 "face '" + f.id + "' has a non-positive corner angle", {f.id});
    const Angle target = Angle::of(n - 2);
    if (sum != target)
      report.add("angle-sum",
                 "face '" + f.id + "' corner angles sum to " + sum.str() +
                     "*pi, expected " + target.str() + "*pi",
                 {f.id});
  }

  // Connectivity over vertices and edges (faces attach along edges, so the
  // 1-skeleton decides it).
  if (x.vertices().empty()) {
    report.add("empty-complex", "complex has no vertices");
  } else {
    std::unordered_map<std::string, std::vector<std::string>> adj;
    for (const auto& e : x.edges()) {
      if (x.has_vertex(e.tail) && x.has_vertex(e.head)) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
      }
    }
    std::unordered_set<std::string> seen;
    std::vector<std::string> stack{x.vertices().front()};
    seen.insert(stack.back());
    while (!stack.empty()) {
      const std::string v = stack.back();
      stack.pop_back();
      for (const auto& w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != x.vertices().size()) {
      std::vector<std::string> missing;
      for (const auto& v : x.vertices())
        if (!seen.count(v)) missing.push_back(v);
      report.add("not-connected",
                 "complex is not connected (" + std::to_string(missing.size()) +
                     " vertices unreachable from '" + x.vertices().front() + "')",
                 missing);
    }
  }

  return report;
}

inline int euler_characteristic(const Complex2& x) {
  return static_cast<int>(x.vertices().size()) -
         static_cast<int>(x.edges().size()) +
         static_cast<int>(x.faces().size());
}

/// Number of occurrences of edge e, either orientation, across all face
/// boundary words (a face traversing e twice counts twice).
inline int adjacency_census(const Complex2& x, const EdgeId& e) {
  x.edge(e);  // throws on unknown id
  int count = 0;
  for (const auto& f : x.faces())
    for (const auto& d : f.boundary)
      if (d.edge == e) ++count;
  return count;
}

/// Corner located at a vertex: face, corner index, and the two directed
/// edges it sits between (boundary[index] arrives, boundary[index+1] leaves).
struct CornerRef {
  FaceId face;
  int index = 0;
};

/// All corners located at vertex v, in (face declaration order, index) order.
inline std::vector<CornerRef> corners_at(const Complex2& x, const VertexId& v) {
  x.require_vertex(v);
  std::vector<CornerRef> out;
  for (const auto& f : x.faces()) {
    const int n = f.side_count();
    for (int i = 0; i < n; ++i)
      if (x.head_of(f.boundary[i]) == v) out.push_back({f.id, i});
  }
  return out;
}

/// Edges incident to v, with multiplicity one per edge (a loop at v counts
/// once here; its two ends are distinguished by callers that need them).
inline std::vector<EdgeId> incident_edges(const Complex2& x, const VertexId& v) {
  x.require_vertex(v);
  std::vector<EdgeId> out;
  for (const auto& e : x.edges())
    if (e.tail == v || e.head == v) out.push_back(e.id);
  return out;
}

}  // namespace a2c
