// Vertex links and edge-interior links as weighted metric multigraphs,
// with exact shortest-path distance, weighted girth, and eccentricity over
// all metric points (nodes and arc interiors).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "a2c/complex.hpp"
#include "a2c/rational.hpp"

namespace a2c {

/// One weighted arc of a link. node_a/node_b index LinkGraph::node_names;
/// provenance names the corner or face-adjacency the arc came from.
struct LinkArc {
  int node_a = 0;
  int node_b = 0;
  Angle length;
  std::string provenance;
};

struct LinkGraph {
  std::vector<std::string> node_names;
  std::vector<LinkArc> arcs;

  int node_count() const { return static_cast<int>(node_names.size()); }
  int arc_count() const { return static_cast<int>(arcs.size()); }
  int euler_characteristic() const { return node_count() - arc_count(); }

  int find_node(const std::string& name) const {
    for (int i = 0; i < node_count(); ++i)
      if (node_names[i] == name) return i;
    return -1;
  }
  int find_arc_by_provenance(const std::string& prov) const {
    for (int i = 0; i < arc_count(); ++i)
      if (arcs[i].provenance == prov) return i;
    return -1;
  }
};

/// A point of the metric graph: either a node, or an interior point of an
/// arc at a given offset from the arc's node_a end.
struct MetricPoint {
  int node = -1;
  int arc = -1;
  Angle offset;

  static MetricPoint at_node(int n) {
    MetricPoint p;
    p.node = n;
    return p;
  }
  static MetricPoint on_arc(int a, Angle off) {
    MetricPoint p;
    p.arc = a;
    p.offset = std::move(off);
    return p;
  }
  bool is_node() const { return node >= 0; }

  bool operator==(const MetricPoint& o) const {
    return node == o.node && arc == o.arc && offset == o.offset;
  }
};

inline void require_point_in(const LinkGraph& g, const MetricPoint& p) {
  if (p.is_node()) {
    if (p.node >= g.node_count()) throw Error("metric point node out of range");
    return;
  }
  if (p.arc < 0 || p.arc >= g.arc_count())
    throw Error("metric point arc out of range");
  const auto& a = g.arcs[p.arc];
  if (!(p.offset > Angle::zero()) || !(p.offset < a.length))
    throw Error("metric point offset not strictly interior to its arc");
}

inline std::string link_node_name(const EdgeId& e, EdgeEnd end) {
  return e + "." + edge_end_name(end);
}

/// Faces in lexicographic id order; the canonical scan order for link arcs
/// and adjacency enumeration.
inline std::vector<const Face*> faces_lex_order(const Complex2& x) {
  std::vector<const Face*> out;
  for (const auto& f : x.faces()) out.push_back(&f);
  std::sort(out.begin(), out.end(),
            [](const Face* a, const Face* b) { return a->id < b->id; });
  return out;
}

/// One face adjacency of an edge: the face and the boundary position that
/// traverses it. Ordered by (face id, position).
struct EdgeAdjacency {
  FaceId face;
  int pos = 0;

  bool operator==(const EdgeAdjacency& o) const {
    return face == o.face && pos == o.pos;
  }
};

/// All adjacencies of e in canonical order; index i here names the same
/// adjacency as arc i of link_of_edge_interior(x, e).
inline std::vector<EdgeAdjacency> edge_adjacencies(const Complex2& x,
                                                   const EdgeId& e) {
  x.edge(e);
  std::vector<EdgeAdjacency> out;
  for (const Face* f : faces_lex_order(x))
    for (int i = 0; i < f->side_count(); ++i)
      if (f->boundary[i].edge == e) out.push_back({f->id, i});
  return out;
}

/// Link of a vertex: one node per incident edge-end (a loop contributes
/// both ends), one arc per corner at v with length equal to the corner
/// angle, joining the arrival end of boundary[i] to the departure end of
/// boundary[i+1]. Nodes are ordered by (edge id, tail before head); arcs by
/// (face declaration order, corner index).
inline LinkGraph build_link(const Complex2& x, const VertexId& v) {
  x.require_vertex(v);
  LinkGraph g;
  std::map<std::pair<std::string, int>, int> node_index;
  std::vector<std::pair<std::string, int>> keys;
  for (const auto& e : x.edges()) {
    if (e.tail == v) keys.emplace_back(e.id, 0);
    if (e.head == v) keys.emplace_back(e.id, 1);
  }
  std::sort(keys.begin(), keys.end());
  for (const auto& k : keys) {
    node_index[k] = g.node_count();
    g.node_names.push_back(
        link_node_name(k.first, k.second == 0 ? EdgeEnd::kTail : EdgeEnd::kHead));
  }
  const auto node_of = [&](const EdgeId& e, EdgeEnd end) {
    auto it = node_index.find({e, end == EdgeEnd::kTail ? 0 : 1});
    if (it == node_index.end())
      throw Error("corner at '" + v + "' references a non-incident edge end");
    return it->second;
  };
  for (const Face* f : faces_lex_order(x)) {
    const int n = f->side_count();
    for (int i = 0; i < n; ++i) {
      if (x.head_of(f->boundary[i]) != v) continue;
      const auto& din = f->boundary[i];
      const auto& dout = f->boundary[(i + 1) % n];
      LinkArc arc;
      arc.node_a = node_of(din.edge, Complex2::arrival_end(din));
      arc.node_b = node_of(dout.edge, Complex2::departure_end(dout));
      arc.length = f->corner_angles[i];
      arc.provenance = f->id + "#" + std::to_string(i);
      g.arcs.push_back(std::move(arc));
    }
  }
  return g;
}

/// Link of a point interior to edge e: two nodes x (toward the tail) and y
/// (toward the head), one arc of length pi per face adjacency of e, in
/// (face declaration order, boundary position) order.
inline LinkGraph link_of_edge_interior(const Complex2& x, const EdgeId& e) {
  LinkGraph g;
  g.node_names = {"x", "y"};
  for (const auto& adj : edge_adjacencies(x, e)) {
    LinkArc arc;
    arc.node_a = 0;
    arc.node_b = 1;
    arc.length = Angle::pi();
    arc.provenance = adj.face + "#" + std::to_string(adj.pos);
    g.arcs.push_back(std::move(arc));
  }
  return g;
}

namespace detail {

/// Arc of a spliced graph, remembering which original arc it came from and
/// the offset of its node_a end within that arc.
struct ArcOrigin {
  int orig_arc = -1;
  Angle base;
};

struct Spliced {
  LinkGraph g;
  std::vector<ArcOrigin> origins;
  std::vector<int> point_nodes;  // one per requested point, in order
};

/// Splits arcs at the given interior points (node points pass through).
/// Coincident interior points collapse to one node.
inline Spliced splice_points(const LinkGraph& g,
                             const std::vector<MetricPoint>& points) {
  Spliced out;
  out.g.node_names = g.node_names;
  out.point_nodes.assign(points.size(), -1);

  // Interior cut positions per arc, sorted by offset.
  std::map<int, std::vector<std::pair<Angle, int>>> cuts;  // arc -> (offset, point idx)
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_point_in(g, points[i]);
    if (points[i].is_node())
      out.point_nodes[i] = points[i].node;
    else
      cuts[points[i].arc].emplace_back(points[i].offset, static_cast<int>(i));
  }
  for (auto& [arc, list] : cuts)
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

  for (int ai = 0; ai < g.arc_count(); ++ai) {
    const auto& arc = g.arcs[ai];
    auto it = cuts.find(ai);
    if (it == cuts.end()) {
      out.g.arcs.push_back(arc);
      out.origins.push_back({ai, Angle::zero()});
      continue;
    }
    int prev_node = arc.node_a;
    Angle prev_off = Angle::zero();
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      const auto& [off, pidx] = it->second[k];
      int cut_node;
      if (k > 0 && off == it->second[k - 1].first) {
        cut_node = out.point_nodes[it->second[k - 1].second];
      } else {
        cut_node = out.g.node_count();
        out.g.node_names.push_back("@" + std::to_string(ai) + ":" + off.str());
        LinkArc piece;
        piece.node_a = prev_node;
        piece.node_b = cut_node;
        piece.length = off - prev_off;
        piece.provenance = arc.provenance;
        out.g.arcs.push_back(std::move(piece));
        out.origins.push_back({ai, prev_off});
        prev_node = cut_node;
        prev_off = off;
      }
      out.point_nodes[pidx] = cut_node;
    }
    LinkArc piece;
    piece.node_a = prev_node;
    piece.node_b = arc.node_b;
    piece.length = arc.length - prev_off;
    piece.provenance = arc.provenance;
    out.g.arcs.push_back(std::move(piece));
    out.origins.push_back({ai, prev_off});
  }
  return out;
}

struct ShortestPaths {
  std::vector<std::optional<Angle>> dist;
  std::vector<int> parent_arc;  // arc used to reach each node, -1 at source
};

/// Exact Dijkstra over rational arc lengths. skip_arc is excluded. Ties are
/// broken deterministically: arcs are relaxed in index order with strict
/// improvement, and the heap orders equal distances by node index.
inline ShortestPaths dijkstra(const LinkGraph& g, int src, int skip_arc = -1) {
  const int n = g.node_count();
  ShortestPaths sp;
  sp.dist.assign(n, std::nullopt);
  sp.parent_arc.assign(n, -1);
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < g.arc_count(); ++i) {
    if (i == skip_arc) continue;
    incident[g.arcs[i].node_a].push_back(i);
    if (g.arcs[i].node_b != g.arcs[i].node_a)
      incident[g.arcs[i].node_b].push_back(i);
  }
  using Entry = std::pair<Angle, int>;
  const auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  sp.dist[src] = Angle::zero();
  heap.push({Angle::zero(), src});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (!sp.dist[u] || *sp.dist[u] != d) continue;
    for (int ai : incident[u]) {
      const auto& arc = g.arcs[ai];
      const int w = arc.node_a == u ? arc.node_b : arc.node_a;
      const Angle nd = d + arc.length;
      if (!sp.dist[w] || nd < *sp.dist[w]) {
        sp.dist[w] = nd;
        sp.parent_arc[w] = ai;
        heap.push({nd, w});
      }
    }
  }
  return sp;
}

}  // namespace detail

/// Exact shortest-path distance between two metric points; nullopt when the
/// points lie in different components.
inline std::optional<Angle> distance(const LinkGraph& g, const MetricPoint& p,
                                     const MetricPoint& q) {
  auto spl = detail::splice_points(g, {p, q});
  auto sp = detail::dijkstra(spl.g, spl.point_nodes[0]);
  return sp.dist[spl.point_nodes[1]];
}

struct CycleWitness {
  Angle length;
  std::vector<int> arcs;  // arc indices of the original graph
};

/// Weighted girth over simple cycles (loops and parallel-arc bigons count).
/// For each arc (u,v,w): the candidate is w for a loop, else w plus the
/// shortest u-v path avoiding that arc; the minimum over arcs is exact.
/// nullopt iff the graph is a forest.
inline std::optional<CycleWitness> shortest_cycle(const LinkGraph& g) {
  std::optional<CycleWitness> best;
  for (int i = 0; i < g.arc_count(); ++i) {
    const auto& arc = g.arcs[i];
    std::optional<CycleWitness> cand;
    if (arc.node_a == arc.node_b) {
      cand = CycleWitness{arc.length, {i}};
    } else {
      auto sp = detail::dijkstra(g, arc.node_a, i);
      if (sp.dist[arc.node_b]) {
        CycleWitness w;
        w.length = *sp.dist[arc.node_b] + arc.length;
        int at = arc.node_b;
        while (at != arc.node_a) {
          const int pa = sp.parent_arc[at];
          w.arcs.push_back(pa);
          at = g.arcs[pa].node_a == at ? g.arcs[pa].node_b : g.arcs[pa].node_a;
        }
        std::reverse(w.arcs.begin(), w.arcs.end());
        w.arcs.push_back(i);
        cand = std::move(w);
      }
    }
    if (cand && (!best || cand->length < best->length)) best = std::move(cand);
  }
  return best;
}

struct Eccentricity {
  bool finite = true;
  Angle value;
  MetricPoint witness;  // farthest point, in original-graph coordinates
};

/// Supremum of distance(p, q) over all metric points q of g, including arc
/// interiors; infinite iff g is disconnected. The attaining witness is
/// returned; ties prefer nodes (in index order) over arc-interior maxima
/// (in arc order).
inline Eccentricity eccentricity(const LinkGraph& g, const MetricPoint& p) {
  auto spl = detail::splice_points(g, {p});
  const int src = spl.point_nodes[0];
  auto sp = detail::dijkstra(spl.g, src);

  Eccentricity ecc;
  ecc.value = Angle::zero();
  ecc.witness = p;
  for (int u = 0; u < spl.g.node_count(); ++u) {
    if (!sp.dist[u]) {
      ecc.finite = false;
      return ecc;
    }
    if (*sp.dist[u] > ecc.value) {
      ecc.value = *sp.dist[u];
      ecc.witness = u < g.node_count() ? MetricPoint::at_node(u) : p;
    }
  }
  for (int ai = 0; ai < spl.g.arc_count(); ++ai) {
    const auto& arc = spl.g.arcs[ai];
    const Angle da = *sp.dist[arc.node_a];
    const Angle db = *sp.dist[arc.node_b];
    // max over t of min(da + t, db + (w - t)), attained at the crossover.
    const Angle peak = (da + db + arc.length) / 2;
    const Angle t_star = (db + arc.length - da) / 2;
    if (!(t_star > Angle::zero()) || !(t_star < arc.length)) continue;
    if (peak > ecc.value) {
      ecc.value = peak;
      const auto& origin = spl.origins[ai];
      ecc.witness = MetricPoint::on_arc(origin.orig_arc, origin.base + t_star);
    }
  }
  return ecc;
}

struct StraightRegions {
  struct Span {
    int arc = -1;
    Angle lo, hi;  // offsets from the arc's node_a end, inclusive
  };
  std::vector<int> nodes;
  std::vector<Span> spans;

  bool empty() const { return nodes.empty() && spans.empty(); }
};

/// All metric points of g at distance >= threshold from p, as node indices
/// plus closed sub-intervals of arcs. Points in other components count
/// (their distance is infinite).
inline StraightRegions points_at_distance_at_least(const LinkGraph& g,
                                                   const MetricPoint& p,
                                                   const Angle& threshold) {
  auto spl = detail::splice_points(g, {p});
  const int src = spl.point_nodes[0];
  auto sp = detail::dijkstra(spl.g, src);

  StraightRegions out;
  for (int u = 0; u < g.node_count(); ++u)
    if (!sp.dist[u] || *sp.dist[u] >= threshold) out.nodes.push_back(u);

  std::vector<StraightRegions::Span> raw;
  for (int ai = 0; ai < spl.g.arc_count(); ++ai) {
    const auto& arc = spl.g.arcs[ai];
    const auto& origin = spl.origins[ai];
    if (!sp.dist[arc.node_a] || !sp.dist[arc.node_b]) {
      // Unreachable piece: every point qualifies.
      raw.push_back({origin.orig_arc, origin.base, origin.base + arc.length});
      continue;
    }
    const Angle da = *sp.dist[arc.node_a];
    const Angle db = *sp.dist[arc.node_b];
    Angle lo = threshold - da;                  // t >= threshold - da
    Angle hi = db + arc.length - threshold;     // t <= db + w - threshold
    if (lo < Angle::zero()) lo = Angle::zero();
    if (hi > arc.length) hi = arc.length;
    if (lo > hi) continue;
    raw.push_back({origin.orig_arc, origin.base + lo, origin.base + hi});
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.arc != b.arc) return a.arc < b.arc;
    return a.lo < b.lo;
  });
  for (const auto& span : raw) {
    if (!out.spans.empty() && out.spans.back().arc == span.arc &&
        out.spans.back().hi >= span.lo) {
      if (span.hi > out.spans.back().hi) out.spans.back().hi = span.hi;
    } else {
      out.spans.push_back(span);
    }
  }
  // Zero-length spans sitting on an arc endpoint duplicate a node; interior
  // single-point spans are kept (they are genuine isolated far points).
  out.spans.erase(std::remove_if(out.spans.begin(), out.spans.end(),
                                 [&](const StraightRegions::Span& s) {
                                   return s.lo == s.hi &&
                                          (s.lo == Angle::zero() ||
                                           s.hi == g.arcs[s.arc].length);
                                 }),
                  out.spans.end());
  return out;
}

/// DOT rendering for inspection.
inline std::string link_to_dot(const LinkGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (const auto& n : g.node_names) out << "  \"" << n << "\";\n";
  for (const auto& a : g.arcs)
    out << "  \"" << g.node_names[a.node_a] << "\" -- \""
        << g.node_names[a.node_b] << "\" [label=\"" << a.length.str()
        << " (" << a.provenance << ")\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace a2c
