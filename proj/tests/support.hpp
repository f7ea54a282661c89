// Shared fixtures and independent oracles for the test suites. Everything
// here stays independent of the implementation paths it checks.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "a2c/a2c.hpp"

namespace testsupport {

using namespace a2c;

/// Independent weighted-girth oracle: exhaustive enumeration of simple
/// cycles (loops, bigons, longer cycles) by arc-tracking DFS.
inline std::optional<Angle> brute_force_girth(const LinkGraph& g) {
  std::optional<Angle> best;
  const auto update = [&](const Angle& a) {
    if (!best || a < *best) best = a;
  };
  for (const auto& arc : g.arcs)
    if (arc.node_a == arc.node_b) update(arc.length);

  const int n = g.node_count();
  std::vector<char> visited(n, 0);
  std::vector<char> used(g.arc_count(), 0);
  std::function<void(int, int, Angle, int)> dfs = [&](int s, int u, Angle len,
                                                      int arcs_used) {
    for (int ai = 0; ai < g.arc_count(); ++ai) {
      const auto& arc = g.arcs[ai];
      if (used[ai] || arc.node_a == arc.node_b) continue;
      int v;
      if (arc.node_a == u)
        v = arc.node_b;
      else if (arc.node_b == u)
        v = arc.node_a;
      else
        continue;
      if (v == s) {
        if (arcs_used + 1 >= 2) update(len + arc.length);
        continue;
      }
      if (visited[v]) continue;
      visited[v] = 1;
      used[ai] = 1;
      dfs(s, v, len + arc.length, arcs_used + 1);
      visited[v] = 0;
      used[ai] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    visited[s] = 1;
    dfs(s, s, Angle::zero(), 0);
  }
  return best;
}

/// Two triangles glued along all three edges; the links contain pi-length
/// bigons, so the weight test fails.
inline Complex2 triangle_pillow() {
  std::vector<VertexId> vs{"u", "v", "w"};
  std::vector<Edge> es{{"e1", "u", "v"}, {"e2", "v", "w"}, {"e3", "w", "u"}};
  std::vector<Face> fs;
  for (const char* id : {"f1", "f2"}) {
    Face f;
    f.id = id;
    f.boundary = {{"e1", true}, {"e2", true}, {"e3", true}};
    f.corner_angles.assign(3, Angle::of(1, 3));
    fs.push_back(std::move(f));
  }
  return Complex2(std::move(vs), std::move(es), std::move(fs), false, "pillow");
}

/// A loop edge swallowed by a triangle face: boundary e+ c+ c- with e a
/// loop. The loop has census 1, so (e, f) is an edge-in-face free face.
inline Complex2 cigar() {
  std::vector<VertexId> vs{"v", "w"};
  std::vector<Edge> es{{"e", "v", "v"}, {"c", "v", "w"}};
  Face f;
  f.id = "f";
  f.boundary = {{"e", true}, {"c", true}, {"c", false}};
  f.corner_angles = {Angle::of(1, 4), Angle::of(1, 2), Angle::of(1, 4)};
  return Complex2(std::move(vs), std::move(es), {std::move(f)}, false, "cigar");
}

/// Path graph with k edges (no faces).
inline Complex2 path_graph(int k) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 0; i <= k; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < k; ++i)
    es.push_back({"e" + std::to_string(i), vs[i], vs[i + 1]});
  return Complex2(std::move(vs), std::move(es), {}, false, "path");
}

/// Cycle graph with k edges (no faces).
inline Complex2 cycle_graph(int k) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < k; ++i)
    es.push_back({"e" + std::to_string(i), vs[i], vs[(i + 1) % k]});
  return Complex2(std::move(vs), std::move(es), {}, false, "cycle");
}

/// One-vertex genus-2 surface complex (octagon identification), a
/// negatively curved complex without free faces.
inline Complex2 genus2() {
  return builders::presentation("a,b,c,d", {"abABcdCD"});
}

/// Flat Klein bottle (a b a b^-1), nonpositively curved, census 2.
inline Complex2 klein() { return builders::presentation("a,b", {"abaB"}); }

inline int total_boundary_length(const Complex2& x) {
  int total = 0;
  for (const auto& f : x.faces()) total += f.side_count();
  return total;
}

}  // namespace testsupport
