// Algebraic invariants independent of the collapse machinery: first
// homology via Smith normal form, fundamental-group presentations from a
// spanning tree, and budgeted Tietze simplification.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a2c/complex.hpp"
#include "a2c/smith.hpp"

namespace a2c {

struct AbelianInvariants {
  int betti = 0;
  std::vector<BigInt> torsion;  // each > 1, each dividing the next

  bool operator==(const AbelianInvariants& o) const {
    return betti == o.betti && torsion == o.torsion;
  }
  bool is_trivial() const { return betti == 0 && torsion.empty(); }
  bool is_z() const { return betti == 1 && torsion.empty(); }
};

/// H1 as invariant factors of ker d1 / im d2, where d2 counts signed edge
/// traversals of boundary words and d1 is head minus tail.
inline AbelianInvariants h1(const Complex2& x) {
  std::map<std::string, int> vindex, eindex;
  for (std::size_t i = 0; i < x.vertices().size(); ++i)
    vindex[x.vertices()[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < x.edges().size(); ++i)
    eindex[x.edges()[i].id] = static_cast<int>(i);

  const std::size_t nv = x.vertices().size();
  const std::size_t ne = x.edges().size();
  const std::size_t nf = x.faces().size();

  IntMatrix d1(nv, std::vector<BigInt>(ne, 0));
  for (std::size_t j = 0; j < ne; ++j) {
    const auto& e = x.edges()[j];
    d1[vindex.at(e.head)][j] += 1;
    d1[vindex.at(e.tail)][j] -= 1;
  }
  IntMatrix d2(ne, std::vector<BigInt>(nf, 0));
  for (std::size_t j = 0; j < nf; ++j)
    for (const auto& d : x.faces()[j].boundary)
      d2[eindex.at(d.edge)][j] += d.forward ? 1 : -1;

  const auto snf1 = smith_normal_form(d1);
  const auto snf2 = smith_normal_form(d2);
  AbelianInvariants out;
  out.betti = static_cast<int>(ne) - snf1.rank - snf2.rank;
  for (const auto& d : snf2.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

/// Relator symbols are +/-(generator index + 1).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
};

namespace detail {

inline void free_reduce(std::vector<int>& w) {
  std::vector<int> out;
  for (int s : w) {
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  w = std::move(out);
}

inline void cyclic_reduce(std::vector<int>& w) {
  free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    free_reduce(w);
  }
}

}  // namespace detail

/// Generators are the non-spanning-tree edges (the tree is a lexicographic
/// BFS from the basepoint); relators are the face boundary words with tree
/// edges erased, freely and cyclically reduced.
inline Presentation fundamental_presentation(
    const Complex2& x, std::optional<VertexId> basepoint = std::nullopt) {
  VertexId base;
  if (basepoint) {
    x.require_vertex(*basepoint);
    base = *basepoint;
  } else {
    base = *std::min_element(x.vertices().begin(), x.vertices().end());
  }

  // Lexicographic BFS: edges scanned in sorted id order from each frontier
  // vertex, in sorted vertex order.
  std::vector<Edge> sorted_edges(x.edges().begin(), x.edges().end());
  std::sort(sorted_edges.begin(), sorted_edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::map<VertexId, std::vector<const Edge*>> incident;
  for (const auto& e : sorted_edges) {
    incident[e.tail].push_back(&e);
    if (!e.is_loop()) incident[e.head].push_back(&e);
  }
  std::map<VertexId, bool> visited;
  std::map<EdgeId, bool> in_tree;
  visited[base] = true;
  std::deque<VertexId> frontier{base};
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop_front();
    for (const Edge* e : incident[v]) {
      const VertexId other = e->tail == v ? e->head : e->tail;
      if (visited[other]) continue;
      visited[other] = true;
      in_tree[e->id] = true;
      frontier.push_back(other);
    }
  }

  Presentation p;
  std::map<EdgeId, int> gen_index;
  for (const auto& e : sorted_edges) {
    if (in_tree[e.id]) continue;
    gen_index[e.id] = static_cast<int>(p.generators.size()) + 1;
    p.generators.push_back(e.id);
  }
  for (const auto& f : x.faces()) {
    std::vector<int> word;
    for (const auto& d : f.boundary) {
      auto it = gen_index.find(d.edge);
      if (it == gen_index.end()) continue;
      word.push_back(d.forward ? it->second : -it->second);
    }
    detail::cyclic_reduce(word);
    p.relators.push_back(std::move(word));
  }
  return p;
}

/// Relator-driven generator elimination plus free reduction, at most
/// `budget` eliminations. The group's isomorphism type never changes.
inline Presentation tietze_simplify(Presentation p, int budget) {
  for (int step = 0; step < budget; ++step) {
    for (auto& r : p.relators) detail::cyclic_reduce(r);
    p.relators.erase(
        std::remove_if(p.relators.begin(), p.relators.end(),
                       [](const std::vector<int>& r) { return r.empty(); }),
        p.relators.end());

    // Pick the shortest relator containing some generator exactly once.
    int best_rel = -1, best_gen = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      const auto& r = p.relators[i];
      if (best_rel >= 0 && r.size() >= p.relators[best_rel].size()) continue;
      std::map<int, int> count;
      for (int s : r) count[std::abs(s)]++;
      for (int s : r) {
        if (count[std::abs(s)] == 1) {
          best_rel = static_cast<int>(i);
          best_gen = std::abs(s);
          break;
        }
      }
    }
    if (best_rel < 0) break;

    // r = u g^s v  =>  g^s = u^-1 v^-1, substituted everywhere.
    const std::vector<int> r = p.relators[best_rel];
    std::size_t pos = 0;
    while (std::abs(r[pos]) != best_gen) ++pos;
    const int sign = r[pos] > 0 ? 1 : -1;
    std::vector<int> replacement;  // word equal to g
    {
      std::vector<int> rest;  // v u, the relator with g^s removed, rotated
      for (std::size_t i = pos + 1; i < r.size(); ++i) rest.push_back(r[i]);
      for (std::size_t i = 0; i < pos; ++i) rest.push_back(r[i]);
      // g^s * rest = 1  =>  g^s = rest^-1.
      std::vector<int> inv;
      for (auto it = rest.rbegin(); it != rest.rend(); ++it) inv.push_back(-*it);
      if (sign > 0) {
        replacement = inv;  // g = rest^-1
      } else {
        for (auto it = inv.rbegin(); it != inv.rend(); ++it)
          replacement.push_back(-*it);  // g = rest
      }
    }

    Presentation next;
    std::map<int, int> remap;
    for (std::size_t g = 1; g <= p.generators.size(); ++g) {
      if (static_cast<int>(g) == best_gen) continue;
      remap[static_cast<int>(g)] = static_cast<int>(next.generators.size()) + 1;
      next.generators.push_back(p.generators[g - 1]);
    }
    for (int& s : replacement) s = s > 0 ? remap[s] : -remap[-s];
    const auto substitute = [&](const std::vector<int>& w) {
      std::vector<int> out;
      for (int s : w) {
        if (std::abs(s) == best_gen) {
          if (s > 0)
            for (int t : replacement) out.push_back(t);
          else
            for (auto it = replacement.rbegin(); it != replacement.rend(); ++it)
              out.push_back(-*it);
        } else {
          out.push_back(s > 0 ? remap[s] : -remap[-s]);
        }
      }
      detail::cyclic_reduce(out);
      return out;
    };
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (static_cast<int>(i) == best_rel) continue;
      auto w = substitute(p.relators[i]);
      if (!w.empty()) next.relators.push_back(std::move(w));
    }
    p = std::move(next);
  }
  for (auto& r : p.relators) detail::cyclic_reduce(r);
  p.relators.erase(
      std::remove_if(p.relators.begin(), p.relators.end(),
                     [](const std::vector<int>& r) { return r.empty(); }),
      p.relators.end());
  return p;
}

/// Abelianization invariants of a presentation (independent route used to
/// cross-check h1).
inline AbelianInvariants abelianized(const Presentation& p) {
  const std::size_t ng = p.generators.size();
  const std::size_t nr = p.relators.size();
  IntMatrix m(ng, std::vector<BigInt>(nr, 0));
  for (std::size_t j = 0; j < nr; ++j)
    for (int s : p.relators[j]) m[std::abs(s) - 1][j] += s > 0 ? 1 : -1;
  const auto snf = smith_normal_form(m);
  AbelianInvariants out;
  out.betti = static_cast<int>(ng) - snf.rank;
  for (const auto& d : snf.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

/// Renders a relator using generator names; inverses get a ^-1 suffix.
inline std::string relator_to_string(const Presentation& p,
                                     const std::vector<int>& word) {
  std::string out;
  for (int s : word) {
    if (!out.empty()) out += " ";
    out += p.generators[std::abs(s) - 1];
    if (s < 0) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

}  // namespace a2c
