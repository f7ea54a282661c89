// Seeded generators for the randomized corpora: simply connected disk
// complexes, negatively curved rings, one-vertex census-2 complexes, and
// random weighted multigraphs. All deterministic per seed (mt19937_64).
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "a2c/builders.hpp"
#include "a2c/collapse.hpp"
#include "a2c/complex.hpp"
#include "a2c/link.hpp"
#include "a2c/weight_test.hpp"

namespace a2c {
namespace fuzz {

/// Simply connected polyomino disk from a Young diagram (non-increasing
/// column heights), all angles pi/2. Always passes the weight test:
/// interior lattice vertices see four squares (link a 2*pi cycle), all
/// others see at most three (forest links).
inline Complex2 young_polyomino(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> width_dist(1, 6);
  const int w = width_dist(rng);
  std::vector<int> heights(w);
  int cap = 6;
  for (int i = 0; i < w; ++i) {
    std::uniform_int_distribution<int> h_dist(1, cap);
    heights[i] = h_dist(rng);
    cap = heights[i];
  }

  const auto cell = [&](int i, int j) {
    return i >= 0 && i < w && j >= 0 && j < heights[i];
  };
  const auto vname = [](int i, int j) {
    return "v" + std::to_string(i) + "_" + std::to_string(j);
  };
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  std::vector<Face> fs;
  for (int i = 0; i <= w; ++i)
    for (int j = 0; j <= heights[0]; ++j) {
      const bool used = cell(i, j) || cell(i - 1, j) || cell(i, j - 1) ||
                        cell(i - 1, j - 1);
      if (used) vs.push_back(vname(i, j));
    }
  const auto h_edge = [&](int i, int j) {
    return "h" + std::to_string(i) + "_" + std::to_string(j);
  };
  const auto u_edge = [&](int i, int j) {
    return "u" + std::to_string(i) + "_" + std::to_string(j);
  };
  for (int i = 0; i < w; ++i)
    for (int j = 0; j <= heights[0]; ++j)
      if (cell(i, j) || cell(i, j - 1))
        es.push_back({h_edge(i, j), vname(i, j), vname(i + 1, j)});
  for (int i = 0; i <= w; ++i)
    for (int j = 0; j < heights[0]; ++j)
      if (cell(i, j) || cell(i - 1, j))
        es.push_back({u_edge(i, j), vname(i, j), vname(i, j + 1)});
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < heights[i]; ++j) {
      Face f;
      f.id = "c" + std::to_string(i) + "_" + std::to_string(j);
      f.boundary = {{h_edge(i, j), true},
                    {u_edge(i + 1, j), true},
                    {h_edge(i, j + 1), false},
                    {u_edge(i, j), false}};
      f.corner_angles.assign(4, Angle::of(1, 2));
      fs.push_back(std::move(f));
    }
  return Complex2(std::move(vs), std::move(es), std::move(fs), true,
                  "fuzz:young");
}

/// A simply connected, weight-test-passing disk subdivision: a Young
/// polyomino, an open triangle fan, or a closed fan with k >= 6.
inline Complex2 disk(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<int> k(2, 9);
      return builders::fan_disk(k(rng), "fuzz:fan");
    }
    case 1: {
      std::uniform_int_distribution<int> k(6, 12);
      return builders::closed_fan(k(rng), "fuzz:closed_fan");
    }
    default:
      return young_polyomino(rng);
  }
}

/// Negatively curved ring with H1 = Z: a cylinder whose top and bottom runs
/// are subdivided into 1..3 segments per position (straight-angle corners
/// at the subdivision vertices). All vertex links stay forests.
inline Complex2 ring(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k_dist(3, 8);
  std::uniform_int_distribution<int> run(1, 3);
  const int k = k_dist(rng);
  std::vector<int> top(k), bottom(k);
  for (int i = 0; i < k; ++i) top[i] = run(rng);
  for (int i = 0; i < k; ++i) bottom[i] = run(rng);

  std::vector<VertexId> vs;
  std::vector<Edge> es;
  std::vector<Face> fs;
  const auto id = [](const char* p, int i, int j = -1) {
    return j < 0 ? p + std::to_string(i)
                 : p + std::to_string(i) + "_" + std::to_string(j);
  };
  for (int i = 0; i < k; ++i) {
    vs.push_back(id("u", i));
    for (int j = 1; j < top[i]; ++j) vs.push_back(id("ut", i, j));
    vs.push_back(id("w", i));
    for (int j = 1; j < bottom[i]; ++j) vs.push_back(id("wb", i, j));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < top[i]; ++j) {
      const VertexId from = j == 0 ? id("u", i) : id("ut", i, j);
      const VertexId to =
          j + 1 == top[i] ? id("u", (i + 1) % k) : id("ut", i, j + 1);
      es.push_back({id("t", i, j), from, to});
    }
    for (int j = 0; j < bottom[i]; ++j) {
      const VertexId from = j == 0 ? id("w", i) : id("wb", i, j);
      const VertexId to =
          j + 1 == bottom[i] ? id("w", (i + 1) % k) : id("wb", i, j + 1);
      es.push_back({id("b", i, j), from, to});
    }
    es.push_back({id("s", i), id("u", i), id("w", i)});
  }
  for (int i = 0; i < k; ++i) {
    Face f;
    f.id = id("f", i);
    for (int j = 0; j < top[i]; ++j) f.boundary.push_back({id("t", i, j), true});
    f.boundary.push_back({id("s", (i + 1) % k), true});
    for (int j = bottom[i] - 1; j >= 0; --j)
      f.boundary.push_back({id("b", i, j), false});
    f.boundary.push_back({id("s", i), false});
    // pi/2 at the four side corners, pi at subdivision vertices.
    const int n = f.side_count();
    f.corner_angles.assign(n, Angle::pi());
    for (int c : {top[i] - 1, top[i], n - 2, n - 1})
      f.corner_angles[c] = Angle::of(1, 2);
    fs.push_back(std::move(f));
  }
  return Complex2(std::move(vs), std::move(es), std::move(fs), false,
                  "fuzz:ring");
}

/// One-vertex complex from a random word in which every generator appears
/// exactly twice; only candidates that pass the weight test (and therefore
/// have no free faces and census-2 edges) are returned.
inline std::optional<Complex2> census2_complex(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gens_dist(2, 3);
  const int gens = gens_dist(rng);
  std::string letters;
  for (int g = 0; g < gens; ++g) {
    const char base = static_cast<char>('a' + g);
    std::uniform_int_distribution<int> orient(0, 1);
    letters += base;
    letters += orient(rng) ? base : static_cast<char>(std::toupper(base));
  }
  std::string word(letters);
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::shuffle(word.begin(), word.end(), rng);
    bool reduced = true;
    const int n = static_cast<int>(word.size());
    for (int i = 0; i < n; ++i) {
      const char a = word[i];
      const char b = word[(i + 1) % n];
      if (a != b && std::tolower(a) == std::tolower(b)) reduced = false;
    }
    if (!reduced) continue;
    std::string gen_list;
    for (int g = 0; g < gens; ++g) {
      if (g) gen_list += ",";
      gen_list += static_cast<char>('a' + g);
    }
    Complex2 x = builders::presentation(gen_list, {word});
    if (classify(x).classification == CurvatureClass::kFails) return std::nullopt;
    if (!free_faces(x).empty()) return std::nullopt;
    return x;
  }
  return std::nullopt;
}

/// Random weighted multigraph with up to max_nodes nodes: loops and
/// parallel arcs allowed, strictly positive rational weights.
inline LinkGraph multigraph(std::uint64_t seed, int max_nodes = 8) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(1, max_nodes);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> m_dist(0, 12);
  const int m = m_dist(rng);
  LinkGraph g;
  for (int i = 0; i < n; ++i) g.node_names.push_back("n" + std::to_string(i));
  std::uniform_int_distribution<int> node(0, n - 1);
  std::uniform_int_distribution<int> num(1, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int i = 0; i < m; ++i) {
    LinkArc arc;
    arc.node_a = node(rng);
    arc.node_b = node(rng);
    arc.length = Angle(Rat(BigInt(num(rng)), BigInt(den(rng))));
    arc.provenance = "r#" + std::to_string(i);
    g.arcs.push_back(std::move(arc));
  }
  return g;
}

}  // namespace fuzz
}  // namespace a2c
