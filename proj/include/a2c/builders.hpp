// Deterministic constructors for the canonical complexes used across the
// tests, docs, and CLI.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "a2c/complex.hpp"
#include "a2c/rational.hpp"

namespace a2c {

namespace builders {

/// Single n-gon disk with equal angles (n-2)pi/n.
inline Complex2 polygon(int n) {
  if (n < 3) throw Error("polygon needs n >= 3");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  std::vector<Face> fs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    es.push_back({"e" + std::to_string(i), vs[i], vs[(i + 1) % n]});
  Face f;
  f.id = "f";
  for (int i = 0; i < n; ++i) {
    f.boundary.push_back({es[i].id, true});
    f.corner_angles.push_back(Angle(Rat(BigInt(n - 2), BigInt(n))));
  }
  fs.push_back(std::move(f));
  return Complex2(std::move(vs), std::move(es), std::move(fs), true,
                  "polygon:" + std::to_string(n));
}

/// m x k grid of unit squares, all angles pi/2.
inline Complex2 grid(int m, int k) {
  if (m < 1 || k < 1) throw Error("grid needs m, k >= 1");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  std::vector<Face> fs;
  const auto v = [](int i, int j) {
    return "v" + std::to_string(i) + "_" + std::to_string(j);
  };
  const auto h = [](int i, int j) {
    return "h" + std::to_string(i) + "_" + std::to_string(j);
  };
  const auto u = [](int i, int j) {
    return "u" + std::to_string(i) + "_" + std::to_string(j);
  };
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= m; ++i) vs.push_back(v(i, j));
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i < m; ++i) es.push_back({h(i, j), v(i, j), v(i + 1, j)});
  for (int j = 0; j < k; ++j)
    for (int i = 0; i <= m; ++i) es.push_back({u(i, j), v(i, j), v(i, j + 1)});
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i) {
      Face f;
      f.id = "c" + std::to_string(i) + "_" + std::to_string(j);
      f.boundary = {{h(i, j), true},
                    {u(i + 1, j), true},
                    {h(i, j + 1), false},
                    {u(i, j), false}};
      f.corner_angles.assign(4, Angle::of(1, 2));
      fs.push_back(std::move(f));
    }
  return Complex2(std::move(vs), std::move(es), std::move(fs), true,
                  "grid:" + std::to_string(m) + "," + std::to_string(k));
}

/// One vertex, loops a and b, face a+ b+ a- b-, angles pi/2.
inline Complex2 torus() {
  std::vector<VertexId> vs{"v"};
  std::vector<Edge> es{{"a", "v", "v"}, {"b", "v", "v"}};
  Face f;
  f.id = "f";
  f.boundary = {{"a", true}, {"b", true}, {"a", false}, {"b", false}};
  f.corner_angles.assign(4, Angle::of(1, 2));
  return Complex2(std::move(vs), std::move(es), {std::move(f)}, false, "torus");
}

/// k >= 3 squares in a ring: vertices u_i, w_i; edges t_i, b_i, s_i; faces
/// f_i = t_i+ s_{i+1}+ b_i- s_i-, angles pi/2.
inline Complex2 cylinder(int k) {
  if (k < 3) throw Error("cylinder needs k >= 3");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  std::vector<Face> fs;
  const auto id = [](const char* p, int i) { return p + std::to_string(i); };
  for (int i = 0; i < k; ++i) vs.push_back(id("u", i));
  for (int i = 0; i < k; ++i) vs.push_back(id("w", i));
  for (int i = 0; i < k; ++i)
    es.push_back({id("t", i), id("u", i), id("u", (i + 1) % k)});
  for (int i = 0; i < k; ++i)
    es.push_back({id("b", i), id("w", i), id("w", (i + 1) % k)});
  for (int i = 0; i < k; ++i) es.push_back({id("s", i), id("u", i), id("w", i)});
  for (int i = 0; i < k; ++i) {
    Face f;
    f.id = id("f", i);
    f.boundary = {{id("t", i), true},
                  {id("s", (i + 1) % k), true},
                  {id("b", i), false},
                  {id("s", i), false}};
    f.corner_angles.assign(4, Angle::of(1, 2));
    fs.push_back(std::move(f));
  }
  return Complex2(std::move(vs), std::move(es), std::move(fs), false,
                  "cylinder:" + std::to_string(k));
}

/// k equilateral triangles (angles pi/3) fanned around one central vertex.
inline Complex2 fan_disk(int k, const std::string& source) {
  if (k < 2) throw Error("fan disk needs k >= 2");
  std::vector<VertexId> vs{"c"};
  std::vector<Edge> es;
  std::vector<Face> fs;
  const auto id = [](const char* p, int i) { return p + std::to_string(i); };
  for (int i = 0; i <= k; ++i) vs.push_back(id("r", i));
  for (int i = 0; i <= k; ++i) es.push_back({id("p", i), "c", id("r", i)});
  for (int i = 0; i < k; ++i)
    es.push_back({id("q", i), id("r", i), id("r", i + 1)});
  for (int i = 0; i < k; ++i) {
    Face f;
    f.id = id("f", i);
    f.boundary = {{id("p", i), true}, {id("q", i), true}, {id("p", i + 1), false}};
    f.corner_angles.assign(3, Angle::of(1, 3));
    fs.push_back(std::move(f));
  }
  return Complex2(std::move(vs), std::move(es), std::move(fs), true, source);
}

/// k equilateral triangles (angles pi/3) around one central vertex with the
/// rim closed up; the central link is a k-cycle of length k*pi/3, so the
/// weight test needs k >= 6.
inline Complex2 closed_fan(int k, const std::string& source) {
  if (k < 3) throw Error("closed fan needs k >= 3");
  std::vector<VertexId> vs{"c"};
  std::vector<Edge> es;
  std::vector<Face> fs;
  const auto id = [](const char* p, int i) { return p + std::to_string(i); };
  for (int i = 0; i < k; ++i) vs.push_back(id("r", i));
  for (int i = 0; i < k; ++i) es.push_back({id("p", i), "c", id("r", i)});
  for (int i = 0; i < k; ++i)
    es.push_back({id("q", i), id("r", i), id("r", (i + 1) % k)});
  for (int i = 0; i < k; ++i) {
    Face f;
    f.id = id("f", i);
    f.boundary = {{id("p", i), true},
                  {id("q", i), true},
                  {id("p", (i + 1) % k), false}};
    f.corner_angles.assign(3, Angle::of(1, 3));
    fs.push_back(std::move(f));
  }
  return Complex2(std::move(vs), std::move(es), std::move(fs), true, source);
}

/// 7 equilateral triangles around one central vertex; a negatively curved
/// disk.
inline Complex2 heptadisk() { return closed_fan(7, "heptadisk"); }

/// Boundary of the 3-simplex: 4 triangles, angles pi/3. Fails the weight
/// test (each vertex link is a triangle of length pi).
inline Complex2 tetrahedron() {
  std::vector<VertexId> vs{"a", "b", "c", "d"};
  std::vector<Edge> es{{"ab", "a", "b"}, {"ac", "a", "c"}, {"ad", "a", "d"},
                       {"bc", "b", "c"}, {"bd", "b", "d"}, {"cd", "c", "d"}};
  std::vector<Face> fs;
  const auto tri = [&](const char* id, const char* e1, bool s1, const char* e2,
                       bool s2, const char* e3, bool s3) {
    Face f;
    f.id = id;
    f.boundary = {{e1, s1}, {e2, s2}, {e3, s3}};
    f.corner_angles.assign(3, Angle::of(1, 3));
    fs.push_back(std::move(f));
  };
  tri("abc", "ab", true, "bc", true, "ac", false);
  tri("abd", "ab", true, "bd", true, "ad", false);
  tri("acd", "ac", true, "cd", true, "ad", false);
  tri("bcd", "bc", true, "cd", true, "bd", false);
  return Complex2(std::move(vs), std::move(es), std::move(fs), false,
                  "tetrahedron");
}

/// Presentation complex: one vertex, a loop per generator, one face per
/// relator with equal angles. Generators are single lowercase letters;
/// uppercase letters denote inverses. Relators shorter than 3 letters are
/// rejected (no positive equal angles exist for them).
inline Complex2 presentation(const std::string& generators,
                             const std::vector<std::string>& relators) {
  std::vector<VertexId> vs{"v"};
  std::vector<Edge> es;
  std::vector<Face> fs;
  std::unordered_set<char> gens;
  for (char g : generators) {
    if (g == ',' || std::isspace(static_cast<unsigned char>(g))) continue;
    if (!std::islower(static_cast<unsigned char>(g)))
      throw Error("presentation generators must be lowercase letters");
    if (gens.insert(g).second) es.push_back({std::string(1, g), "v", "v"});
  }
  int face_no = 0;
  for (const auto& relator : relators) {
    Face f;
    f.id = "R" + std::to_string(face_no++);
    for (char ch : relator) {
      const char low = static_cast<char>(std::tolower(ch));
      if (!gens.count(low))
        throw Error(std::string("relator uses unknown generator '") + low + "'");
      f.boundary.push_back({std::string(1, low),
                            std::islower(static_cast<unsigned char>(ch)) != 0});
    }
    const int n = f.side_count();
    if (n < 3)
      throw Error("relator '" + relator +
                  "' is shorter than 3 letters; no positive equal angles "
                  "sum to (n-2)pi");
    f.corner_angles.assign(n, Angle(Rat(BigInt(n - 2), BigInt(n))));
    fs.push_back(std::move(f));
  }
  return Complex2(std::move(vs), std::move(es), std::move(fs), false,
                  "presentation");
}

}  // namespace builders

/// Builds a complex from a spec string:
///   polygon:n | grid:m,k | torus | cylinder:k | heptadisk | tetrahedron |
///   presentation:<gens>|<relators>
inline Complex2 build(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  const auto parse_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw Error("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw Error("bad builder parameter '" + s + "' in spec '" + spec + "'");
    }
  };

  if (name == "polygon") return builders::polygon(parse_int(args));
  if (name == "grid") {
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw Error("grid spec needs m,k (got '" + spec + "')");
    return builders::grid(parse_int(args.substr(0, comma)),
                          parse_int(args.substr(comma + 1)));
  }
  if (name == "torus") return builders::torus();
  if (name == "cylinder") return builders::cylinder(parse_int(args));
  if (name == "heptadisk") return builders::heptadisk();
  if (name == "tetrahedron") return builders::tetrahedron();
  if (name == "presentation") {
    const auto bar = args.find('|');
    if (bar == std::string::npos)
      throw Error("presentation spec needs <gens>|<relators>");
    std::vector<std::string> relators;
    std::string current;
    for (char c : args.substr(bar + 1)) {
      if (c == ',') {
        if (!current.empty()) relators.push_back(current);
        current.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        current += c;
      }
    }
    if (!current.empty()) relators.push_back(current);
    return builders::presentation(args.substr(0, bar), relators);
  }
  throw Error("unknown builder spec '" + spec + "'");
}

}  // namespace a2c
