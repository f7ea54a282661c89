// A2C text format: one declaration per line, '#' comments.
//
//   vertex <id>
//   edge <id> <tail-vertex> <head-vertex>
//   face <id> : <edge-ref>+ angles: <angle>+
//   meta disk_diagram true|false
//
// where <edge-ref> is <edge-id>+ or <edge-id>-, and <angle> is p/q or p,
// meaning (p/q)*pi with p,q > 0. Decimal angles are rejected, never rounded.
#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "a2c/complex.hpp"
#include "a2c/rational.hpp"

namespace a2c {

class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

namespace detail {

struct Token {
  std::string text;
  int col = 0;
};

inline std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

inline bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline Angle parse_angle_token(const Token& tok, int line) {
  for (char c : tok.text)
    if (c == '.')
      throw ParseError(line, tok.col,
                       "decimal angle '" + tok.text +
                           "' rejected; use an exact rational p/q");
  Rat r;
  try {
    r = rat_from_string(tok.text);
  } catch (const Error& e) {
    throw ParseError(line, tok.col, std::string("bad angle: ") + e.what());
  }
  if (r <= 0)
    throw ParseError(line, tok.col,
                     "non-positive angle '" + tok.text + "'");
  return Angle(r);
}

}  // namespace detail

/// Parses an A2C document. With allow_bare_faces, a face line may omit the
/// "angles:" clause; such faces get equal angles (n-2)pi/n (the placeholder
/// the angle solver starts from).
inline Complex2 parse_a2c(const std::string& text, bool allow_bare_faces = false) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  bool disk_diagram = false;
  std::unordered_set<std::string> vertex_ids, edge_ids, face_ids;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    const auto& kw = tokens[0];

    if (kw.text == "vertex") {
      if (tokens.size() != 2)
        throw ParseError(line_no, kw.col, "expected: vertex <id>");
      const auto& id = tokens[1];
      if (!detail::valid_id(id.text))
        throw ParseError(line_no, id.col, "bad identifier '" + id.text + "'");
      if (!vertex_ids.insert(id.text).second)
        throw ParseError(line_no, id.col,
                         "duplicate vertex id '" + id.text + "'");
      vertices.push_back(id.text);
    } else if (kw.text == "edge") {
      if (tokens.size() != 4)
        throw ParseError(line_no, kw.col, "expected: edge <id> <tail> <head>");
      const auto& id = tokens[1];
      if (!detail::valid_id(id.text))
        throw ParseError(line_no, id.col, "bad identifier '" + id.text + "'");
      if (!edge_ids.insert(id.text).second)
        throw ParseError(line_no, id.col, "duplicate edge id '" + id.text + "'");
      for (int k = 2; k <= 3; ++k)
        if (!vertex_ids.count(tokens[k].text))
          throw ParseError(line_no, tokens[k].col,
                           "unknown vertex '" + tokens[k].text + "'");
      edges.push_back({id.text, tokens[2].text, tokens[3].text});
    } else if (kw.text == "face") {
      if (tokens.size() < 4 || tokens[2].text != ":")
        throw ParseError(line_no, kw.col,
                         "expected: face <id> : <edge-ref>+ [angles: <angle>+]");
      const auto& id = tokens[1];
      if (!detail::valid_id(id.text))
        throw ParseError(line_no, id.col, "bad identifier '" + id.text + "'");
      if (!face_ids.insert(id.text).second)
        throw ParseError(line_no, id.col, "duplicate face id '" + id.text + "'");

      Face face;
      face.id = id.text;
      std::size_t k = 3;
      for (; k < tokens.size() && tokens[k].text != "angles:"; ++k) {
        const auto& t = tokens[k];
        if (t.text.size() < 2)
          throw ParseError(line_no, t.col, "bad edge ref '" + t.text + "'");
        const char sign = t.text.back();
        if (sign != '+' && sign != '-')
          throw ParseError(line_no, t.col,
                           "edge ref '" + t.text + "' must end in + or -");
        const std::string eid = t.text.substr(0, t.text.size() - 1);
        if (!edge_ids.count(eid))
          throw ParseError(line_no, t.col, "unknown edge '" + eid + "'");
        face.boundary.push_back({eid, sign == '+'});
      }
      const int n = face.side_count();
      if (n == 0)
        throw ParseError(line_no, kw.col, "face '" + face.id + "' has no edges");

      if (k == tokens.size()) {
        if (!allow_bare_faces)
          throw ParseError(line_no, kw.col,
                           "face '" + face.id + "' is missing its angles: clause");
        if (n < 3)
          throw ParseError(line_no, kw.col,
                           "face '" + face.id +
                               "' has fewer than 3 sides; no positive equal "
                               "angles sum to (n-2)pi");
        const Angle equal = Angle(Rat(BigInt(n - 2), BigInt(n)));
        face.corner_angles.assign(n, equal);
      } else {
        ++k;  // past "angles:"
        for (; k < tokens.size(); ++k)
          face.corner_angles.push_back(detail::parse_angle_token(tokens[k], line_no));
        if (static_cast<int>(face.corner_angles.size()) != n)
          throw ParseError(line_no, kw.col,
                           "face '" + face.id + "' lists " +
                               std::to_string(face.corner_angles.size()) +
                               " angles for " + std::to_string(n) + " edges");
        Angle sum = Angle::zero();
        for (const auto& a : face.corner_angles) sum += a;
        if (sum != Angle::of(n - 2))
          throw ParseError(line_no, kw.col,
                           "angle-sum violation in face '" + face.id +
                               "': angles sum to " + sum.str() +
                               "*pi, expected " + Angle::of(n - 2).str() + "*pi");
      }
      faces.push_back(std::move(face));
    } else if (kw.text == "meta") {
      if (tokens.size() != 3 || tokens[1].text != "disk_diagram" ||
          (tokens[2].text != "true" && tokens[2].text != "false"))
        throw ParseError(line_no, kw.col,
                         "expected: meta disk_diagram true|false");
      disk_diagram = tokens[2].text == "true";
    } else {
      throw ParseError(line_no, kw.col, "unknown declaration '" + kw.text + "'");
    }
  }

  return Complex2(std::move(vertices), std::move(edges), std::move(faces),
                  disk_diagram, "a2c");
}

/// Serializes to A2C; parse_a2c(serialize_a2c(x)) reproduces x structurally.
inline std::string serialize_a2c(const Complex2& x) {
  std::ostringstream out;
  for (const auto& v : x.vertices()) out << "vertex " << v << "\n";
  for (const auto& e : x.edges())
    out << "edge " << e.id << " " << e.tail << " " << e.head << "\n";
  for (const auto& f : x.faces()) {
    out << "face " << f.id << " :";
    for (const auto& d : f.boundary)
      out << " " << d.edge << (d.forward ? "+" : "-");
    out << " angles:";
    for (const auto& a : f.corner_angles) out << " " << a.str();
    out << "\n";
  }
  if (x.is_disk_diagram()) out << "meta disk_diagram true\n";
  return out.str();
}

/// Structural equality: same cells in the same order with the same data.
inline bool structurally_equal(const Complex2& a, const Complex2& b) {
  if (a.vertices() != b.vertices()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    const auto& ea = a.edges()[i];
    const auto& eb = b.edges()[i];
    if (ea.id != eb.id || ea.tail != eb.tail || ea.head != eb.head) return false;
  }
  if (a.faces().size() != b.faces().size()) return false;
  for (std::size_t i = 0; i < a.faces().size(); ++i) {
    const auto& fa = a.faces()[i];
    const auto& fb = b.faces()[i];
    if (fa.id != fb.id || fa.boundary.size() != fb.boundary.size()) return false;
    for (std::size_t j = 0; j < fa.boundary.size(); ++j)
      if (!(fa.boundary[j] == fb.boundary[j])) return false;
    if (fa.corner_angles != fb.corner_angles) return false;
  }
  return a.is_disk_diagram() == b.is_disk_diagram();
}

}  // namespace a2c
